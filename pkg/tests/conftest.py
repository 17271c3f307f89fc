import pytest

_results: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    cid, text = marker.args
    failed = report.failed or (report.when == "call" and report.outcome != "passed")
    if failed:
        _results[cid] = ("FAIL", text)
    elif report.when == "call":
        _results.setdefault(cid, ("PASS", text))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c.lstrip("AC"))):
        status, text = _results[cid]
        terminalreporter.write_line(f"{cid:<5} {status}  {text}")
