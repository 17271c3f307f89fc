"""Oracle-versus-formula comparison for one perfect tree at a time."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import exactcount as ec
from . import oracle


@dataclass(frozen=True)
class Mismatch:
    shape: str
    t: int
    formula: str
    expected: int  # formula value
    observed: int  # oracle value

    def __str__(self) -> str:
        return f"{self.shape} t={self.t} {self.formula}: formula={self.expected} oracle={self.observed}"


@dataclass
class ShapeReport:
    shape: str
    n: int
    checks: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        tail = "" if self.ok else f" mismatches={len(self.mismatches)}"
        return f"{status} {self.shape} n={self.n} checks={self.checks}{tail}"

    def expect(self, t: int, formula: str, expected: int, observed: int) -> None:
        self.checks += 1
        if expected != observed:
            self.mismatches.append(Mismatch(self.shape, t, formula, expected, observed))


def verify_rooted(m: int, r: int, budget: int = oracle.DEFAULT_VERTEX_BUDGET,
                  *, types: bool = True, workers: int = 1) -> ShapeReport:
    tree = oracle.build_rooted(m, r, budget)
    shape = ec.RootedShape(m, r)
    rep = ShapeReport(f"rooted m={m} r={r}", tree.n)
    hist = oracle.distance_histogram(tree, workers=workers)
    top = 2 * r
    rep.expect(0, "vertex count", ec.vr(m, r), tree.n)
    for t in range(1, max(top, hist.max_distance) + 2):
        rep.expect(t, "prop", ec.rooted_count_prop(shape, t), hist[t])
        if t <= top:
            rep.expect(t, "theorem", ec.rooted_count_theorem(shape, t), hist[t])
    rep.expect(0, "closure", ec.pair_total(tree.n), hist.total())
    rep.expect(0, "formula closure", ec.pair_total(ec.vr(m, r)),
               sum(ec.rooted_count_prop(shape, t) for t in range(1, top + 1)))
    _degree_checks(rep, tree, hist)
    if types:
        census = oracle.type_census(tree)
        for t in range(1, top + 1):
            seen = census.get(t, {})
            for d in range(r + 1):
                for s in range(t // 2 + 1):
                    lemma = m**d * ec.type_path_count(ec.RootedShape(m, r - d), s, t)
                    rep.expect(t, f"type[{s},{t - s}]@depth{d}", lemma, seen.get((d, s), 0))
    return rep


def verify_unrooted(m: int, D: int, budget: int = oracle.DEFAULT_VERTEX_BUDGET,
                    *, workers: int = 1) -> ShapeReport:
    tree = oracle.build_unrooted(m, D, budget)
    shape = ec.UnrootedShape(m, D)
    rep = ShapeReport(f"unrooted m={m} D={D}", tree.n)
    hist = oracle.distance_histogram(tree, workers=workers)
    rep.expect(0, "vertex count", ec.vu(m, D), tree.n)
    for t in range(1, max(D, hist.max_distance) + 2):
        rep.expect(t, "prop", ec.unrooted_count_prop(shape, t), hist[t])
        if t <= D:
            rep.expect(t, "theorem", ec.unrooted_count_theorem(shape, t), hist[t])
    rep.expect(0, "closure", ec.pair_total(tree.n), hist.total())
    rep.expect(0, "formula closure", ec.pair_total(ec.vu(m, D)),
               sum(ec.unrooted_count_prop(shape, t) for t in range(1, D + 1)))
    _degree_checks(rep, tree, hist)
    if D >= 1:
        r1, r2 = ec.half_depths(shape)
        cross = oracle.cross_half_histogram(tree)
        for t in range(1, D + 2):
            bridge = ec.bridge_path_count(shape, t)
            rep.expect(t, "bridge census", bridge, cross.get(t, 0))
            split = (ec.rooted_count_prop(ec.RootedShape(m, r1), t)
                     + ec.rooted_count_prop(ec.RootedShape(m, r2), t) + bridge)
            rep.expect(t, "bridge decomposition", split, hist[t])
        rep.expect(0, "leaf count", ec.unrooted_leaf_count(shape), tree.degrees().count(1))
    if m == 2 and D >= 3:
        n_leaves = ec.unrooted_leaf_count(shape)
        for t in range(3, D + 1):
            rep.expect(t, "dejong", ec.dejong_binary(n_leaves, t, D), hist[t])
    return rep


def _degree_checks(rep: ShapeReport, tree: oracle.ExplicitTree,
                   hist: oracle.DistanceHistogram) -> None:
    for t, value in enumerate(oracle.degree_formula_counts(tree), 1):
        rep.expect(t, "degree formula", value, hist[t])


def grid(m_min: int, m_max: int, max_depth: int, max_diameter: int,
         budget: int) -> Iterator[tuple[str, int, int]]:
    """In-budget shapes in deterministic order: per m, rooted then unrooted."""
    for m in range(m_min, m_max + 1):
        for r in range(max_depth + 1):
            if sum(m**s for s in range(r + 1)) <= budget:
                yield "rooted", m, r
        for D in range(max_diameter + 1):
            if ec.vu(m, D) <= budget:
                yield "unrooted", m, D


def run_grid(m_min: int = 2, m_max: int = 5, max_depth: int = 5, max_diameter: int = 10,
             budget: int = oracle.DEFAULT_VERTEX_BUDGET,
             workers: int = 1) -> Iterator[ShapeReport]:
    for kind, m, size in grid(m_min, m_max, max_depth, max_diameter, budget):
        if kind == "rooted":
            yield verify_rooted(m, size, budget, workers=workers)
        else:
            yield verify_unrooted(m, size, budget, workers=workers)
