"""Edge-list parsing, perfect-tree classification and histogram output."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .oracle import DistanceHistogram, ExplicitTree, bfs_distances

FORMATS = ("csv", "json", "plain")


class TreeParseError(ValueError):
    """Malformed or non-tree edge list; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


class _Components:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> None:
        self.parent.append(len(self.parent))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def parse_edge_list(text: str | Iterable[str]) -> ExplicitTree:
    """Parse ``u v`` lines into a validated tree.

    Labels are arbitrary whitespace-free tokens; ids are assigned in order of
    first appearance. ``#`` starts a comment, blank lines are skipped, and
    ``solo <label>`` declares a vertex without an edge (the only way to
    write a one-vertex tree).
    """
    lines = text.splitlines() if isinstance(text, str) else text
    ids: dict[str, int] = {}
    first_seen: list[int] = []
    adjacency: list[list[int]] = []
    comps = _Components()

    def vertex(label: str, lineno: int) -> int:
        if label not in ids:
            ids[label] = len(ids)
            first_seen.append(lineno)
            adjacency.append([])
            comps.add()
        return ids[label]

    last = 0
    for lineno, raw in enumerate(lines, 1):
        last = lineno
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if body[0] == "solo":
            if len(body) != 2:
                raise TreeParseError(lineno, f"expected 'solo <label>', got {raw.strip()!r}")
            vertex(body[1], lineno)
            continue
        if len(body) != 2:
            raise TreeParseError(lineno, f"expected two vertex labels, got {raw.strip()!r}")
        a, b = body
        if a == b:
            raise TreeParseError(lineno, f"self-loop at vertex {a!r}")
        u, v = vertex(a, lineno), vertex(b, lineno)
        if v in adjacency[u]:
            raise TreeParseError(lineno, f"duplicate edge {a} {b}")
        if not comps.union(u, v):
            raise TreeParseError(lineno, "not a tree: cycle detected")
        adjacency[u].append(v)
        adjacency[v].append(u)

    if not adjacency:
        raise TreeParseError(max(last, 1), "no vertices in input")
    root0 = comps.find(0)
    for x in range(len(adjacency)):
        if comps.find(x) != root0:
            raise TreeParseError(first_seen[x], "not a tree: disconnected")
    return ExplicitTree(adjacency, labels=list(ids))


def emit_edge_list(tree: ExplicitTree) -> str:
    labels = tree.labels or [str(i) for i in range(tree.n)]
    if tree.n == 1:
        return f"solo {labels[0]}\n"
    return "".join(f"{labels[u]} {labels[v]}\n" for u, v in tree.edges())


@dataclass
class TreeClassification:
    """How a tree fits the perfect m-ary definitions.

    ``is_mary_for`` prefers the unrooted reading (all degrees 1 or m+1) and
    falls back to the rooted one (a single vertex of degree m).
    """

    diameter: int
    degree_census: dict[int, int] = field(default_factory=dict)
    is_mary_for: Optional[int] = None
    perfect_rooted: Optional[tuple[int, int, int]] = None
    perfect_unrooted: Optional[tuple[int, int]] = None

    def summary(self) -> str:
        parts = []
        if self.perfect_unrooted:
            parts.append("perfect unrooted m={} D={}".format(*self.perfect_unrooted))
        if self.perfect_rooted:
            parts.append("perfect rooted m={} r={} root={}".format(*self.perfect_rooted))
        if not parts:
            parts.append("not perfect m-ary" if self.is_mary_for is None
                         else f"m-ary (m={self.is_mary_for}), not perfect")
        return "; ".join(parts) + f" (diameter {self.diameter})"


def _double_sweep(tree: ExplicitTree) -> tuple[int, list[int], list[int]]:
    d0 = bfs_distances(tree, 0)
    a = max(range(tree.n), key=d0.__getitem__)
    da = bfs_distances(tree, a)
    b = max(range(tree.n), key=da.__getitem__)
    return da[b], da, bfs_distances(tree, b)


def _rooted_depth(tree: ExplicitTree, root: int, m: int) -> Optional[int]:
    deg = tree.degrees()
    if deg[root] != m:
        return None
    depth = bfs_distances(tree, root)
    leaf_depths = {depth[v] for v in range(tree.n) if v != root and deg[v] == 1}
    if len(leaf_depths) != 1:
        return None
    if any(deg[v] not in (1, m + 1) for v in range(tree.n) if v != root):
        return None
    return leaf_depths.pop()


def classify(tree: ExplicitTree, m: Optional[int] = None) -> TreeClassification:
    """Check ``tree`` against the perfect rooted and unrooted definitions.

    The branching factor is read off the degrees. A single vertex or a single
    edge fits every m; pass ``m`` to classify such trees.
    """
    deg = tree.degrees()
    census = dict(sorted(Counter(deg).items()))
    diameter, da, db = _double_sweep(tree)
    out = TreeClassification(diameter=diameter, degree_census=census)
    if m is not None and m < 2:
        return out
    inner = {d for d in deg if d > 1}

    # unrooted: inner degrees all equal m+1, every leaf reaches the diameter
    um = m if m is not None else (min(inner) - 1 if len(inner) == 1 else None)
    if um is not None and um >= 2 and inner <= {um + 1}:
        # eccentricity of v is max(d(v, a), d(v, b)) for diameter ends a, b
        if all(max(da[v], db[v]) == diameter for v in range(tree.n) if deg[v] <= 1):
            out.perfect_unrooted = (um, diameter)
        out.is_mary_for = um

    # rooted: the unique vertex of degree m is the root
    if tree.n == 1:
        if m is not None:
            out.perfect_rooted = (m, 0, 0)
    else:
        rm = m
        if rm is None:
            if len(inner) == 1:
                rm = min(inner)
            elif len(inner) == 2 and max(inner) == min(inner) + 1:
                rm = min(inner)
        if rm is not None and rm >= 2:
            roots = [v for v in range(tree.n) if deg[v] == rm]
            if len(roots) == 1:
                r = _rooted_depth(tree, roots[0], rm)
                if r is not None:
                    out.perfect_rooted = (rm, r, roots[0])
                    if out.is_mary_for is None:
                        out.is_mary_for = rm
    return out


def emit_histogram(h: DistanceHistogram, format: str = "csv") -> str:
    """Serialize ``h``; counts are always plain decimal strings."""
    rows = sorted(h.counts.items())
    if format == "csv":
        return "t,count\n" + "".join(f"{t},{c}\n" for t, c in rows)
    if format == "json":
        payload = {"n": h.n, "counts": {str(t): str(c) for t, c in rows}}
        return json.dumps(payload) + "\n"
    if format == "plain":
        return "".join(f"{t}: {c}\n" for t, c in rows)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
