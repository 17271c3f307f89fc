"""Brute-force ground truth: explicit perfect trees and BFS distance counts.

Nothing here uses the closed forms in :mod:`treepaths.exactcount`. Trees are
materialized vertex by vertex and every pair distance is found by a
breadth-first search from every vertex.
"""
from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

DEFAULT_VERTEX_BUDGET = 200_000


class BudgetExceeded(ValueError):
    """Requested tree has more vertices than the configured budget."""


class NotATree(ValueError):
    pass


@dataclass
class ExplicitTree:
    """Tree on dense vertex ids ``0..n-1`` stored as adjacency lists.

    ``side`` (0 or 1 per vertex) and ``bridge`` are set only on trees built by
    :func:`build_unrooted`. ``labels`` maps ids back to input labels for
    parsed trees.
    """

    adjacency: list[list[int]]
    root: Optional[int] = None
    side: Optional[list[int]] = None
    bridge: Optional[tuple[int, int]] = None
    labels: Optional[list[str]] = None
    _nbr: Optional[np.ndarray] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.adjacency)
        if n == 0:
            raise NotATree("a tree needs at least one vertex")
        half_edges = 0
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < n or v == u:
                    raise NotATree(f"bad neighbour {v} of vertex {u}")
                half_edges += 1
        if half_edges != 2 * (n - 1):
            raise NotATree(f"{n} vertices need {n - 1} edges, found {half_edges / 2:g}")
        adj_sets = [set(nbrs) for nbrs in self.adjacency]
        for u, nbrs in enumerate(adj_sets):
            if len(nbrs) != len(self.adjacency[u]):
                raise NotATree(f"repeated neighbour at vertex {u}")
            for v in nbrs:
                if u not in adj_sets[v]:
                    raise NotATree(f"adjacency not symmetric at edge ({u}, {v})")
        if -1 in bfs_distances(self, 0):
            raise NotATree("graph is disconnected")
        if self.root is not None and not 0 <= self.root < n:
            raise NotATree(f"root {self.root} out of range")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def neighbour_table(self) -> np.ndarray:
        """``(n + 1, maxdeg)`` neighbour ids padded with the sentinel ``n``."""
        if self._nbr is None:
            n = self.n
            width = max(1, max(self.degrees()))
            table = np.full((n + 1, width), n, dtype=np.int64)
            for u, nbrs in enumerate(self.adjacency):
                table[u, : len(nbrs)] = nbrs
            self._nbr = table
        return self._nbr


@dataclass
class DistanceHistogram:
    """Unordered pair counts keyed by distance ``t >= 1``.

    ``cutoff`` is set when only distances up to it were counted.
    """

    n: int
    counts: dict[int, int]
    cutoff: Optional[int] = None

    def __getitem__(self, t: int) -> int:
        return self.counts.get(t, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_distance(self) -> int:
        return max(self.counts, default=0)


def bfs_distances(tree: ExplicitTree, source: int) -> list[int]:
    """Plain BFS; entries for unreachable vertices are -1."""
    dist = [-1] * len(tree.adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in tree.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _bfs_levels(table: np.ndarray, source: int, cutoff: Optional[int] = None):
    """Yield ``(level, vertices)`` for levels 1, 2, ... from ``source``.

    In a tree each vertex at level L+1 has exactly one neighbour at level L,
    so a level never contains duplicates.
    """
    n = table.shape[0] - 1
    seen = np.zeros(n + 1, dtype=bool)
    seen[n] = True
    seen[source] = True
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size and (cutoff is None or level < cutoff):
        cand = table[frontier].ravel()
        cand = cand[~seen[cand]]
        level += 1
        if not cand.size:
            return
        seen[cand] = True
        yield level, cand
        frontier = cand


def _ordered_counts(table: np.ndarray, sources: Sequence[int], cutoff: Optional[int]) -> np.ndarray:
    n = table.shape[0] - 1
    acc = np.zeros(n + 1, dtype=np.int64)
    for src in sources:
        for level, verts in _bfs_levels(table, src, cutoff):
            acc[level] += verts.size
    return acc


def distance_histogram(
    tree: ExplicitTree, *, cutoff: Optional[int] = None, workers: int = 1
) -> DistanceHistogram:
    """Count pairs at each distance by running BFS from every vertex.

    Ordered pairs are counted and then halved. With ``cutoff`` only distances
    ``<= cutoff`` are counted. ``workers > 1`` splits the sources over worker
    processes; the merged result equals the sequential one.
    """
    table = tree.neighbour_table()
    n = tree.n
    if workers > 1 and n > 1:
        chunks = [range(i, n, workers) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_ordered_counts, [table] * workers, chunks, [cutoff] * workers))
        ordered = sum(parts[1:], parts[0])
    else:
        ordered = _ordered_counts(table, range(n), cutoff)
    counts = {}
    for t in np.flatnonzero(ordered):
        c = int(ordered[t])
        if c % 2:
            raise AssertionError(f"odd ordered-pair count {c} at distance {t}")
        counts[int(t)] = c // 2
    return DistanceHistogram(n=n, counts=counts, cutoff=cutoff)


def _depths(tree: ExplicitTree) -> np.ndarray:
    if tree.root is None:
        raise ValueError("type histograms need a rooted tree")
    return np.asarray(bfs_distances(tree, tree.root), dtype=np.int64)


def type_census(tree: ExplicitTree, t: Optional[int] = None) -> dict[int, Counter]:
    """Classify every pair by path type.

    Returns ``{t: Counter({(top_depth, s): count})}`` where ``top_depth`` is the
    depth of the path's vertex nearest the root and ``s`` is the shorter of
    the two descents from it. Only length ``t`` is scanned when given.
    """
    depth = _depths(tree)
    table = tree.neighbour_table()
    width = int(depth.max()) + 1
    # acc[level, top_depth * width + s]
    acc = np.zeros((2 * width, width * width), dtype=np.int64)
    for src in range(tree.n):
        for level, verts in _bfs_levels(table, src, cutoff=t):
            if t is not None and level != t:
                continue
            verts = verts[verts > src]
            if not verts.size:
                continue
            twice_top = depth[src] + depth[verts] - level
            if np.any(twice_top % 2):
                raise AssertionError("path top depth is not an integer")
            top = twice_top // 2
            s = np.minimum(depth[src], depth[verts]) - top
            acc[level] += np.bincount(top * width + s, minlength=width * width)
    census: dict[int, Counter] = {}
    for level, key in zip(*np.nonzero(acc)):
        d, s = divmod(int(key), width)
        census.setdefault(int(level), Counter())[(d, s)] = int(acc[level, key])
    return census


def type_histogram(tree: ExplicitTree, t: int) -> dict[int, int]:
    """Pairs at distance ``t`` keyed by type index ``s`` (shorter descent)."""
    if t < 1:
        raise ValueError(f"path length t must be >= 1, got {t}")
    hist: Counter = Counter()
    for (_, s), c in type_census(tree, t).get(t, Counter()).items():
        hist[s] += c
    return dict(sorted(hist.items()))


def cross_half_histogram(tree: ExplicitTree) -> dict[int, int]:
    """Pairs at each distance whose endpoints lie in different halves."""
    if tree.side is None:
        raise ValueError("tree carries no half markers")
    side = np.asarray(tree.side + [0], dtype=bool)
    table = tree.neighbour_table()
    acc: Counter = Counter()
    for src in range(tree.n):
        if side[src]:
            continue
        for level, verts in _bfs_levels(table, src):
            c = int(np.count_nonzero(side[verts]))
            if c:
                acc[level] += c
    return dict(sorted(acc.items()))


def degree_formula_counts(tree: ExplicitTree) -> tuple[int, int, int]:
    """Pairs at distance 1, 2 and 3 from the degree sequence alone."""
    deg = tree.degrees()
    p1 = sum(1 for _ in tree.edges())
    p2 = sum(d * (d - 1) // 2 for d in deg)
    p3 = sum((deg[u] - 1) * (deg[v] - 1) for u, v in tree.edges())
    return p1, p2, p3


def eccentricities(tree: ExplicitTree) -> list[int]:
    """Exact eccentricity of each vertex, one BFS per vertex."""
    table = tree.neighbour_table()
    ecc = []
    for src in range(tree.n):
        last = 0
        for level, _ in _bfs_levels(table, src):
            last = level
        ecc.append(last)
    return ecc


def _check_budget(n: int, budget: int) -> None:
    if n > budget:
        raise BudgetExceeded(f"tree would have {n} vertices, budget is {budget}")


def _rooted_size(m: int, r: int) -> int:
    return sum(m**s for s in range(r + 1))


def _check_shape(m: int, size: int, what: str) -> None:
    if m < 2:
        raise ValueError(f"branching factor m must be >= 2, got {m}")
    if size < 0:
        raise ValueError(f"{what} must be >= 0, got {size}")


def _heap_adjacency(m: int, n: int, offset: int = 0) -> list[list[int]]:
    # level order: the parent of vertex i > 0 is (i - 1) // m
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n):
        p = (i - 1) // m
        adj[i].append(p + offset)
        adj[p].append(i + offset)
    return adj


def build_rooted(m: int, r: int, budget: int = DEFAULT_VERTEX_BUDGET) -> ExplicitTree:
    """Perfect rooted m-ary tree of depth ``r`` with ids in level order (root 0)."""
    _check_shape(m, r, "depth")
    n = _rooted_size(m, r)
    _check_budget(n, budget)
    return ExplicitTree(_heap_adjacency(m, n), root=0)


def build_unrooted(m: int, D: int, budget: int = DEFAULT_VERTEX_BUDGET) -> ExplicitTree:
    """Perfect unrooted m-ary tree of diameter ``D``.

    For ``D >= 1`` the tree is two perfect rooted halves (depths ``r-1, r-1``
    when ``D = 2r - 1``, ``r, r-1`` when ``D = 2r``) whose roots, vertices 0
    and ``n1``, are joined by the bridge edge.
    """
    _check_shape(m, D, "diameter")
    if D == 0:
        return ExplicitTree([[]])
    r = (D + 1) // 2 if D % 2 else D // 2
    r1, r2 = (r - 1, r - 1) if D % 2 else (r, r - 1)
    n1, n2 = _rooted_size(m, r1), _rooted_size(m, r2)
    _check_budget(n1 + n2, budget)
    adj = _heap_adjacency(m, n1) + _heap_adjacency(m, n2, offset=n1)
    adj[0].append(n1)
    adj[n1].append(0)
    tree = ExplicitTree(adj, side=[0] * n1 + [1] * n2, bridge=(0, n1))
    # double sweep; exact on trees
    far = max(range(tree.n), key=bfs_distances(tree, 0).__getitem__)
    if max(bfs_distances(tree, far)) != D:
        raise AssertionError(f"built tree does not have diameter {D}")
    return tree
