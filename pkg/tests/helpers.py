import random

from treepaths.oracle import ExplicitTree


def random_tree(rng: random.Random, n: int, window: int | None = None) -> ExplicitTree:
    """Random recursive tree; ``window`` limits how far back a parent may be.

    Small windows give long, path-like trees, no window gives bushy ones.
    """
    adj = [[] for _ in range(n)]
    for i in range(1, n):
        lo = 0 if window is None else max(0, i - window)
        p = rng.randrange(lo, i)
        adj[i].append(p)
        adj[p].append(i)
    return ExplicitTree(adj)


def brute_histogram(tree: ExplicitTree) -> dict[int, int]:
    """Pair distances by Floyd-Warshall; tiny trees only."""
    n = tree.n
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in tree.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            out[dist[i][j]] = out.get(dist[i][j], 0) + 1
    return dict(sorted(out.items()))
