import random

import pytest

from graphisol.graphs import Graph, from_edges


def random_mask_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def random_connected(rng: random.Random, n: int, p: float, max_degree: int | None = None) -> Graph:
    """Random connected graph: a degree-capped spanning tree plus extra edges."""
    while True:
        deg = [0] * n
        edges = []
        perm = list(range(n))
        rng.shuffle(perm)
        ok = True
        for i in range(1, n):
            candidates = [perm[j] for j in range(i) if max_degree is None or deg[perm[j]] < max_degree]
            if not candidates:
                ok = False
                break
            u, v = perm[i], rng.choice(candidates)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        if not ok:
            continue
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
                        continue
                    if (u, v) in edges or (v, u) in edges:
                        continue
                    edges.append((u, v))
                    deg[u] += 1
                    deg[v] += 1
        g = from_edges(n, edges)
        if g.is_connected():
            return g


def relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return from_edges(a.n + b.n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC41507)
