"""Isomorphism testing for small graphs.

Strategy: degree-sequence prefilter, then iterated partition refinement by
neighbour-colour multisets, then backtracking restricted to matching colour
classes.  Intended scale is n <= 16; everything here also runs on raw
``(n, adj)`` pairs so hot loops can skip Graph construction.
"""

from __future__ import annotations

from .graphs import Graph, bits


def refine_colors(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Stable vertex colouring from iterated neighbour-colour refinement.

    Colour ids are ranks of sorted signatures, so isomorphic graphs get
    identical colour multisets (and corresponding vertices equal colours).
    """
    colors = [row.bit_count() for row in adj]
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [order[sig] for sig in sigs]
        if len(order) == ncolors:
            return tuple(colors)
        ncolors = len(order)


def _match(n: int, adj_a: tuple[int, ...], adj_b: tuple[int, ...],
           col_a: tuple[int, ...], col_b: tuple[int, ...]) -> list[int] | None:
    """Backtracking colour-respecting isomorphism; returns the map a->b or None."""
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(col_b[w], []).append(w)

    # visit order: most-constrained first (small colour class), then follow edges
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        for v in range(n):
            if v in order:
                continue
            anchored = sum(1 for u in bits(adj_a[v]) if u in order)
            key = (-anchored, len(by_color[col_a[v]]), v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        placed += 1

    mapping = [-1] * n
    used = [False] * n

    def dfs(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in by_color[col_a[v]]:
            if used[w]:
                continue
            ok = True
            for j in range(pos):
                u = order[j]
                if (adj_a[v] >> u & 1) != (adj_b[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if dfs(pos + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return mapping if dfs(0) else None


def isomorphic_raw(n_a: int, adj_a: tuple[int, ...], n_b: int, adj_b: tuple[int, ...]) -> bool:
    if n_a != n_b:
        return False
    if sum(r.bit_count() for r in adj_a) != sum(r.bit_count() for r in adj_b):
        return False
    if sorted(r.bit_count() for r in adj_a) != sorted(r.bit_count() for r in adj_b):
        return False
    col_a = refine_colors(n_a, adj_a)
    col_b = refine_colors(n_b, adj_b)
    if sorted(col_a) != sorted(col_b):
        return False
    return _match(n_a, adj_a, adj_b, col_a, col_b) is not None


def isomorphic(a: Graph, b: Graph) -> bool:
    """True iff an edge-preserving bijection V(a) -> V(b) exists."""
    return isomorphic_raw(a.n, a.adj, b.n, b.adj)


def find_isomorphism(a: Graph, b: Graph) -> tuple[int, ...] | None:
    """An explicit vertex map a->b when the graphs are isomorphic, else None."""
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    col_a = refine_colors(a.n, a.adj)
    col_b = refine_colors(b.n, b.adj)
    if sorted(col_a) != sorted(col_b):
        return None
    m = _match(a.n, a.adj, b.adj, col_a, col_b)
    return tuple(m) if m is not None else None


# ---------------------------------------------------------------------------
# invariants used by the catalog enumerator's duplicate detection
# ---------------------------------------------------------------------------

def invariant_key(n: int, adj: tuple[int, ...]) -> tuple:
    """Isomorphism-invariant key; unequal keys imply non-isomorphic graphs."""
    colors = refine_colors(n, adj)
    hist = tuple(sorted((colors.count(c), c) for c in set(colors)))
    common = sorted(
        ((adj[u] >> v & 1), (adj[u] & adj[v]).bit_count())
        for u in range(n) for v in range(u + 1, n)
    )
    return (n, sum(r.bit_count() for r in adj) // 2, hist, tuple(common))


def canonical_bits_if_rigid(n: int, adj: tuple[int, ...]) -> int | None:
    """Canonical upper-triangle bit integer when refinement is discrete.

    Discreteness is itself isomorphism-invariant, so rigid graphs can be
    deduplicated by this exact key; returns None for symmetric graphs.
    """
    colors = refine_colors(n, adj)
    if len(set(colors)) != n:
        return None
    perm = sorted(range(n), key=lambda v: colors[v])
    bits_out = 0
    for j in range(1, n):
        for i in range(j):
            bits_out = bits_out << 1 | (adj[perm[i]] >> perm[j] & 1)
    return bits_out
