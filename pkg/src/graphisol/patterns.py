"""Pattern families for isolation, containment tests, and the nine
exceptional graphs: the three 4-vertex ones (4-cycle, diamond, 4-clique)
and the six 9-vertex ones G1..G6.

Containment is subgraph containment (monomorphism), not induced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, from_edges
from .isomorphism import isomorphic


# ---------------------------------------------------------------------------
# family specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingleCycle:
    """The family {C_k}; k=1 and k=2 denote K1 and K2 respectively."""
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"cycle length must be >= 1, got {self.k}")


@dataclass(frozen=True)
class AllCycles:
    """The family of all cycles; freedom from it is acyclicity."""


@dataclass(frozen=True)
class Clique:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"clique size must be >= 1, got {self.k}")


@dataclass(frozen=True)
class PatternList:
    patterns: tuple[Graph, ...]

    def __post_init__(self):
        for p in self.patterns:
            if p.n == 0:
                raise ValueError("empty pattern in pattern list")


FamilySpec = SingleCycle | AllCycles | Clique | PatternList

C4_FAMILY = SingleCycle(4)


def family_token(f: FamilySpec) -> str:
    """Stable text token for a family (CLI grammar; round-trips)."""
    from .graphs import encode_graph6
    if isinstance(f, SingleCycle):
        return f"ck:{f.k}" if f.k != 4 else "c4"
    if isinstance(f, AllCycles):
        return "cycles"
    if isinstance(f, Clique):
        return f"clique:{f.k}"
    if f.patterns == (DIAMOND,):
        return "diamond"
    return "patterns:" + ",".join(encode_graph6(p) for p in f.patterns)


def family_from_token(token: str) -> FamilySpec:
    from .graphs import parse_graph6
    if token == "c4":
        return SingleCycle(4)
    if token == "cycles":
        return AllCycles()
    if token == "diamond":
        return PatternList((DIAMOND,))
    if token.startswith("ck:"):
        return SingleCycle(int(token[3:]))
    if token.startswith("clique:"):
        return Clique(int(token[7:]))
    if token.startswith("patterns:"):
        return PatternList(tuple(parse_graph6(t) for t in token[9:].split(",")))
    raise ValueError(f"unknown family token {token!r}")


def family_is_cycles_min3(f: FamilySpec) -> bool:
    """True when every member of the family is a cycle of length >= 3.

    This is the hypothesis under which pendant reductions preserve the
    isolation number; K1/K2 families (cycle lengths 1 and 2) do not qualify.
    """
    if isinstance(f, AllCycles):
        return True
    if isinstance(f, SingleCycle):
        return f.k >= 3
    if isinstance(f, Clique):
        return f.k == 3
    return all(
        p.n >= 3 and p.is_connected() and all(d == 2 for d in p.degrees())
        for p in f.patterns
    )


# ---------------------------------------------------------------------------
# constructors and the fixed catalog
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(k: int) -> Graph:
    """C_k; by convention C1 = K1 and C2 = K2."""
    if k == 1:
        return from_edges(1, [])
    if k == 2:
        return from_edges(2, [(0, 1)])
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def clique(k: int) -> Graph:
    return from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _g(edges_1based: list[tuple[int, int]]) -> Graph:
    return from_edges(9, [(u - 1, v - 1) for u, v in edges_1based])


K1 = clique(1)
K2 = clique(2)
K3 = clique(3)
K4 = clique(4)
P3 = path(3)
P4 = path(4)
CYCLE4 = cycle(4)
DIAMOND = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])

G1 = _g([(i, i % 9 + 1) for i in range(1, 10)]
        + [(1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 9), (8, 1), (9, 2)])
G2 = _g([(5, 6), (5, 8), (5, 9), (4, 5), (1, 6), (6, 7), (6, 8), (1, 2), (1, 7),
         (1, 9), (2, 3), (2, 8), (2, 9), (3, 4), (3, 7), (3, 8), (4, 7), (4, 9)])
G3 = _g([(5, 6), (5, 7), (5, 8), (4, 5), (6, 7), (6, 8), (1, 6), (1, 7), (4, 7),
         (2, 8), (3, 8), (3, 4), (4, 9), (1, 2), (1, 9), (2, 3), (2, 9), (3, 9)])
G4_EDGES = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 6), (2, 7), (3, 6), (3, 7),
            (4, 5), (4, 8), (4, 9), (5, 8), (5, 9), (6, 7), (6, 9), (7, 8), (8, 9)]
G4 = _g(G4_EDGES)
G5 = _g([e for e in G4_EDGES if e != (2, 3)])
G6 = _g([e for e in G4_EDGES if e not in ((2, 3), (4, 5))])

NINE_VERTEX_EXCEPTIONS = (G1, G2, G3, G4, G5, G6)
FOUR_VERTEX_EXCEPTIONS = (("C4", CYCLE4), ("Diamond", DIAMOND), ("K4", K4))


# ---------------------------------------------------------------------------
# exceptional classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class G4Member:
    kind: str  # "C4" | "Diamond" | "K4"

    def __str__(self) -> str:
        return f"G4Member({self.kind})"


@dataclass(frozen=True)
class G9Member:
    index: int  # 1..6

    def __str__(self) -> str:
        return f"G9Member({self.index})"


ExceptionalClass = G4Member | G9Member


def classify_exceptional(g: Graph) -> ExceptionalClass | None:
    """Match ``g`` against the nine exceptional graphs, up to isomorphism."""
    if g.n == 4:
        m = g.edge_count()
        for kind, ref in FOUR_VERTEX_EXCEPTIONS:
            if m == ref.edge_count() and isomorphic(g, ref):
                return G4Member(kind)
        return None
    if g.n == 9:
        degs = sorted(g.degrees())
        for i, ref in enumerate(NINE_VERTEX_EXCEPTIONS, start=1):
            if degs == sorted(ref.degrees()) and isomorphic(g, ref):
                return G9Member(i)
        return None
    return None


# ---------------------------------------------------------------------------
# containment tests (all take an allowed-vertex mask; full graph by default)
# ---------------------------------------------------------------------------

def has_c4_within(adj: tuple[int, ...], mask: int) -> bool:
    """Dedicated 4-cycle detector: some vertex pair has >= 2 common neighbours."""
    verts = list(bits(mask))
    rows = [adj[v] & mask for v in verts]
    m = len(verts)
    for i in range(m):
        ri = rows[i]
        for j in range(i + 1, m):
            if (ri & rows[j]).bit_count() >= 2:
                return True
    return False


def _has_edge_within(adj, mask: int) -> bool:
    return any(adj[v] & mask for v in bits(mask))


def _has_triangle_within(adj, mask: int) -> bool:
    for u in bits(mask):
        row = adj[u] & mask
        for v in bits(row):
            if v > u and adj[v] & row:
                return True
    return False


def _has_k_clique_within(adj, mask: int, k: int) -> bool:
    if k == 1:
        return mask != 0
    if k == 2:
        return _has_edge_within(adj, mask)

    def grow(cands: int, need: int) -> bool:
        if need == 0:
            return True
        while cands:
            v = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if cands.bit_count() + 1 < need:
                return False
            if grow(adj[v] & cands, need - 1):
                return True
        return False

    return grow(mask, k)


def _has_k_cycle_within(adj, mask: int, k: int) -> bool:
    if k == 1:
        return mask != 0
    if k == 2:
        return _has_edge_within(adj, mask)
    if k == 3:
        return _has_triangle_within(adj, mask)
    if k == 4:
        return has_c4_within(adj, mask)
    if mask.bit_count() < k:
        return False

    def extend(start: int, last: int, used: int, length: int) -> bool:
        if length == k:
            return bool(adj[last] >> start & 1)
        for w in bits(adj[last] & mask & ~used):
            if w <= start:
                continue  # start is the minimum vertex of the cycle
            if extend(start, w, used | 1 << w, length + 1):
                return True
        return False

    for s in bits(mask):
        if extend(s, s, 1 << s, 1):
            return True
    return False


def _is_forest_within(adj, mask: int) -> bool:
    edges2 = sum((adj[v] & mask).bit_count() for v in bits(mask))
    nverts = mask.bit_count()
    ncomps = 0
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~seen
            seen |= frontier
        remaining &= ~seen
        ncomps += 1
    return edges2 // 2 == nverts - ncomps


def contains_pattern_within(g: Graph, p: Graph, mask: int) -> bool:
    """Backtracking subgraph-monomorphism matcher (the generic oracle)."""
    if p.n > mask.bit_count():
        return False
    if p.n == 0:
        return True

    # map pattern vertices in a connectivity-first, high-degree-first order
    order: list[int] = []
    pending = set(range(p.n))
    while pending:
        anchored = [v for v in pending if any(u in order for u in bits(p.adj[v]))]
        pool = anchored or list(pending)
        v = max(pool, key=lambda x: (p.degree(x), -x))
        order.append(v)
        pending.remove(v)

    host = list(bits(mask))
    host_deg = {v: (g.adj[v] & mask).bit_count() for v in host}
    mapping = [-1] * p.n
    used = 0

    def dfs(pos: int) -> bool:
        nonlocal used
        if pos == p.n:
            return True
        v = order[pos]
        dv = p.degree(v)
        earlier = [u for u in order[:pos] if p.adj[v] >> u & 1]
        for w in host:
            if used >> w & 1 or host_deg[w] < dv:
                continue
            if any(not g.adj[w] >> mapping[u] & 1 for u in earlier):
                continue
            mapping[v] = w
            used |= 1 << w
            if dfs(pos + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return dfs(0)


def contains_pattern(g: Graph, p: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to p."""
    return contains_pattern_within(g, p, g.full_mask)


def family_free_within(g: Graph, f: FamilySpec, mask: int) -> bool:
    """No member of the family occurs within the given vertex mask."""
    adj = g.adj
    if isinstance(f, SingleCycle):
        return not _has_k_cycle_within(adj, mask, f.k)
    if isinstance(f, AllCycles):
        return _is_forest_within(adj, mask)
    if isinstance(f, Clique):
        return not _has_k_clique_within(adj, mask, f.k)
    return all(not contains_pattern_within(g, p, mask) for p in f.patterns)


def is_family_free(g: Graph, f: FamilySpec) -> bool:
    return family_free_within(g, f, g.full_mask)


def induced_matches_p3_or_k3(g: Graph, mask: int) -> bool:
    """Does the induced subgraph on ``mask`` form a path or cycle on 3 vertices?"""
    if mask.bit_count() != 3:
        return False
    v = list(bits(mask))
    e = sum((g.adj[x] & mask).bit_count() for x in v) // 2
    if e == 3:
        return True  # triangle
    if e != 2:
        return False
    return all((g.adj[x] & mask).bit_count() >= 1 for x in v)  # connected path
