"""Immutable simple graphs on at most 64 vertices, stored as bitmask adjacency rows.

Vertex sets are plain Python ints used as bitmasks over [0, n); helper
functions convert between masks and index tuples.  All operations here are
pure queries, so graphs can be shared freely across workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

CAPACITY = 64
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid graph construction or an out-of-range vertex argument."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple graph: ``n`` vertices, ``adj[u]`` the neighbour bitmask of ``u``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= CAPACITY:
            raise GraphError(f"vertex count {n} outside [0, {CAPACITY}]")
        if len(adj) != n:
            raise GraphError(f"{len(adj)} adjacency rows for {n} vertices")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {u} has bits at indices >= {n}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
        for u in range(n):
            for v in bits(adj[u]):
                if v > u and not adj[v] >> u & 1:
                    raise GraphError(f"asymmetric edge ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return _reach(self.adj, 1, self.full_mask) == self.full_mask


def _reach(adj, seed: int, within: int) -> int:
    """Bitmask of vertices reachable from ``seed`` staying inside ``within``."""
    seen = seed & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 0 <= n <= CAPACITY:
        raise GraphError(f"vertex count {n} outside [0, {CAPACITY}]")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: ``s`` together with every neighbour of a member of ``s``."""
    _check_mask(g, s)
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def delete_vertices(g: Graph, x: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on V(g) minus ``x``, re-indexed contiguously.

    Returns the subgraph and the map from new indices to original ones
    (preserving the original relative order).
    """
    _check_mask(g, x)
    keep = [v for v in range(g.n) if not x >> v & 1]
    return _induced(g, keep), tuple(keep)


def induced_subgraph(g: Graph, keep_mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of ``keep_mask``, plus the index map."""
    _check_mask(g, keep_mask)
    keep = list(bits(keep_mask))
    return _induced(g, keep), tuple(keep)


def _induced(g: Graph, keep: list[int]) -> Graph:
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for w in bits(g.adj[old]):
            new_w = pos.get(w)
            if new_w is not None:
                row |= 1 << new_w
        rows.append(row)
    return Graph(len(keep), rows)


def components(g: Graph) -> list[tuple[int, Graph]]:
    """Connected components as (original-label mask, induced subgraph) pairs.

    Ordered by smallest contained original index.  Within each subgraph,
    new index i corresponds to the i-th lowest bit of the mask.
    """
    out = []
    remaining = g.full_mask
    while remaining:
        seed = remaining & -remaining
        comp = _reach(g.adj, seed, remaining)
        remaining &= ~comp
        sub, _ = induced_subgraph(g, comp)
        out.append((comp, sub))
    return out


def component_masks(g: Graph) -> list[int]:
    out = []
    remaining = g.full_mask
    while remaining:
        seed = remaining & -remaining
        comp = _reach(g.adj, seed, remaining)
        remaining &= ~comp
        out.append(comp)
    return out


def _check_mask(g: Graph, mask: int) -> None:
    if mask < 0 or mask & ~g.full_mask:
        raise GraphError(f"vertex mask {mask:#x} not within [0, {g.n})")


# ---------------------------------------------------------------------------
# graph6 codec (single-byte size header only, n <= 62)
# ---------------------------------------------------------------------------

def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record.

    Strict: rejects out-of-range bytes, multi-byte size headers, truncated
    or overlong records, and nonzero padding bits, so that re-encoding the
    result always reproduces the input byte-for-byte.
    """
    if isinstance(text, str):
        data = text.encode("ascii", errors="replace")
    else:
        data = bytes(text)
    if not data:
        raise Graph6Error("empty graph6 record")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} at position {i} outside graph6 range [63, 126]")
    if data[0] == 126:
        raise Graph6Error("multi-byte size header (n > 62) not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = data[1:]
    if len(body) < ngroups:
        raise Graph6Error(f"record too short: need {ngroups} data bytes, got {len(body)}")
    if len(body) > ngroups:
        raise Graph6Error(f"trailing garbage: {len(body) - ngroups} extra bytes")
    rows = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for b in body:
        group = b - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits")
            idx += 1
    return Graph(n, rows)


def encode_graph6(g: Graph) -> str:
    """Encode a graph (n <= 62) as a graph6 record."""
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 single-byte form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(63 + g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(63 + (group << (6 - filled))))
    return "".join(out)


# ---------------------------------------------------------------------------
# ad-hoc edge-list text format: "n\nu v\nu v\n..."
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"expected 'u v' edge line, got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"non-integer endpoint in {ln!r}") from None
        edges.append((u, v))
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
