"""The extremal family B(n, F): a path spine with F-copies fully joined to
spine vertices, attaining the isolation bound with equality.

For an F on k vertices and n >= k+1, the construction uses a = floor(n/(k+1))
spine vertices forming a path, b = n - k*a surplus vertices all attached to
the last spine vertex, and a disjoint F-copies with copy i joined completely
to spine vertex i.  For n <= k it degenerates to the n-path.

Labels are deterministic: spine first (0..a-1), surplus next, then the
F-copies in order, each in its own contiguous block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CAPACITY, Graph, GraphError, from_edges
from .isolation import iota_exact
from .patterns import C4_FAMILY, CYCLE4, path


@dataclass(frozen=True)
class BGraphParams:
    """Derived quantities of the construction on n vertices with |V(F)| = k."""
    n: int
    k: int
    a: int
    b: int

    @classmethod
    def compute(cls, n: int, k: int) -> "BGraphParams":
        if n < 1 or k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
        a = n // (k + 1)
        b = n - k * a
        if n >= k + 1:
            assert a <= b <= a + k
        return cls(n, k, a, b)


def build_b(n: int, f_pattern: Graph) -> Graph:
    """The connected n-vertex graph of the extremal construction."""
    k = f_pattern.n
    if k == 0:
        raise GraphError("empty pattern")
    if not f_pattern.is_connected():
        raise GraphError("pattern must be connected")
    if n > CAPACITY:
        raise GraphError(f"n={n} exceeds capacity {CAPACITY}")
    if n <= k:
        return path(n)
    p = BGraphParams.compute(n, k)
    edges: list[tuple[int, int]] = []
    edges.extend((i, i + 1) for i in range(p.a - 1))              # spine path
    edges.extend((p.a - 1, j) for j in range(p.a, p.b))           # surplus star
    base = p.b
    for i in range(p.a):
        off = base + i * k
        edges.extend((off + u, off + v) for u, v in f_pattern.edges())
        edges.extend((i, off + u) for u in range(k))              # full join
    return from_edges(n, edges)


def verify_extremal(n: int, budget: int | None = None) -> bool:
    """Does the 4-cycle construction on n vertices attain floor(n/5) exactly?"""
    cert = iota_exact(build_b(n, CYCLE4), C4_FAMILY, budget=budget)
    return cert.size == n // 5
