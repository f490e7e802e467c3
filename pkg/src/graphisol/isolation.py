"""Exact isolation numbers with minimum witnesses, plus the certified
reduction operators (component additivity, leaf and pendant stripping).

``iota(g, f)`` is the size of a smallest set D whose closed neighbourhood
meets every copy of an f-family member in g; equivalently g - N[D] is
family-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    GraphError,
    bits,
    closed_neighborhood,
    components,
    delete_vertices,
    mask_of,
)
from .patterns import (
    C4_FAMILY,
    FamilySpec,
    family_free_within,
    family_is_cycles_min3,
    family_token,
)


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search finished; no answer is implied."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} subset tests")
        self.nodes = nodes


class ReductionError(ValueError):
    """A reduction operator's precondition failed; the message names the clause."""


@dataclass(frozen=True)
class IsolatingCertificate:
    """A vertex set D (original labels) with its verification status.

    ``bound`` is floor(n/5) for runs with the 4-cycle family and None
    otherwise; ``within_bound`` compares size against it.
    """
    family: FamilySpec
    set_d: tuple[int, ...]
    size: int
    verified: bool
    bound: int | None = None

    @property
    def within_bound(self) -> bool | None:
        if self.bound is None:
            return None
        return self.size <= self.bound

    def describe(self) -> str:
        parts = [f"family={family_token(self.family)}", f"size={self.size}",
                 "witness=" + (" ".join(map(str, self.set_d)) or "-")]
        if self.bound is not None:
            parts.append(f"bound={self.bound}")
        parts.append("verified" if self.verified else "unverified")
        return " ".join(parts)


def is_isolating(g: Graph, f: FamilySpec, d: int) -> bool:
    """True iff g - N[d] contains no member of the family (d is a vertex mask)."""
    residual = g.full_mask & ~closed_neighborhood(g, d)
    return family_free_within(g, f, residual)


def _strippable(g: Graph, f: FamilySpec) -> int:
    """Mask of one round of removable isolated vertices and leaves.

    Removal preserves the isolation number only for families whose members
    are cycles of length >= 3 (those can never live on a pendant vertex).
    """
    if not family_is_cycles_min3(f):
        return 0
    out = 0
    for v in range(g.n):
        if g.degree(v) <= 1:
            out |= 1 << v
    return out


class _Budget:
    """Countdown over subset tests; None means unlimited."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.used)


def _search_min_isolating(g: Graph, f: FamilySpec, budget: _Budget,
                          stop_at: int | None = None) -> tuple[int, ...] | None:
    """Smallest isolating set by increasing size, lexicographic within a size.

    With ``stop_at`` set, gives up (returns None) once size would exceed it.
    """
    n = g.n
    limit = n if stop_at is None else min(stop_at, n)
    for size in range(limit + 1):
        for combo in combinations(range(n), size):
            budget.tick()
            if is_isolating(g, f, mask_of(combo)):
                return combo
    return None


def iota_exact(g: Graph, f: FamilySpec, budget: int | None = None) -> IsolatingCertificate:
    """Exact isolation number with a lexicographically-first minimum witness.

    Components are solved independently; pendant vertices are stripped first
    for cycle families.  A ``budget`` caps the number of subset tests and
    raises SearchBudgetExceeded rather than ever returning a wrong number.
    """
    remaining = _Budget(budget)
    witness: list[int] = []
    for comp_mask, comp in components(g):
        comp_old = tuple(bits(comp_mask))
        work, to_comp = comp, tuple(range(comp.n))
        while work.n:
            strip = _strippable(work, f)
            if strip == 0:
                break
            sub, submap = delete_vertices(work, strip)
            work, to_comp = sub, tuple(to_comp[i] for i in submap)
        combo = _search_min_isolating(work, f, remaining)
        assert combo is not None  # the whole vertex set always isolates
        if work.n < comp.n:
            # stripping fixed the size; rescan unstripped for the lex-first witness
            for cand in combinations(range(comp.n), len(combo)):
                remaining.tick()
                if is_isolating(comp, f, mask_of(cand)):
                    combo, to_comp = cand, tuple(range(comp.n))
                    break
        witness.extend(comp_old[to_comp[v]] for v in combo)
    witness.sort()
    d_mask = mask_of(witness)
    verified = is_isolating(g, f, d_mask)
    bound = g.n // 5 if f == C4_FAMILY else None
    return IsolatingCertificate(f, tuple(witness), len(witness), verified, bound)


def has_isolating_set_within(g: Graph, f: FamilySpec, max_size: int,
                             budget: int | None = None) -> bool:
    """Early-exit test: does an isolating set of size <= max_size exist?"""
    remaining = _Budget(budget)
    total = 0
    for comp_mask, comp in components(g):
        work = comp
        while work.n:
            strip = _strippable(work, f)
            if strip == 0:
                break
            work, _ = delete_vertices(work, strip)
        combo = _search_min_isolating(work, f, remaining, stop_at=max_size - total)
        if combo is None:
            return False
        total += len(combo)
        if total > max_size:
            return False
    return total <= max_size


# ---------------------------------------------------------------------------
# reduction operators
# ---------------------------------------------------------------------------

def compose_isolating_set(g: Graph, f: FamilySpec, x_mask: int, y_mask: int,
                                d_rest: int) -> int:
    """Combine a pivot set X with an isolating set of g - Y into one for g.

    Requires Y to lie inside N[X] and ``d_rest`` (a mask in the re-indexed
    labels of g - Y) to actually isolate g - Y.  Returns the combined mask
    X union d_rest in g's labels, which is guaranteed isolating; the result
    never exceeds |X| + |d_rest| vertices.
    """
    if y_mask & ~closed_neighborhood(g, x_mask):
        raise ReductionError("Y is not contained in N[X]")
    sub, submap = delete_vertices(g, y_mask)
    if d_rest & ~sub.full_mask:
        raise ReductionError("d_rest has vertices outside g - Y")
    if not is_isolating(sub, f, d_rest):
        raise ReductionError("d_rest is not an isolating set of g - Y")
    out = x_mask
    for v in bits(d_rest):
        out |= 1 << submap[v]
    assert out.bit_count() <= x_mask.bit_count() + d_rest.bit_count()
    return out


def reduce_pendant(g: Graph, f: FamilySpec, x: int, y_mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Delete a pendant set Y whose only contact with the rest of g is x.

    Legal when the family consists of cycles, x is outside Y, no vertex of
    Y has a neighbour in g - Y other than x, and the induced subgraph on
    {x} union Y is family-free.  Then the isolation number is unchanged and
    every isolating set of the result is one of g.  Returns g - Y with the
    new-to-old index map.
    """
    if not family_is_cycles_min3(f):
        raise ReductionError("family is not a set of cycles of length >= 3")
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    if y_mask >> x & 1:
        raise ReductionError("x lies inside Y")
    if y_mask & ~g.full_mask:
        raise GraphError("Y has vertices outside the graph")
    outside = g.full_mask & ~y_mask
    contact = closed_neighborhood(g, y_mask) & outside
    if contact & ~(1 << x):
        raise ReductionError("Y touches g - Y at vertices other than x")
    if not family_free_within(g, f, y_mask | 1 << x):
        raise ReductionError("induced subgraph on {x} union Y is not family-free")
    return delete_vertices(g, y_mask)


def pendant_set_is_legal(g: Graph, f: FamilySpec, y_mask: int) -> bool:
    """Check the pendant-deletion hypothesis for Y with any single contact vertex."""
    if not family_is_cycles_min3(f):
        return False
    outside = g.full_mask & ~y_mask
    contact = closed_neighborhood(g, y_mask) & outside
    if contact.bit_count() > 1:
        return False
    return family_free_within(g, f, y_mask | contact)
