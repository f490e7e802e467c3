"""Certified construction of 4-cycle isolating sets of size <= floor(n/5).

Input: a connected graph that is not one of the nine exceptional graphs.
The recursion follows the inductive strategy behind the bound: delete the
closed neighbourhood of a well-chosen pivot set X (with |N[X] deleted| >=
5|X|), recurse on the residual components, and handle residual components
that happen to be exceptional through linking vertices and single-vertex
witness fixes.  Every assembled set is re-verified against the contract
(isolating, and within floor(n/5)) before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    bits,
    closed_neighborhood,
    induced_subgraph,
    mask_of,
)
from .isolation import IsolatingCertificate, iota_exact, is_isolating
from .patterns import (
    C4_FAMILY,
    G4Member,
    G9Member,
    classify_exceptional,
    family_free_within,
    has_c4_within,
    induced_matches_p3_or_k3,
)


class DisconnectedGraphError(ValueError):
    """The constructive routine needs a connected input."""


class ExceptionalGraphError(ValueError):
    """The input is one of the nine exceptional graphs; no floor(n/5) set exists."""

    def __init__(self, exceptional):
        super().__init__(f"input is exceptional: {exceptional}")
        self.exceptional = exceptional


class ConstructiveInternalError(RuntimeError):
    """The recursion produced an invalid set; indicates a bug, never bad input."""


@dataclass(frozen=True)
class TraceStep:
    rule: str
    chosen: tuple[int, ...]   # vertices added to the set, in root labels
    parts: tuple[int, ...]    # vertex counts of the subproblems recursed into


@dataclass(frozen=True)
class ConstructiveTrace:
    steps: tuple[TraceStep, ...]

    def chosen_union(self) -> tuple[int, ...]:
        out: set[int] = set()
        for s in self.steps:
            out.update(s.chosen)
        return tuple(sorted(out))


@dataclass(frozen=True)
class ConstructiveResult:
    certificate: IsolatingCertificate
    trace: ConstructiveTrace


@dataclass(frozen=True)
class ComponentwiseResult:
    certificate: IsolatingCertificate
    flagged_components: tuple[tuple[int, ...], ...]  # exceeded floor(|V|/5)


def p3_or_k3_witness(g: Graph, v: int) -> int:
    """For a nine-vertex exceptional graph, a vertex v' != v such that
    deleting {v} union N[v'] leaves a 3-vertex path or triangle."""
    cls = classify_exceptional(g)
    if not isinstance(cls, G9Member):
        raise ValueError("witness lookup requires a nine-vertex exceptional graph")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    for vp in range(g.n):
        if vp == v:
            continue
        rem = g.full_mask & ~(1 << v) & ~(g.adj[vp] | 1 << vp)
        if induced_matches_p3_or_k3(g, rem):
            return vp
    raise ConstructiveInternalError(
        f"no witness for vertex {v}; exceptional catalog is corrupt"
    )


# ---------------------------------------------------------------------------
# recursion machinery
# ---------------------------------------------------------------------------

@dataclass
class _Comp:
    mask: int                 # vertex mask in the current graph's labels
    sub: Graph
    old: tuple[int, ...]      # sub index -> current-graph index
    exc: object               # classification or None


def _split(g: Graph, keep_mask: int) -> list[_Comp]:
    comps = []
    remaining = keep_mask
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & remaining & ~seen
            seen |= frontier
        remaining &= ~seen
        sub, old = induced_subgraph(g, seen)
        comps.append(_Comp(seen, sub, old, classify_exceptional(sub)))
    return comps


class _Solver:
    def __init__(self, root: Graph):
        self.root = root
        self.steps: list[TraceStep] = []

    # -- helpers ------------------------------------------------------------

    def _recurse(self, comp: _Comp, to_root: tuple[int, ...]) -> set[int]:
        sub_to_root = tuple(to_root[i] for i in comp.old)
        return self._worker(comp.sub, sub_to_root)

    def _note(self, rule: str, chosen_root: set[int], parts: tuple[int, ...]) -> None:
        self.steps.append(TraceStep(rule, tuple(sorted(chosen_root)), parts))

    def _try_pivot(self, g: Graph, to_root: tuple[int, ...], rule: str,
                   x_verts: tuple[int, ...], y_mask: int, extra_mask: int = 0) -> set[int] | None:
        """Generic pivot step: delete Y (inside N[X]) plus a pendant set,
        recurse on the residual components when none is exceptional.

        The pendant set must touch the residual in at most one vertex and
        form no 4-cycle with it; |Y union extra| >= 5|X| keeps the size
        arithmetic of the bound.  Returns None when a residual component is
        exceptional or a requirement fails, so callers can cascade.
        """
        x_mask = mask_of(x_verts)
        if y_mask & ~closed_neighborhood(g, x_mask):
            return None
        removed = y_mask | extra_mask
        if removed.bit_count() < 5 * len(x_verts):
            return None
        if extra_mask:
            residual = g.full_mask & ~removed
            contact = closed_neighborhood(g, extra_mask) & residual
            if contact.bit_count() > 1:
                return None
            if not family_free_within(g, C4_FAMILY, extra_mask | contact):
                return None
        comps = _split(g, g.full_mask & ~removed)
        if any(c.exc is not None for c in comps):
            return None
        chosen = {to_root[x] for x in x_verts}
        self._note(rule, chosen, tuple(c.sub.n for c in comps))
        out = set(chosen)
        for c in comps:
            out |= self._recurse(c, to_root)
        return out

    def _exceptional_fix(self, g: Graph, comp: _Comp, y_g: int) -> set[int]:
        """Extra vertex needed to isolate an exceptional component whose
        linking vertex y (a current-graph label inside the component) is
        already covered: empty for the 4-vertex ones, a witness vertex for
        the 9-vertex ones."""
        if comp.sub.n == 4:
            return set()
        y_local = comp.old.index(y_g)
        w_local = p3_or_k3_witness(comp.sub, y_local)
        return {comp.old[w_local]}

    @staticmethod
    def _link_vertex(g: Graph, x: int, comp: _Comp) -> int:
        """Lowest vertex of the component adjacent to x (current labels)."""
        m = g.adj[x] & comp.mask
        assert m, "component is not linked to x"
        return (m & -m).bit_length() - 1

    def _budget_check(self, d: set[int], n: int, rule: str) -> set[int]:
        if 5 * len(d) > n:
            raise ConstructiveInternalError(
                f"{rule} assembled {len(d)} vertices on {n}; exceeds n/5"
            )
        return d

    # -- main recursion -----------------------------------------------------

    def _worker(self, g: Graph, to_root: tuple[int, ...]) -> set[int]:
        """Connected, non-exceptional input; returns a root-label vertex set
        that isolates every 4-cycle of g, of size at most floor(n/5)."""
        if not has_c4_within(g.adj, g.full_mask):
            self._note("c4-free", set(), ())
            return set()
        if g.n <= 9:
            for v in range(g.n):
                residual = g.full_mask & ~(g.adj[v] | 1 << v)
                if not has_c4_within(g.adj, residual):
                    self._note("exact-small", {to_root[v]}, ())
                    return {to_root[v]}
            raise ConstructiveInternalError(
                "no single-vertex isolating set on <= 9 vertices; "
                "caller passed an exceptional or disconnected graph"
            )
        if g.max_degree() >= 4:
            d = self._general(g, to_root)
        else:
            d = self._subcubic(g, to_root)
        if d is None:
            d = self._last_resort(g, to_root)
        if d is None:
            raise ConstructiveInternalError(
                f"all constructive routes failed on an n={g.n} graph"
            )
        return self._budget_check(d, g.n, "worker")

    # -- maximum degree >= 4 ------------------------------------------------

    def _general(self, g: Graph, to_root: tuple[int, ...]) -> set[int] | None:
        degs = g.degrees()
        v = degs.index(max(degs))
        nv_closed = g.adj[v] | 1 << v
        rest = g.full_mask & ~nv_closed
        if rest == 0:
            self._note("pivot-dominating-vertex", {to_root[v]}, ())
            return {to_root[v]}
        comps = _split(g, rest)
        hprime = [c for c in comps if c.exc is not None]
        hstar = [c for c in comps if c.exc is None]
        if not hprime:
            return self._try_pivot(g, to_root, "pivot-max-degree", (v,), nv_closed)

        neighbours = sorted(bits(g.adj[v]))
        linked: dict[int, list[int]] = {id(c): [] for c in comps}
        for x in neighbours:
            for c in comps:
                if g.adj[x] & c.mask:
                    linked[id(c)].append(x)

        # shared linking vertex: two exceptional components hang off one x
        for x in neighbours:
            sharing = [c for c in hprime if x in linked[id(c)]]
            if len(sharing) >= 2:
                return self._cover_shared_link(g, to_root, v, x, sharing, hprime, hstar, linked)

        # now every neighbour of v touches at most one exceptional component
        designated = {id(c): linked[id(c)][0] for c in hprime}
        x_set = sorted(set(designated.values()))
        assert len(x_set) == len(hprime)
        w_set = [x for x in neighbours if x not in x_set]

        if len(w_set) >= 4:
            return self._cover_wide_pivot(g, to_root, v, designated, hprime, hstar)

        private = [c for c in hprime if len(linked[id(c)]) == 1]
        if private:
            return self._detach_private_block(
                g, to_root, v, private[0], designated[id(private[0])])

        h = len(hprime)
        if h > 3 or h == 0:
            raise ConstructiveInternalError(f"impossible linking structure: h={h}")
        return self._spread_links(g, to_root, v, hprime, hstar, designated, linked, w_set, h)

    def _cover_shared_link(self, g, to_root, v, x, sharing, hprime, hstar, linked) -> set[int]:
        d: set[int] = {to_root[v], to_root[x]}
        chosen_local = {v, x}
        for c in hprime:
            if c in sharing:
                y = self._link_vertex(g, x, c)
                fix = self._exceptional_fix(g, c, y)
            else:
                x_c = linked[id(c)][0]
                chosen_local.add(x_c)
                d.add(to_root[x_c])
                y = self._link_vertex(g, x_c, c)
                fix = self._exceptional_fix(g, c, y)
            d.update(to_root[u] for u in fix)
            chosen_local.update(fix)
        self._note("cover-shared-link", {to_root[u] for u in chosen_local},
                   tuple(c.sub.n for c in hstar))
        for c in hstar:
            d |= self._recurse(c, to_root)
        return self._budget_check(d, g.n, "cover-shared-link")

    def _cover_wide_pivot(self, g, to_root, v, designated, hprime, hstar) -> set[int]:
        d: set[int] = {to_root[v]}
        chosen_local = {v}
        for c in hprime:
            x_c = designated[id(c)]
            chosen_local.add(x_c)
            d.add(to_root[x_c])
            y = self._link_vertex(g, x_c, c)
            fix = self._exceptional_fix(g, c, y)
            d.update(to_root[u] for u in fix)
            chosen_local.update(fix)
        self._note("cover-wide-pivot", {to_root[u] for u in chosen_local},
                   tuple(c.sub.n for c in hstar))
        for c in hstar:
            d |= self._recurse(c, to_root)
        return self._budget_check(d, g.n, "cover-wide-pivot")

    def _detach_private_block(self, g, to_root, v, block: _Comp, x_b: int) -> set[int]:
        """An exceptional component hangs off a single neighbour x of the
        pivot centre; delete x plus the block and patch the rest."""
        removed = block.mask | 1 << x_b
        pieces = _split(g, g.full_mask & ~removed)
        holder = next(c for c in pieces if c.mask >> v & 1)
        others = [c for c in pieces if c is not holder]
        if any(c.exc is not None for c in others):
            raise ConstructiveInternalError("private-block residue is exceptional")
        y = self._link_vertex(g, x_b, block)
        fix = self._exceptional_fix(g, block, y)
        d: set[int] = {to_root[x_b]}
        d.update(to_root[u] for u in fix)
        if holder.exc is None:
            self._note("detach-private-block", set(d), tuple(c.sub.n for c in pieces))
            d |= self._recurse(holder, to_root)
        elif isinstance(holder.exc, G4Member):
            # the holder's 4-cycles run through all four vertices, v included,
            # and v is already next to x; nothing more to pick
            self._note("detach-private-block-small", set(d), tuple(c.sub.n for c in others))
        else:
            w_local = p3_or_k3_witness(holder.sub, holder.old.index(v))
            d.add(to_root[holder.old[w_local]])
            self._note("detach-private-block-witness", set(d), tuple(c.sub.n for c in others))
        for c in others:
            d |= self._recurse(c, to_root)
        return self._budget_check(d, g.n, "detach-private-block")

    def _spread_links(self, g, to_root, v, hprime, hstar, designated, linked,
                      w_set, h) -> set[int] | None:
        """Every exceptional component is linked to >= 2 neighbours of v."""
        if h == 1:
            h1 = hprime[0]
        else:
            two_linked = [c for c in hprime if len(linked[id(c)]) == 2]
            assert two_linked, "some exceptional component must have exactly two links"
            h1 = two_linked[0]
        x1 = designated[id(h1)]
        x1p = next(x for x in linked[id(h1)] if x != x1)
        y1 = self._link_vertex(g, x1, h1)

        if h1.sub.n == 9 and h >= 2:
            return self._pivot_core_vertex(g, to_root, h1, y1)
        if h >= 2:
            # four-vertex block: try its linking vertex as the pivot
            y1_closed = (g.adj[y1] | 1 << y1) & (h1.mask | 1 << x1)
            leftover = h1.mask & ~y1_closed
            r = self._try_pivot(g, to_root, "pivot-link-vertex", (y1,), y1_closed, leftover)
            if r is not None:
                return r
            # residual around v is a 9-vertex exceptional graph; pivot on a
            # neighbour of v instead, possibly deleting v alongside
            candidates = []
            for x in (x1, x1p):
                zs = sorted(bits(g.adj[x] & h1.mask))
                if len(zs) >= 2:
                    candidates.append((x, zs[:2]))
            for x in (x1, x1p):
                zs = sorted(bits(g.adj[x] & h1.mask))
                if len(zs) == 1:
                    candidates.append((x, zs))
            for x, zs in candidates:
                z_mask = mask_of(zs)
                z1_mask = z_mask | 1 << x
                y_rest = h1.mask & ~z_mask
                r = self._try_pivot(g, to_root, "pivot-neighbor", (x,), z1_mask, y_rest)
                if r is not None:
                    return r
                r = self._try_pivot(g, to_root, "pivot-neighbor-with-center", (x,),
                                    z1_mask | 1 << v, y_rest)
                if r is not None:
                    return r
            return None

        # h == 1: the pivot centre has degree exactly four
        if h1.sub.n == 9:
            for u in sorted(bits(h1.mask)):
                if (g.adj[u] & h1.mask).bit_count() == 4:
                    r = self._try_pivot(g, to_root, "pivot-degree-four-scan", (u,),
                                        g.adj[u] | 1 << u)
                    if r is not None:
                        return r
            return None
        return self._single_block_routes(g, to_root, v, h1, x1, x1p, y1)

    def _single_block_routes(self, g, to_root, v, h1: _Comp, x1, x1p, y1) -> set[int] | None:
        """One exceptional 4-vertex component, linked to >= 2 neighbours of v."""
        nv = g.adj[v]
        doubly = sorted(y for y in bits(h1.mask) if (g.adj[y] & nv).bit_count() == 2)
        if doubly:
            y = doubly[0]
            ny_closed = g.adj[y] | 1 << y
            r = self._try_pivot(g, to_root, "pivot-double-link-vertex", (y,), ny_closed)
            if r is not None:
                return r
            # v's residual component is a small exceptional block
            pieces = _split(g, g.full_mask & ~ny_closed)
            holder = next(c for c in pieces if c.mask >> v & 1)
            others = [c for c in pieces if c is not holder]
            if not isinstance(holder.exc, G4Member):
                return None
            inner = holder.mask & ~(g.adj[v] | 1 << v)  # the block vertex opposite v
            y_opp = h1.mask & ~ny_closed               # the block vertex opposite y
            if inner and inner == y_opp:
                y3 = (inner & -inner).bit_length() - 1
                ww = holder.mask & g.adj[v]
                y24 = g.adj[y] & h1.mask
                r = self._try_pivot(g, to_root, "pivot-opposite-corner", (y3,),
                                    1 << y3 | ww | y24)
                return r
            if any(c.exc is not None for c in others):
                return None
            d: set[int] = {to_root[y]}
            low = (holder.mask & -holder.mask).bit_length() - 1
            d.add(to_root[low])
            self._note("cover-small-block", set(d), tuple(c.sub.n for c in others))
            for c in others:
                d |= self._recurse(c, to_root)
            return self._budget_check(d, g.n, "cover-small-block")
        # every block vertex touches at most one neighbour of v
        y1_closed = g.adj[y1] | 1 << y1
        leftover = h1.mask & ~y1_closed
        r = self._try_pivot(g, to_root, "pivot-link-vertex", (y1,), y1_closed, leftover)
        if r is not None:
            return r
        y1p = self._link_vertex(g, x1p, h1)
        y1p_closed = g.adj[y1p] | 1 << y1p
        leftover2 = h1.mask & ~y1p_closed
        return self._try_pivot(g, to_root, "pivot-second-link-vertex", (y1p,),
                               y1p_closed, leftover2)

    def _pivot_core_vertex(self, g, to_root, h1: _Comp, y1: int) -> set[int] | None:
        """Inside a 9-vertex exceptional component, pivot on a degree-4
        vertex not adjacent to the linking vertex; the five deleted vertices
        leave the component's remaining square attached to the rest."""
        y1_closed = g.adj[y1] | 1 << y1
        for z in sorted(bits(h1.mask & ~y1_closed)):
            if (g.adj[z] & h1.mask).bit_count() == 4:
                z_closed = (g.adj[z] & h1.mask) | 1 << z
                r = self._try_pivot(g, to_root, "pivot-core-vertex", (z,), z_closed)
                if r is not None:
                    return r
        return None

    # -- maximum degree <= 3 ------------------------------------------------

    def _subcubic(self, g: Graph, to_root: tuple[int, ...]) -> set[int] | None:
        found = self._find_square_with_attachment(g)
        if found is None:
            return None
        v, x_cyc, w, x3 = found
        nv_closed = g.adj[v] | 1 << v
        comps = _split(g, g.full_mask & ~nv_closed)
        hprime = [c for c in comps if c.exc is not None]
        hstar = [c for c in comps if c.exc is None]
        if any(c.sub.n != 4 for c in hprime):
            raise ConstructiveInternalError("nine-vertex exceptional block in a subcubic graph")

        if not hprime:
            r = self._try_pivot(g, to_root, "pivot-square-corner", (v,), nv_closed, 1 << w)
            if r is not None:
                return r
            # the component of w minus w is an exceptional 4-block
            hw = next(c for c in comps if c.mask >> w & 1)
            w_inner = g.adj[w] & hw.mask
            assert w_inner.bit_count() == 1
            w1 = (w_inner & -w_inner).bit_length() - 1
            w1_closed = g.adj[w1] | 1 << w1
            leftover = hw.mask & ~w1_closed
            return self._try_pivot(g, to_root, "pivot-block-corner", (w1,),
                                   w1_closed, leftover)

        neighbours = sorted(bits(g.adj[v]))
        linked: dict[int, list[int]] = {id(c): [] for c in comps}
        for x in neighbours:
            for c in comps:
                if g.adj[x] & c.mask:
                    linked[id(c)].append(x)
        for x in neighbours:
            sharing = [c for c in hprime if x in linked[id(c)]]
            if len(sharing) >= 2:
                return self._cover_shared_link(g, to_root, v, x, sharing, hprime, hstar, linked)

        # a block linked to a square neighbour of v pivots on its link vertex
        for c in hprime:
            for x in linked[id(c)]:
                if x in x_cyc:
                    u1 = self._link_vertex(g, x, c)
                    u1_closed = g.adj[u1] | 1 << u1
                    leftover = c.mask & ~u1_closed
                    r = self._try_pivot(g, to_root, "pivot-linked-corner", (u1,),
                                        u1_closed, leftover)
                    if r is not None:
                        return r
        # otherwise some block hangs privately off the outside neighbour x3
        for c in hprime:
            if linked[id(c)] == [x3]:
                return self._detach_private_block(g, to_root, v, c, x3)
        return None

    @staticmethod
    def _find_square_with_attachment(g: Graph):
        """A 4-cycle plus a cycle vertex with an outside neighbour:
        returns (v, (v's two cycle neighbours), opposite vertex, outside)."""
        n = g.n
        for p in range(n):
            for q in range(p + 1, n):
                common = g.adj[p] & g.adj[q] & ~(1 << p) & ~(1 << q)
                if common.bit_count() < 2:
                    continue
                cbits = list(bits(common))
                r, s = cbits[0], cbits[1]
                cyc_mask = mask_of((p, q, r, s))
                order = sorted((p, r, q, s))
                for v in order:
                    outside = g.adj[v] & ~cyc_mask
                    if not outside:
                        continue
                    if v in (p, q):
                        nbrs, opp = (r, s), (q if v == p else p)
                    else:
                        nbrs, opp = (p, q), (s if v == r else r)
                    x3 = (outside & -outside).bit_length() - 1
                    return v, nbrs, opp, x3
        return None

    # -- defensive cascade --------------------------------------------------

    def _last_resort(self, g: Graph, to_root: tuple[int, ...]) -> set[int] | None:
        """Scan fallback; still fully certified when it fires.  The
        structured routes above are expected to cover everything."""
        order = sorted(range(g.n), key=lambda u: (-g.degree(u), u))
        for u in order:
            if g.degree(u) < 4:
                break
            r = self._try_pivot(g, to_root, "fallback-scan", (u,), g.adj[u] | 1 << u)
            if r is not None:
                return r
        for u in order:
            nu = g.adj[u] | 1 << u
            for extra in bits(g.full_mask & ~nu):
                r = self._try_pivot(g, to_root, "fallback-scan", (u,), nu, 1 << extra)
                if r is not None:
                    return r
        return None


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def isolate_c4(g: Graph) -> ConstructiveResult:
    """A verified 4-cycle isolating set of size <= floor(n/5).

    The graph must be connected and must not be one of the nine exceptional
    graphs (those violate the bound).  The certificate is re-checked before
    returning; the trace records each rule application in root labels.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("input graph is disconnected")
    exc = classify_exceptional(g)
    if exc is not None:
        raise ExceptionalGraphError(exc)
    solver = _Solver(g)
    d = solver._worker(g, tuple(range(g.n)))
    d_sorted = tuple(sorted(d))
    bound = g.n // 5
    if len(d_sorted) > bound or not is_isolating(g, C4_FAMILY, mask_of(d_sorted)):
        raise ConstructiveInternalError(
            f"assembled set {d_sorted} fails the contract on n={g.n}"
        )
    cert = IsolatingCertificate(C4_FAMILY, d_sorted, len(d_sorted), True, bound)
    return ConstructiveResult(cert, ConstructiveTrace(tuple(solver.steps)))


def isolate_c4_any(g: Graph) -> ComponentwiseResult:
    """Componentwise isolation: exceptional components get their exact
    minimum (1 for the 4-vertex ones, 2 for the 9-vertex ones) and are
    flagged as exceeding their own floor(|V|/5) allowance."""
    from .graphs import components as graph_components

    witness: set[int] = set()
    flagged: list[tuple[int, ...]] = []
    for comp_mask, sub in graph_components(g):
        old = tuple(bits(comp_mask))
        exc = classify_exceptional(sub)
        if exc is not None:
            cert = iota_exact(sub, C4_FAMILY)
            part = [old[u] for u in cert.set_d]
        else:
            part = [old[u] for u in isolate_c4(sub).certificate.set_d]
        witness.update(part)
        if len(part) > sub.n // 5:
            flagged.append(tuple(old))
    d_sorted = tuple(sorted(witness))
    verified = is_isolating(g, C4_FAMILY, mask_of(d_sorted))
    cert = IsolatingCertificate(C4_FAMILY, d_sorted, len(d_sorted), verified, g.n // 5)
    return ComponentwiseResult(cert, tuple(flagged))
