"""Exhaustive graph6-catalog scans for isolation-bound violators.

Each record that passes the filter is tested for an isolating set of size
at most the bound (early exit, cheapest-first); the rare violators get an
exact isolation number for the report.  Scanning is embarrassingly parallel
over records; reports merge deterministically (violators sorted by their
graph6 text), so worker count never changes the output bytes.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from pathlib import Path

from .catalogs import iter_graph6_lines
from .graphs import Graph, encode_graph6, parse_graph6
from .isolation import has_isolating_set_within, iota_exact
from .patterns import FamilySpec, family_from_token, family_token


class SweepParseError(ValueError):
    """A catalog record failed to parse; carries the record index."""

    def __init__(self, index: int, detail: str):
        super().__init__(f"record {index}: {detail}")
        self.index = index


@dataclass(frozen=True)
class SweepFilter:
    require_connected: bool = False
    min_degree: int | None = None
    max_degree: int | None = None
    vertex_count: int | None = None

    def __post_init__(self):
        if (self.min_degree is not None and self.max_degree is not None
                and self.min_degree > self.max_degree):
            raise ValueError("min_degree exceeds max_degree")

    def passes(self, g: Graph) -> bool:
        if self.vertex_count is not None and g.n != self.vertex_count:
            return False
        if self.min_degree is not None and (g.n == 0 or g.min_degree() < self.min_degree):
            return False
        if self.max_degree is not None and g.max_degree() > self.max_degree:
            return False
        if self.require_connected and not g.is_connected():
            return False
        return True

    def describe(self) -> str:
        def show(x):
            return "-" if x is None else str(x)
        return (f"connected={'yes' if self.require_connected else 'no'} "
                f"min-deg={show(self.min_degree)} max-deg={show(self.max_degree)} "
                f"n={show(self.vertex_count)}")


@dataclass(frozen=True)
class Violation:
    graph6: str
    iota_size: int
    bound: int


@dataclass(frozen=True)
class SweepReport:
    scanned: int
    passed_filter: int
    violations: tuple[Violation, ...]
    family: str
    filter: SweepFilter
    bound_rule: str

    def render(self) -> str:
        lines = [f"violator {v.graph6} iota={v.iota_size} bound={v.bound}"
                 for v in self.violations]
        lines += [
            f"scanned {self.scanned}",
            f"passed-filter {self.passed_filter}",
            f"violators {len(self.violations)}",
            f"family {self.family}",
            f"filter {self.filter.describe()}",
            f"bound {self.bound_rule}",
        ]
        return "\n".join(lines) + "\n"


def _bound_for(g: Graph, bound_rule: str) -> int:
    if bound_rule == "floor5":
        return g.n // 5
    return int(bound_rule)


def _scan_records(records: list[tuple[int, str]], family_tok: str,
                  filt: SweepFilter, bound_rule: str) -> tuple[int, int, list[Violation]]:
    f = family_from_token(family_tok)
    scanned = 0
    passed = 0
    violations: list[Violation] = []
    for idx, text in records:
        try:
            g = parse_graph6(text)
        except ValueError as e:
            raise SweepParseError(idx, str(e)) from e
        if encode_graph6(g) != text:
            raise SweepParseError(idx, f"record does not round-trip: {text!r}")
        scanned += 1
        if not filt.passes(g):
            continue
        passed += 1
        bound = _bound_for(g, bound_rule)
        if not has_isolating_set_within(g, f, bound):
            violations.append(Violation(text, iota_exact(g, f).size, bound))
    return scanned, passed, violations


def _scan_chunk(args) -> tuple[int, int, list[Violation]]:
    return _scan_records(*args)


def sweep_catalog(path: str | Path, family: FamilySpec | str,
                  filt: SweepFilter | None = None,
                  bound_rule: str = "floor5", workers: int = 1) -> SweepReport:
    """Scan a graph6 catalog for graphs whose isolation number exceeds the bound.

    ``bound_rule`` is "floor5" (floor(n/5) per record) or an explicit integer
    as a string.  Every record is required to re-encode byte-for-byte.
    Violations are re-derivable: each listed graph has iota_size > bound.
    """
    if bound_rule != "floor5":
        int(bound_rule)  # validate early
    filt = filt or SweepFilter()
    tok = family if isinstance(family, str) else family_token(family)
    family_from_token(tok)  # validate early
    records = list(iter_graph6_lines(path))
    if workers <= 1 or len(records) < 2:
        scanned, passed, violations = _scan_records(records, tok, filt, bound_rule)
    else:
        nchunks = workers * 4
        size = max(1, (len(records) + nchunks - 1) // nchunks)
        chunks = [records[i:i + size] for i in range(0, len(records), size)]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_scan_chunk, [(c, tok, filt, bound_rule) for c in chunks])
        scanned = sum(p[0] for p in parts)
        passed = sum(p[1] for p in parts)
        violations = [v for p in parts for v in p[2]]
    violations.sort(key=lambda v: v.graph6)
    return SweepReport(scanned, passed, tuple(violations), tok, filt, bound_rule)
