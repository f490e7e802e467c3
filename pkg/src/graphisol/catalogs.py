"""Small-graph catalogs: generation, packaged fixtures, and a strict reader.

Catalogs are plain graph6 text, one record per line (gzip-compressed copies
ship with the package).  The enumerator builds every graph on up to nine
vertices, one vertex-addition level at a time, deduplicating by an exact
canonical key when colour refinement is discrete and by invariant buckets
plus isomorphism tests otherwise.  Published totals are asserted so a
generation bug cannot silently ship a wrong catalog.
"""

from __future__ import annotations

import gzip
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .graphs import Graph, encode_graph6, parse_graph6
from .isomorphism import isomorphic_raw, refine_colors

# numbers of pairwise non-isomorphic simple graphs / connected ones
KNOWN_TOTAL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

MAX_ENUM_N = 9


def _connected_raw(n: int, adj: tuple[int, ...]) -> bool:
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & full & ~seen
        seen |= frontier
    return seen == full


def _canonical_or_bucket_key(n: int, adj: tuple[int, ...]):
    colors = refine_colors(n, adj)
    if len(set(colors)) == n:
        perm = sorted(range(n), key=lambda v: colors[v])
        key = 0
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                key = key << 1 | (adj[perm[i]] >> pj & 1)
        return True, key
    hist = tuple(sorted((colors.count(c), c) for c in set(colors)))
    common = sorted(
        ((adj[u] >> v & 1), (adj[u] & adj[v]).bit_count())
        for u in range(n) for v in range(u + 1, n)
    )
    return False, (hist, tuple(common))


def enumerate_levels(n_max: int, check_counts: bool = True) -> dict[int, list[tuple[int, ...]]]:
    """All graphs (as adjacency-row tuples) on 1..n_max vertices, up to isomorphism."""
    if not 1 <= n_max <= MAX_ENUM_N:
        raise ValueError(f"enumeration supported for 1 <= n <= {MAX_ENUM_N}")
    levels: dict[int, list[tuple[int, ...]]] = {1: [(0,)]}
    for n in range(2, n_max + 1):
        rigid_seen: set[int] = set()
        buckets: dict[tuple, list[tuple[int, ...]]] = {}
        out: list[tuple[int, ...]] = []
        new_bit = 1 << (n - 1)
        for parent in levels[n - 1]:
            for mask in range(1 << (n - 1)):
                rows = list(parent)
                m = mask
                while m:
                    low = m & -m
                    rows[low.bit_length() - 1] |= new_bit
                    m ^= low
                rows.append(mask)
                adj = tuple(rows)
                is_exact, key = _canonical_or_bucket_key(n, adj)
                if is_exact:
                    if key in rigid_seen:
                        continue
                    rigid_seen.add(key)
                else:
                    bucket = buckets.setdefault(key, [])
                    if any(isomorphic_raw(n, adj, n, other) for other in bucket):
                        continue
                    bucket.append(adj)
                out.append(adj)
        levels[n] = out
        if check_counts and len(out) != KNOWN_TOTAL[n]:
            raise RuntimeError(
                f"enumeration produced {len(out)} graphs on {n} vertices, "
                f"expected {KNOWN_TOTAL[n]}"
            )
    return levels


def generate_connected_catalog(n: int, check_counts: bool = True) -> list[str]:
    """Sorted graph6 records of every connected graph on n vertices."""
    levels = enumerate_levels(n, check_counts=check_counts)
    lines = [
        encode_graph6(Graph(n, adj))
        for adj in levels[n]
        if _connected_raw(n, adj)
    ]
    if check_counts and len(lines) != KNOWN_CONNECTED[n]:
        raise RuntimeError(
            f"{len(lines)} connected graphs on {n} vertices, expected {KNOWN_CONNECTED[n]}"
        )
    lines.sort()
    return lines


def write_catalog(lines: Iterable[str], path: str | Path) -> None:
    path = Path(path)
    data = "".join(line + "\n" for line in lines).encode("ascii")
    if path.suffix == ".gz":
        with gzip.open(path, "wb") as fh:
            fh.write(data)
    else:
        path.write_bytes(data)


def iter_graph6_lines(path: str | Path) -> Iterator[tuple[int, str]]:
    """Yield (record index, graph6 text) per line; transparent gzip."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt", encoding="ascii") as fh:
        idx = 0
        for raw in fh:
            line = raw.strip()
            if line:
                yield idx, line
                idx += 1


def read_catalog(path: str | Path, strict_roundtrip: bool = True) -> list[Graph]:
    """Parse a whole catalog; optionally require byte-exact re-encoding."""
    out = []
    for idx, line in iter_graph6_lines(path):
        g = parse_graph6(line)
        if strict_roundtrip and encode_graph6(g) != line:
            raise ValueError(f"record {idx} does not round-trip: {line!r}")
        out.append(g)
    return out


def packaged_catalog_path(n: int) -> Path:
    """Path of the shipped connected-graph catalog for n vertices."""
    res = resources.files("graphisol").joinpath(f"data/catalogs/graph{n}c.g6.gz")
    path = Path(str(res))
    if not path.exists():
        raise FileNotFoundError(
            f"packaged catalog for n={n} not found; run tools/generate_catalogs.py"
        )
    return path
