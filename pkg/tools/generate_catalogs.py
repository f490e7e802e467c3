#!/usr/bin/env python3
"""Regenerate the packaged connected-graph catalogs (graph6, gzipped).

Enumerates every graph on 1..9 vertices up to isomorphism, keeps the
connected ones, and writes one catalog file per vertex count under
src/graphisol/data/catalogs/.  Published totals are asserted during
generation; expect a run time of a few minutes for the 9-vertex level.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from graphisol.catalogs import (
    KNOWN_CONNECTED,
    enumerate_levels,
    write_catalog,
)
from graphisol.graphs import Graph, encode_graph6


def main() -> int:
    out_dir = Path(__file__).resolve().parents[1] / "src" / "graphisol" / "data" / "catalogs"
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.time()
    levels = enumerate_levels(9, check_counts=True)
    print(f"enumerated all levels in {time.time() - t0:.1f}s", flush=True)
    from graphisol.catalogs import _connected_raw
    for n, graphs in levels.items():
        lines = sorted(
            encode_graph6(Graph(n, adj)) for adj in graphs if _connected_raw(n, adj)
        )
        assert len(lines) == KNOWN_CONNECTED[n], (n, len(lines))
        path = out_dir / f"graph{n}c.g6.gz"
        write_catalog(lines, path)
        print(f"n={n}: {len(lines)} connected graphs -> {path}", flush=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
