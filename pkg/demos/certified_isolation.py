#!/usr/bin/env python3
"""Certified isolating sets with audit traces.

Runs the constructive solver on a few structured graphs and prints the
certificate plus the rule applications that assembled it.  Every output
set is re-verified against the contract: it isolates all 4-cycles and has
at most floor(n/5) vertices.
"""

import random

from graphisol import CYCLE4, build_b, from_edges, isolate_c4, isolate_c4_any

PETERSEN = from_edges(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                           (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                           (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])


def grid(rows, cols):
    def idx(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return from_edges(rows * cols, edges)


def random_connected(rng, n, p):
    while True:
        edges = [(i, rng.randrange(i)) for i in range(1, n)]
        edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edges(n, edges)
        if g.is_connected():
            return g


def show(name, g):
    result = isolate_c4(g)
    cert = result.certificate
    print(f"{name}: n={g.n}  {cert.describe()}")
    for step in result.trace.steps:
        chosen = ",".join(map(str, step.chosen)) or "-"
        parts = ",".join(map(str, step.parts)) or "-"
        print(f"    {step.rule:<28} chose={chosen:<10} sub-sizes={parts}")
    print()


show("Petersen graph (square-free)", PETERSEN)
show("5x5 grid", grid(5, 5))
show("extremal B(23)", build_b(23, CYCLE4))

rng = random.Random(7)
show("random sparse n=30", random_connected(rng, 30, 0.07))

print("componentwise mode on a forest plus two squares:")
two_sq = from_edges(12, [(0, 1), (1, 2), (2, 3), (3, 0),
                         (4, 5), (5, 6), (6, 7), (7, 4),
                         (8, 9), (9, 10), (10, 11)])
res = isolate_c4_any(two_sq)
print(f"  {res.certificate.describe()}")
print(f"  components over their own bound: {res.flagged_components}")
