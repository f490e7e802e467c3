#!/usr/bin/env python3
"""The extremal family: graphs that need exactly floor(n/5) vertices.

Builds the spine-plus-squares construction for n = 1..25, solves each one
exactly, and checks the isolation number sits on the bound.  Also shows the
triangle-based variant meeting floor(n/4) for the all-cycles family.
"""

from graphisol import AllCycles, C4_FAMILY, CYCLE4, K3, build_b, encode_graph6, iota_exact

print(f"{'n':>3} {'graph6':<12} {'iota':>4} {'floor(n/5)':>10}")
for n in range(1, 26):
    g = build_b(n, CYCLE4)
    cert = iota_exact(g, C4_FAMILY)
    marker = "=" if cert.size == n // 5 else "!"
    print(f"{n:>3} {encode_graph6(g):<12} {cert.size:>4} {n // 5:>10}  {marker}")
    assert cert.size == n // 5

print("\nwitness for n=25:", iota_exact(build_b(25, CYCLE4), C4_FAMILY).set_d)
print("(the five spine vertices, each wired to its own square)")

print("\ntriangle spine variant vs the all-cycles family:")
for n in range(4, 13):
    g = build_b(n, K3)
    cert = iota_exact(g, AllCycles())
    print(f"  n={n:>2}: iota={cert.size} floor(n/4)={n // 4}")
    assert cert.size == n // 4
