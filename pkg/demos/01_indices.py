"""Harmonic polynomial of a small graph and the indices it determines.

Run with ``python demos/01_indices.py``.
"""
from fractions import Fraction

from harmpoly import derivative_identities, harmonic_polynomial, index_report, parse_edge_list

# a triangle with a tail: degrees 3, 2, 2, 1
g = parse_edge_list("""
a b
b c
c a
a d
""")
print("labels:", g.labels)

p = harmonic_polynomial(g)
print("H(G,x) =", p)
print("H(G,1) =", p(1), "which is the edge count", g.m)
print("H(G,1/2) =", p(Fraction(1, 2)))

report = index_report(g, alphas=[-1, 2, Fraction(1, 2)])
print()
print(report.to_text())

# every evaluation at x = 1 is a degree-based index in disguise
print()
for rel in derivative_identities(g, k_max=3):
    print(("ok   " if rel.holds else "FAIL ") + str(rel))
