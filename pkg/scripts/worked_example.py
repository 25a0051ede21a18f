"""Print the full B_4 worked example: every positive root with its
F-polynomial and g-vector, then the quantum F-polynomials at d_scale=2
for the five roots supported on vertices 2..4."""

from clusterfp import (
    CartanType,
    f_polynomial_closed,
    g_vector_closed,
    positive_roots,
    quantum_f_polynomial_closed,
)
from clusterfp.cli import poly_text, qpoly_text, vector_text

# arrows 1->2, 3->2, 3->4
B = [[0, -1, 0, 0], [1, 0, 1, 0], [0, -1, 0, -1], [0, 0, 2, 0]]
t = CartanType("B", 4)

print("classical data, B_4 with arrows 1->2, 3->2, 3->4")
print("-" * 64)
for d in positive_roots(t):
    F = f_polynomial_closed(B, t, d)
    g = g_vector_closed(B, d)
    print(f"d={vector_text(d)}  g={vector_text(g)}")
    print(f"  F = {poly_text(F)}")

highlight = [(0, 1, 0, 0), (0, 1, 1, 0), (0, 1, 1, 1), (0, 1, 2, 2), (1, 2, 2, 2)]
print()
print("quantum data at d_scale=2")
print("-" * 64)
for d in highlight:
    P = quantum_f_polynomial_closed(B, t, 2, d)
    print(f"d={vector_text(d)}")
    print(f"  F = {qpoly_text(P)}")
