"""
The Horrocks-Mumford bundle
===========================

A 2 x 5 matrix of quadrics over E(5). The Euler characteristic along
the table is a quartic in the twist.
"""
import time
from fractions import Fraction

from extalg import ExteriorMatrix, MultiVector, cohomology_table, module_from_matrix, tate_window
from extalg.fields import GF

F = GF(32003)
e = [None] + [MultiVector.monomial(5, (i,), 1, F) for i in range(1, 6)]
pattern = [[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], [(3, 5), (4, 1), (5, 2), (1, 3), (2, 4)]]
entries = {(r, c): e[i] ^ e[j] for r in range(2) for c, (i, j) in enumerate(pattern[r])}
A = ExteriorMatrix(5, [-2, -2], [-4] * 5, entries, F)

t0 = time.perf_counter()
W = tate_window(module_from_matrix(A, "image", index=-1), -5, 5)
print(f"window built in {time.perf_counter() - t0:.2f}s, ranks {W.term_ranks()}")
print("checks:", W.verify())

C = cohomology_table(W)
print(C.to_text())

for q in C.full_twists():
    x = q + 2
    closed = Fraction((x * x - 1) * (x * x - 24), 12)
    print(f"chi(F({q})) = {C.euler_characteristic(q):4d}   quartic gives {closed}")
