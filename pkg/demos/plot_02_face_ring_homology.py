"""
Homology of a simplicial complex from its face ring
===================================================

A path 1-2 next to a hollow triangle 3-4-5 glued to a solid one 4-5-6.
"""
from extalg import GF, from_facets, hilbert_series_face_ring, reduced_cohomology, reduced_homology

cx = from_facets(6, [[1, 2], [3, 4], [3, 5], [4, 5, 6]])
print("f-vector:", cx.f_vector())

# two components and one loop, over QQ and over a large prime
print("reduced homology over QQ:", reduced_homology(cx).reduced_h)
print("reduced homology over GF(32003):", reduced_homology(cx, GF(32003)).reduced_h)
print("reduced cohomology:", reduced_cohomology(cx).reduced_h)

# the projective plane: torsion shows up only in characteristic two
rp2 = from_facets(6, [
    [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
    [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6],
])
print("RP2 over QQ:", reduced_homology(rp2).reduced_h)
print("RP2 over GF(2):", reduced_homology(rp2, GF(2)).reduced_h)

# the Stanley-Reisner Hilbert series of the boundary of a triangle
hs = hilbert_series_face_ring(from_facets(3, [[1, 2], [2, 3], [1, 3]]))
print("H(t) =", hs, " first terms", hs.coefficients(6))
