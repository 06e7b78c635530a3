"""
Orlik-Solomon algebras of hyperplane arrangements
=================================================

The graded dimensions are the Betti numbers of the complement.
"""
from extalg import VectorConfiguration, complement_betti, matroid_from_vectors, orlik_solomon

braid = VectorConfiguration(3, [[1, -1, 0], [0, 1, -1], [-1, 0, 1]])
M = matroid_from_vectors(braid)
print("rank of the braid matroid:", M.rank)

A = orlik_solomon(M)
print("dims:", A.degree_dims)
for r, basis in enumerate(A.degree_bases):
    print(f"  degree {r}:", basis)

# the Poincare polynomial factors as (1 + t)(1 + 2t)
print("complement Betti numbers:", complement_betti(braid))

# coordinate hyperplanes: a torus, so the dims are binomial
print("coordinate arrangement:", orlik_solomon(matroid_from_vectors(VectorConfiguration(2, [[1, 0], [0, 1]]))).degree_dims)
