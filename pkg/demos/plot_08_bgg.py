"""
From E-modules to linear complexes
==================================

Each graded piece becomes a free S-module and the action of e_i becomes
multiplication by x_i.
"""
from extalg import ExteriorMatrix, MultiVector, bgg_linear_complex, module_from_matrix
from extalg.tate import exterior_module

B = bgg_linear_complex(exterior_module(3))
print("ranks:", B.ranks)
for p, d in sorted(B.differentials.items()):
    print(f"d^{p} =", d.to_strings())
print("d^2 = 0:", B.squares_vanish)

# the module behind O on P^1 gives a single 3 x 2 linear matrix
e1 = MultiVector.monomial(2, (1,))
e2 = MultiVector.monomial(2, (2,))
M = module_from_matrix(ExteriorMatrix(2, [0, 0], [-1], {(0, 0): e2, (1, 0): e1}), "cokernel")
print(bgg_linear_complex(M).differentials[0].to_strings())
