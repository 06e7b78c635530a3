"""
Lie algebra cohomology from a derivation of E(V)
================================================

Transposing a bracket gives a degree-one derivation; it squares to zero
exactly when the bracket satisfies Jacobi.
"""
from extalg import Bracket, derivation_from_bracket, is_differential, jacobi_holds, lie_cohomology
from extalg.lie import abelian, sl2

g = sl2()
print("sl2 is Lie:", jacobi_holds(g), " d^2 = 0:", is_differential(derivation_from_bracket(g)))
print("H*(sl2) =", lie_cohomology(g))

print("H*(abelian, dim 4) =", lie_cohomology(abelian(4)))

heis = Bracket(3, {(1, 2, 3): 1})
print("H*(Heisenberg) =", lie_cohomology(heis))

# break sl2 by hand: both tests notice
bad = Bracket(3, {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (1, 3, 1): 1})
print("perturbed:", jacobi_holds(bad), is_differential(derivation_from_bracket(bad)))
