"""
Wedge products, contraction and the Hodge star
==============================================

Monomials are bitmasks, so e1^e3 is the integer 0b101.
"""
from extalg import DualVector, MultiVector, contract, hodge_dual, meet, wedge

n = 4
e = [None] + [MultiVector.monomial(n, (i,)) for i in range(1, n + 1)]

# the wedge picks up the sign of sorting the indices
print("e2 ^ e4 ^ e1 ^ e3 =", wedge(wedge(e[2], e[4]), wedge(e[1], e[3])))
print("e1 ^ e1 =", wedge(e[1], e[1]))

# a vector squares to zero, even a messy one
v = e[1].scale(3) + e[2] - e[4].scale(2)
print("v ^ v =", wedge(v, v))

# contraction with e1* + ... + e4* is a boundary operator
u = DualVector.sum_all(n)
top = wedge(wedge(e[1], e[2]), e[3])
print("boundary of e1e2e3:", contract(u, top))
print("applied twice:", contract(u, contract(u, top)))

# Hodge star and the meet of two planes in 4-space
print("*(e1 ^ e2) =", hodge_dual(wedge(e[1], e[2])))
print("meet(e1e2e3, e2e3e4) =", meet(top, wedge(wedge(e[2], e[3]), e[4])))
