"""
Clifford algebras as deformed exterior algebras
===============================================

With the zero form the product is the wedge; signature (0, 2) gives
the quaternions.
"""
from extalg import SymmetricForm, geometric_product, multiplication_table, signature_form
from extalg.clifford import blade, real_classification, table_as_text

print(table_as_text(multiplication_table(signature_form(0, 2)), 2))

# the pseudoscalar of spacetime squares to -1
b = signature_form(1, 3)
I = blade(4, [1, 2, 3, 4])
print("I * I =", geometric_product(b, I, I))

# off-diagonal forms work too
b = SymmetricForm([[1, 3], [3, 2]])
print(table_as_text(multiplication_table(b), 2))

for p, q in [(0, 1), (0, 2), (1, 1), (3, 0), (1, 3)]:
    print(f"Cl({p},{q}) ~", real_classification(p, q))
