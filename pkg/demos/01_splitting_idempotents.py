#!/usr/bin/env python3
"""Right ideals, splitting idempotents, and corner algebras.

Every right ideal I of a semisimple algebra is generated by an idempotent:
I = eA with e^2 = e.  This script builds some algebras, cuts out random
ideals, solves for their idempotents, and walks the dictionary between the
ideals inside I = eA and the right ideals of the corner algebra eAe.
"""

import random
from fractions import Fraction

from csawitness import (
    QQ, PrimeField, corner_algebra, ideal_generated, induce_from_corner,
    make_matrix_algebra, make_quaternion, random_ideal, restrict_to_corner,
    splitting_idempotent, tensor_product,
)

F5 = PrimeField(5)

print("== a 3x3 matrix algebra over F_5 ==")
A = make_matrix_algebra(F5, 3)
print(f"degree {A.degree}, dimension {A.dim}, basis {A.labels[:4]} ...")

# the ideal generated by the first matrix unit is the first-row ideal
I = ideal_generated([A.basis_element(0)])
print(f"ideal generated by E11 has reduced dimension {I.rdim}")

e = splitting_idempotent(I)
print(f"splitting idempotent: {e}")
assert (e * e - e).is_zero()
assert ideal_generated([e]) == I
print("checked: e^2 = e and eA = I exactly")

print()
print("== corner algebra of a rank-2 idempotent ==")
e2 = A.basis_element(0) + A.basis_element(4)  # E11 + E22
D = corner_algebra(e2)
print(f"(E11+E22) A (E11+E22) is a degree-{D.degree} algebra of dimension {D.dim}")

# ideals contained in e2 A correspond exactly to ideals of the corner
rng = random.Random(7)
big = ideal_generated([e2])
sub = ideal_generated([A.basis_element(0)])  # first-row ideal sits inside
assert big.contains_ideal(sub)
K = restrict_to_corner(sub, D)
print(f"restricting a rdim-{sub.rdim} subideal gives a rdim-{K.rdim} corner ideal")
assert induce_from_corner(K) == sub
print("checked: restrict and induce are mutually inverse")

print()
print("== the same story with rational quaternion coefficients ==")
H = make_quaternion(QQ, Fraction(-1), Fraction(-1))  # Hamilton quaternions
M2H = tensor_product(make_matrix_algebra(QQ, 2), H)
print(f"M_2(H) has degree {M2H.degree} and dimension {M2H.dim} over Q")
J = random_ideal(M2H, 2, rng)
f = splitting_idempotent(J)
assert (f * f - f).is_zero() and ideal_generated([f]) == J
print(f"random rdim-2 ideal split by an idempotent with "
      f"{sum(1 for c in f.coords if c != 0)} nonzero coordinates")
print("done.")
