#!/usr/bin/env python3
"""The exponent-2 path: connecting half-degree subalgebras through
symplectic involutions.

For an algebra of exponent dividing 2 and degree 2m, any two balanced
m-dimensional separable subalgebras L_1, L_2 are joined by a chain of three
generator lines.  The construction: fix symplectic involutions with
L_i symmetric, twist one into the other by a symmetric unit u, and route
through subalgebras generated by a symmetric alpha and u*alpha whose
degree-m (Pfaffian) polynomials are squarefree.
"""

import random
from fractions import Fraction

from csawitness import (
    QQ, PrimeField, connect_exp2, generate_etale, is_et_m_point,
    make_matrix_algebra, make_quaternion, pfaffian_char_poly,
    solve_inner_twist, symplectic_fixing_involution, tensor_product,
    verify_witness,
)
from csawitness.etale import random_balanced_pair_subalgebra
from csawitness.witness import default_symplectic_involution

F7 = PrimeField(7)

print("== the construction, step by step, on M_4(F_7) ==")
A = make_matrix_algebra(F7, 4)
rng = random.Random(41)
L1 = random_balanced_pair_subalgebra(A, rng)
L2 = random_balanced_pair_subalgebra(A, rng)
print(f"endpoints: two type-[2,2] subalgebras, equal: {L1 == L2}")

tau = default_symplectic_involution(A)
s1 = symplectic_fixing_involution(L1, tau, rng_seed=1)
s2 = symplectic_fixing_involution(L2, tau, rng_seed=2)
print(f"fixing involutions found: both {s1.kind}")
assert s1(L1.generator) == L1.generator

u = solve_inner_twist(s1, s2)
print(f"inner twist u found, symmetric for the first involution: "
      f"{s1(u) == u}")

prp = pfaffian_char_poly(s1, u)
print(f"Pfaffian polynomial of u has degree {prp.degree}")

chain = connect_exp2(L1, L2, rng_seed=41)
print(f"chain built: {len(chain)} segments")
report = verify_witness(chain, list(F7.elements()))
print(f"exhaustive verification over F_7: pass={report.passed}")

for k, seg in enumerate(chain.segments):
    good = [t for t in F7.elements() if not F7.is_zero(seg.validity.eval(t))]
    assert all(is_et_m_point(seg.evaluate(t), 2) for t in good)
    print(f"  segment {k}: {len(good)}/7 valid parameters, all balanced type")

print()
print("== the same chain over Q on a split biquaternion ==")
H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
S = make_quaternion(QQ, Fraction(1), Fraction(1))
B = tensor_product(H, S)
L1 = generate_etale(B.basis_element(4))  # the line through i x 1
L2 = generate_etale(B.basis_element(2))  # the line through 1 x j
chain = connect_exp2(L1, L2, rng_seed=7)
samples = [Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1)]
report = verify_witness(chain, samples)
print(f"rational chain with {len(chain)} segments: pass={report.passed}")
print("done.")
