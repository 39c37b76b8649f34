import random
from fractions import Fraction

import pytest

from csawitness.algebra import (
    make_matrix_algebra, make_quaternion, matrix_of, poly_eval_at_element,
    reduced_char_poly, tensor_product,
)
from csawitness.errors import (
    InvalidFormError, InvalidInputError, UnsupportedFieldError,
)
from csawitness.fields import QQ, PrimeField
from csawitness.involutions import (
    ORTHOGONAL, SYMPLECTIC, adjoint_involution, conjugate_involution,
    involution_from_matrix, involution_type, pfaffian_char_poly,
    quaternion_conjugation, quaternion_reversal, standard_alternating_matrix,
    sym_basis, tensor_involution, transpose_involution, twist_by_inner,
)
from csawitness.linalg import identity
from csawitness.poly import Poly

F7 = PrimeField(7)


def test_transpose_on_m3_is_orthogonal():
    A = make_matrix_algebra(QQ, 3)
    s = transpose_involution(A)
    assert s.kind == ORTHOGONAL
    assert len(sym_basis(s)) == 6  # n(n+1)/2


def test_alternating_j_on_m2():
    A = make_matrix_algebra(QQ, 2)
    J = standard_alternating_matrix(QQ, 2)
    s = adjoint_involution(A, J)
    assert s.kind == SYMPLECTIC
    assert len(sym_basis(s)) == 1
    # sigma(x) = tr(x) 1 - x on 2x2 matrices
    rng = random.Random(0)
    for _ in range(20):
        x = A.random_element(rng)
        m = matrix_of(A, x.coords)
        tr = m[0][0] + m[1][1]
        assert s(x) == A.from_scalar(tr) - x


def test_alternating_j_on_m4():
    A = make_matrix_algebra(F7, 4)
    s = adjoint_involution(A, standard_alternating_matrix(F7, 4))
    assert s.kind == SYMPLECTIC
    assert len(sym_basis(s)) == 6  # n(n-1)/2


def test_adjoint_rejects_bad_forms():
    A = make_matrix_algebra(QQ, 2)
    with pytest.raises(InvalidFormError):
        adjoint_involution(A, [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
    with pytest.raises(InvalidFormError):
        adjoint_involution(A, [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]])


def test_characteristic_two_rejected():
    F2 = PrimeField(2)
    A = make_matrix_algebra(F2, 2)
    with pytest.raises(UnsupportedFieldError):
        transpose_involution(A)


def test_quaternion_conjugation():
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    s = quaternion_conjugation(H)
    assert s.kind == SYMPLECTIC
    one, i, j, k = (H.basis_element(t) for t in range(4))
    assert s(i) == -i and s(j) == -j and s(k) == -k and s(one) == one
    # x sigma(x) is the reduced norm: for x = 1 + i + j it is 3
    x = one + i + j
    assert x * s(x) == H.from_scalar(Fraction(3))
    for t in range(4):
        b = H.basis_element(t)
        assert s(s(b)) == b


def test_quaternion_reversal_is_orthogonal():
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    r = quaternion_reversal(H)
    assert r.kind == ORTHOGONAL
    assert len(sym_basis(r)) == 3


def test_involution_type_examples():
    assert involution_type(transpose_involution(make_matrix_algebra(QQ, 2))) == ORTHOGONAL
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    assert involution_type(quaternion_conjugation(H)) == SYMPLECTIC
    A = make_matrix_algebra(F7, 4)
    assert involution_type(adjoint_involution(A, standard_alternating_matrix(F7, 4))) == SYMPLECTIC


def test_type_invariant_under_conjugation_seeded():
    rng = random.Random(5)
    A = make_matrix_algebra(F7, 3)
    s = transpose_involution(A)
    B = make_matrix_algebra(F7, 4)
    t = adjoint_involution(B, standard_alternating_matrix(F7, 4))
    for sigma, alg in ((s, A), (t, B)):
        done = 0
        while done < 10:
            g = alg.random_element(rng)
            if alg.inverse(g.coords) is None:
                continue
            assert conjugate_involution(sigma, g).kind == sigma.kind
            done += 1


def test_involution_from_matrix_rejects_non_involutions():
    A = make_matrix_algebra(QQ, 2)
    with pytest.raises(InvalidInputError):
        involution_from_matrix(A, identity(QQ, 4))  # identity is an automorphism,
        # but it is not of order-two-anti type: it fixes everything, dim Sym = 4


def test_tensor_involution_types():
    H1 = make_quaternion(F7, 3, 5)
    H2 = make_quaternion(F7, 3, 6)
    T = tensor_product(H1, H2)
    sp_sp = tensor_involution(quaternion_conjugation(H1), quaternion_conjugation(H2), T)
    assert sp_sp.kind == ORTHOGONAL
    sp_orth = tensor_involution(quaternion_conjugation(H1), quaternion_reversal(H2), T)
    assert sp_orth.kind == SYMPLECTIC


def test_pfaffian_identity_element():
    A = make_matrix_algebra(QQ, 2)
    s = adjoint_involution(A, standard_alternating_matrix(QQ, 2))
    assert pfaffian_char_poly(s, A.one) == Poly.from_ints(QQ, [-1, 1])


def test_pfaffian_two_eigenvalue_element():
    # With J pairing rows (1,2) and (3,4), diag(1,1,2,2) is J-symmetric;
    # its reduced charpoly is ((x-1)(x-2))^2 and the Pfaffian part is (x-1)(x-2).
    A = make_matrix_algebra(QQ, 4)
    s = adjoint_involution(A, standard_alternating_matrix(QQ, 4))
    d = [Fraction(0)] * 16
    for t, v in ((0, 1), (5, 1), (10, 2), (15, 2)):
        d[t] = Fraction(v)
    x = A.element(d)
    assert s(x) == x
    assert reduced_char_poly(x) == Poly.from_ints(QQ, [2, -3, 1]) ** 2
    assert pfaffian_char_poly(s, x) == Poly.from_ints(QQ, [2, -3, 1])


def test_pfaffian_rejects_nonsymmetric():
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    s = quaternion_conjugation(H)
    x = H.basis_element(1) + H.basis_element(2)  # i + j, anti-symmetric
    with pytest.raises(InvalidInputError):
        pfaffian_char_poly(s, x)


def test_pfaffian_contract_seeded():
    from csawitness.involutions import sym_basis as basis_of
    A = make_matrix_algebra(F7, 4)
    s = adjoint_involution(A, standard_alternating_matrix(F7, 4))
    basis = basis_of(s)
    rng = random.Random(11)
    for _ in range(100):
        coords = [F7.zero] * 16
        for b in basis:
            c = F7.random(rng)
            for t, v in enumerate(b):
                coords[t] = F7.add(coords[t], F7.mul(c, v))
        x = A.element(coords)
        prp = pfaffian_char_poly(s, x)
        assert prp.degree == 2
        assert prp * prp == reduced_char_poly(x)
        assert poly_eval_at_element(prp, x).is_zero()


def test_twist_by_inner():
    A = make_matrix_algebra(F7, 3)
    s = transpose_involution(A)
    # twisting by an invertible symmetric element keeps the type
    d = A.element([(3 if divmod(t, 3)[0] == divmod(t, 3)[1] else 0) for t in range(9)])
    t = twist_by_inner(s, d)
    assert t.kind == ORTHOGONAL
