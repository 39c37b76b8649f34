import random
from fractions import Fraction

import pytest

from csawitness.algebra import (
    extend_scalars, make_matrix_algebra, make_quaternion,
)
from csawitness.errors import NotEtaleError, UnsupportedFieldError
from csawitness.etale import (
    EtaleSubalgebra, Partition, etale_type, factor_idempotents, generate_etale,
    independent_ideals_check, is_et_m_point, minimal_polynomial,
    random_balanced_pair_subalgebra, random_maximal_etale,
    subalgebra_to_ideal_tuple,
)
from csawitness.fields import QQ, PrimeField, standard_extension
from csawitness.ideals import ideal_generated
from csawitness.poly import Poly

F2, F3, F5, F7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)


def diag(A, *entries):
    n = A.preset["n"]
    coords = [A.field.zero] * A.dim
    for t, v in enumerate(entries):
        coords[t * n + t] = A.field.from_int(v) if isinstance(v, int) else v
    return A.element(coords)


def test_generate_etale_diag():
    A = make_matrix_algebra(QQ, 2)
    E = generate_etale(diag(A, 1, 2))
    assert E.dim == 2
    assert E.minpoly == Poly.from_ints(QQ, [2, -3, 1])  # (x-1)(x-2)
    assert E.is_maximal()


def test_generate_etale_rejects_nilpotents():
    A = make_matrix_algebra(QQ, 2)
    with pytest.raises(NotEtaleError):
        generate_etale(A.basis_element(1))  # E12 has minpoly x^2


def test_generate_etale_quaternion_subfield():
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    E = generate_etale(H.basis_element(1))
    assert E.dim == 2
    assert E.minpoly == Poly.from_ints(QQ, [1, 0, 1])  # x^2 + 1
    # spanned by 1 and i
    assert E.contains(H.unit) and E.contains(H.basis_coords(1))


def test_minimal_polynomial_of_scalar():
    A = make_matrix_algebra(F5, 3)
    assert minimal_polynomial(A.from_scalar(3)) == Poly.from_ints(F5, [-3, 1])


def test_etale_type_maximal_is_all_ones():
    for field, n in ((F5, 3), (F7, 2), (F3, 4)):
        A = make_matrix_algebra(field, n)
        E = random_maximal_etale(A, random.Random(n))
        assert etale_type(E) == Partition([1] * n)


def test_etale_type_two_blocks():
    A = make_matrix_algebra(QQ, 4)
    E = generate_etale(diag(A, 0, 0, 1, 1))
    assert etale_type(E) == Partition([2, 2])
    E2 = generate_etale(diag(A, 0, 1, 1, 1))
    assert etale_type(E2) == Partition([1, 3])


def test_etale_type_subfield_f4_in_m2f2():
    # companion matrix of x^2+x+1 generates F_4 inside M_2(F_2)
    A = make_matrix_algebra(F2, 2)
    a = A.element([0, 1, 1, 1])
    E = generate_etale(a)
    assert E.minpoly == Poly.from_ints(F2, [1, 1, 1])
    assert etale_type(E) == Partition([1, 1])


def test_etale_type_over_q_irreducible_quadratic():
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    E = generate_etale(H.basis_element(1))  # Q(i), minpoly x^2+1
    assert etale_type(E) == Partition([1, 1])


def test_is_et_m_point():
    A = make_matrix_algebra(QQ, 4)
    assert is_et_m_point(generate_etale(diag(A, 0, 0, 1, 1)), 2)
    assert not is_et_m_point(generate_etale(diag(A, 0, 1, 1, 1)), 2)
    B = make_matrix_algebra(F5, 3)
    E = random_maximal_etale(B, random.Random(4))
    assert is_et_m_point(E, 3)


def test_independent_ideals_check():
    A = make_matrix_algebra(F5, 2)
    I1 = ideal_generated([A.basis_element(0)])
    I2 = ideal_generated([A.basis_element(3)])
    assert independent_ideals_check([I1, I2])
    assert not independent_ideals_check([I1, I1])
    B = make_matrix_algebra(F5, 3)
    # split maximal etale: three idempotent ideals, independent
    E = generate_etale(diag(B, 0, 1, 2))
    ideals = subalgebra_to_ideal_tuple(E)
    assert len(ideals) == 3
    assert independent_ideals_check(list(ideals))
    # a random maximal etale may have fewer rational idempotents, but the
    # direct-sum property persists
    E2 = random_maximal_etale(B, random.Random(12))
    assert independent_ideals_check(list(subalgebra_to_ideal_tuple(E2)))


def test_subalgebra_to_ideal_tuple_cases():
    A = make_matrix_algebra(F5, 2)
    E = generate_etale(diag(A, 0, 1))
    ideals = subalgebra_to_ideal_tuple(E)
    assert len(ideals) == 2 and all(i.rdim == 1 for i in ideals)

    # a division-algebra subfield has only the trivial rational idempotent
    H = make_quaternion(QQ, Fraction(-1), Fraction(-1))
    E = generate_etale(H.basis_element(1))
    ideals = subalgebra_to_ideal_tuple(E)
    assert len(ideals) == 1 and ideals[0].rdim == H.degree


def test_f4_subfield_splits_after_scalar_extension():
    A = make_matrix_algebra(F2, 2)
    a = A.element([0, 1, 1, 1])
    E = generate_etale(a)
    assert len(subalgebra_to_ideal_tuple(E)) == 1
    F4 = standard_extension(2, 2)
    B = extend_scalars(A, F4, F4.lift)
    a4 = B.element([F4.lift(c) for c in a.coords])
    E4 = generate_etale(a4)
    ideals = subalgebra_to_ideal_tuple(E4)
    assert len(ideals) == 2
    assert independent_ideals_check(list(ideals))


def test_type_parts_sum_to_degree_seeded():
    rng = random.Random(77)
    checked = 0
    for field in (F2, F3, F5):
        for n in (2, 3):
            A = make_matrix_algebra(field, n)
            done = 0
            while done < 34:
                x = A.random_element(rng)
                try:
                    E = generate_etale(x)
                except NotEtaleError:
                    continue
                assert etale_type(E).total == n
                checked += 1
                done += 1
    assert checked >= 200


def test_subfield_has_single_distinct_rank():
    # irreducible minimal polynomial => all parts equal
    rng = random.Random(13)
    A = make_matrix_algebra(F3, 2)
    found = 0
    from csawitness.poly import is_irreducible
    while found < 10:
        x = A.random_element(rng)
        try:
            E = generate_etale(x)
        except NotEtaleError:
            continue
        if not is_irreducible(E.minpoly):
            continue
        assert len(etale_type(E).distinct()) == 1
        found += 1


def test_type_invariant_under_conjugation():
    rng = random.Random(19)
    A = make_matrix_algebra(F5, 3)
    for _ in range(10):
        E = random_maximal_etale(A, rng)
        while True:
            g = A.random_element(rng)
            ginv = A.inverse(g.coords)
            if ginv is not None:
                break
        conj = g * E.generator * A.element(ginv)
        assert etale_type(generate_etale(conj)) == etale_type(E)


def test_scalar_extension_type_consistency():
    # type over F_p equals the multiset of minimal idempotent ranks after
    # extending scalars to a splitting field (independent route)
    rng = random.Random(3)
    A = make_matrix_algebra(F3, 2)
    F9 = standard_extension(3, 2)
    checked = 0
    while checked < 15:
        x = A.random_element(rng)
        try:
            E = generate_etale(x)
        except NotEtaleError:
            continue
        B = extend_scalars(A, F9, F9.lift)
        xb = B.element([F9.lift(c) for c in x.coords])
        Eb = generate_etale(xb)
        ranks = []
        for fi, ei in factor_idempotents(Eb):
            assert fi.degree == 1  # F9 splits every quadratic over F3
            ranks.append(ideal_generated([ei]).rdim)
        assert Partition(ranks) == etale_type(E)
        checked += 1


def test_etale_type_unfactorable_over_q_raises():
    # x^4+1 is irreducible over Q but the module cannot certify that
    A = make_matrix_algebra(QQ, 4)
    comp = [[Fraction(0)] * 4 for _ in range(4)]
    for r in range(3):
        comp[r + 1][r] = Fraction(1)
    comp[0][3] = Fraction(-1)
    from csawitness.algebra import coords_of_matrix
    x = A.element(coords_of_matrix(A, comp))
    E = generate_etale(x)
    assert E.minpoly == Poly.from_ints(QQ, [1, 0, 0, 0, 1])
    with pytest.raises(UnsupportedFieldError):
        etale_type(E)
    # with a certificate it works
    E2 = generate_etale(x, minpoly_factors=[Poly.from_ints(QQ, [1, 0, 0, 0, 1])])
    assert etale_type(E2) == Partition([1, 1, 1, 1])


def test_random_balanced_pair_subalgebra():
    A = make_matrix_algebra(F7, 4)
    E = random_balanced_pair_subalgebra(A, random.Random(2))
    assert is_et_m_point(E, 2)
    assert etale_type(E) == Partition([2, 2])
