"""Commutative separable subalgebras generated by a single element.

A subalgebra is stored with a primitive generator, its minimal polynomial
(required squarefree) and the canonical rref basis of its linear span, so
subspace equality is exact.  The type of a subalgebra is the multiset of
geometric idempotent ranks; it is computed from a factorization of the
minimal polynomial via the orbit-quotient formula rdim(e_i A) / deg(f_i),
which avoids explicit splitting fields.
"""

from .algebra import AlgebraElement, poly_eval_at_element
from .errors import (
    InvalidInputError, NotEtaleError, StructuralError, UnsupportedFieldError,
)
from .fields import Rationals
from .ideals import ideal_generated
from .linalg import in_row_space, rref, solve, transpose
from .poly import Poly, factor, poly_gcd, poly_ext_gcd, poly_squarefree, rational_roots


class Partition:
    """An unordered multiset of positive integers, stored descending."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise InvalidInputError("partition parts must be positive")
        self.parts = parts

    def distinct(self):
        return sorted(set(self.parts), reverse=True)

    def multiplicity(self, i):
        return self.parts.count(i)

    @property
    def length(self):
        return len(self.parts)

    @property
    def total(self):
        return sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and other.parts == self.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{list(self.parts)}"


class EtaleSubalgebra:
    __slots__ = ("algebra", "generator", "minpoly", "basis", "pivots",
                 "supplied_factors", "_type")

    def __init__(self, algebra, generator, minpoly, basis, pivots,
                 supplied_factors=None):
        self.algebra = algebra
        self.generator = generator
        self.minpoly = minpoly
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)
        self.supplied_factors = supplied_factors
        self._type = None

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, coords):
        return in_row_space(self.algebra.field, self.basis, self.pivots, coords)

    def is_maximal(self):
        return self.dim == self.algebra.degree

    def __eq__(self, other):
        """Subspace equality: independent of the chosen generator."""
        return (isinstance(other, EtaleSubalgebra) and other.algebra == self.algebra
                and other.basis == self.basis)

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"EtaleSubalgebra(dim={self.dim} of degree-{self.algebra.degree} algebra)"


def minimal_polynomial(x):
    """Least-degree monic annihilator, from the first linear dependence of
    the powers 1, x, x^2, ..."""
    alg = x.algebra
    f = alg.field
    powers = [alg.unit]
    cur = alg.one
    while True:
        span, pivots = rref(f, powers)
        nxt = cur * x
        if in_row_space(f, span, pivots, nxt.coords):
            sol = solve(f, transpose(powers), list(nxt.coords))
            coeffs = [f.neg(c) for c in sol] + [f.one]
            return Poly(f, coeffs)
        powers.append(nxt.coords)
        cur = nxt


def generate_etale(a, minpoly_factors=None):
    """The subalgebra spanned by the powers of a; requires a squarefree
    minimal polynomial (separability).  Maximal iff its dimension equals the
    degree of the ambient algebra."""
    alg = a.algebra
    f = alg.field
    mp = minimal_polynomial(a)
    if not poly_squarefree(mp):
        raise NotEtaleError(
            f"minimal polynomial of degree {mp.degree} is not squarefree")
    rows = []
    cur = alg.one
    for _ in range(mp.degree):
        rows.append(cur.coords)
        cur = cur * a
    basis, pivots = rref(f, rows)
    if len(basis) != mp.degree:
        raise StructuralError("power span does not match the minimal polynomial degree")
    supplied = None
    if minpoly_factors is not None:
        supplied = _verify_supplied_factors(mp, minpoly_factors)
    E = EtaleSubalgebra(alg, a, mp, basis, pivots, supplied)
    _check_commutative(E)
    return E


def _check_commutative(E):
    alg = E.algebra
    for i, b in enumerate(E.basis):
        for c in E.basis[i + 1:]:
            if alg.mul(b, c) != alg.mul(c, b):
                raise StructuralError("subalgebra basis does not commute")


def _verify_supplied_factors(mp, factors):
    """Certificate check: monic factors multiplying to the minimal polynomial,
    pairwise coprime; irreducibility is verified where decidable (degree <= 3
    via rational roots) and trusted above that."""
    field = mp.field
    prod = Poly.one(field)
    for g in factors:
        if not g.is_monic() or g.degree < 1:
            raise InvalidInputError("supplied factors must be monic of positive degree")
        prod = prod * g
    if prod != mp:
        raise InvalidInputError("supplied factors do not multiply to the minimal polynomial")
    for i, g in enumerate(factors):
        for h in factors[i + 1:]:
            if poly_gcd(g, h).degree != 0:
                raise InvalidInputError("supplied factors are not pairwise coprime")
    if isinstance(field, Rationals):
        for g in factors:
            if 2 <= g.degree <= 3:
                roots, _ = rational_roots(g)
                if roots:
                    raise InvalidInputError(
                        "supplied factor of degree <= 3 has a rational root, "
                        "so it is not irreducible")
    return tuple(factors)


def _irreducible_factors(E):
    """Monic irreducible factors of the minimal polynomial, as far as this
    module can certify them.

    Finite fields: full factorization.  Q: the supplied certificate if any,
    else rational roots plus a rootless cofactor of degree <= 3 (which is then
    irreducible); higher-degree cofactors need a certificate.
    """
    mp = E.minpoly
    field = mp.field
    if not isinstance(field, Rationals):
        _, facs = factor(mp)
        if any(m > 1 for _, m in facs):
            raise StructuralError("squarefree minimal polynomial factored with multiplicity")
        return [g for g, _ in facs]
    if E.supplied_factors is not None:
        return list(E.supplied_factors)
    roots, rest = rational_roots(mp)
    out = [Poly(field, [-r, field.one]) for r, m in roots]
    if rest.degree == 0:
        return out
    if rest.degree <= 3:
        out.append(rest)
        return out
    raise UnsupportedFieldError(
        "minimal polynomial has an unfactored part of degree "
        f"{rest.degree} over Q; supply minpoly_factors")


def factor_idempotents(E):
    """[(f_i, e_i)]: for each irreducible factor, the idempotent of E that
    projects onto the F[x]/(f_i) block, built by CRT inside F[x]/(minpoly)."""
    mp = E.minpoly
    field = mp.field
    alg = E.algebra
    factors = _irreducible_factors(E)
    out = []
    total = alg.zero
    for fi in factors:
        gi = mp.exact_div(fi)
        g, s, t = poly_ext_gcd(gi, fi)
        if g.degree != 0:
            raise StructuralError("factors are not coprime")
        # s*gi = 1 mod fi, = 0 mod f_j: idempotent polynomial mod mp
        ei_poly = (s * gi) % mp
        ei = poly_eval_at_element(ei_poly, E.generator)
        if not (ei * ei - ei).is_zero():
            raise StructuralError("CRT element is not idempotent")
        out.append((fi, ei))
        total = total + ei
    if total != alg.one:
        raise StructuralError("idempotents do not sum to 1")
    return out


def etale_type(E):
    """The multiset of geometric idempotent ranks.

    Each irreducible factor of degree d_i contributes d_i equal parts of size
    rdim(e_i A) / d_i; the parts always sum to the degree of the algebra.
    """
    if E._type is not None:
        return E._type
    alg = E.algebra
    parts = []
    for fi, ei in factor_idempotents(E):
        r = ideal_generated([ei]).rdim
        d = fi.degree
        if r % d != 0:
            raise StructuralError(
                f"rank {r} of a degree-{d} factor idempotent is not divisible by {d}")
        parts.extend([r // d] * d)
    ptn = Partition(parts)
    if ptn.total != alg.degree:
        raise StructuralError("type parts do not sum to the degree")
    E._type = ptn
    return ptn


def is_et_m_point(E, m):
    """True iff E is an m-dimensional subalgebra of balanced type
    [n/m, ..., n/m]."""
    n = E.algebra.degree
    if m < 1 or n % m != 0:
        return False
    if E.dim != m:
        return False
    return etale_type(E) == Partition([n // m] * m)


def independent_ideals_check(ideals):
    """True iff the sum of the ideal subspaces is direct and equals A."""
    if not ideals:
        return False
    alg = ideals[0].algebra
    for i in ideals:
        if i.algebra != alg:
            raise InvalidInputError("ideals live in different algebras")
    rows = [b for i in ideals for b in i.basis]
    total = sum(len(i.basis) for i in ideals)
    basis, _ = rref(alg.field, rows)
    return len(basis) == total == alg.dim


def subalgebra_to_ideal_tuple(E):
    """The ideals e_i A for the rational idempotents of E, in a deterministic
    order.  These are the minimal geometric idempotents exactly when the
    minimal polynomial splits into linear factors over the base field."""
    pairs = factor_idempotents(E)
    ideals = [ideal_generated([ei]) for _, ei in pairs]
    ideals.sort(key=lambda i: i.basis)
    return tuple(ideals)


# ---------------------------------------------------------------------------
# seeded generators used by tests and the CLI


def random_maximal_etale(A, rng, budget=200):
    from .errors import FieldTooSmallError
    for _ in range(budget):
        a = A.random_element(rng)
        try:
            E = generate_etale(a)
        except NotEtaleError:
            continue
        if E.is_maximal():
            return E
    raise FieldTooSmallError("no maximal separable element found within budget")


def random_balanced_pair_subalgebra(A, rng, budget=400):
    """A random member of the type-[n/2, n/2] stratum of a matrix-preset
    algebra, built by conjugating a two-eigenvalue diagonal element."""
    from .algebra import coords_of_matrix
    from .errors import FieldTooSmallError
    if A.preset.get("kind") != "matrix":
        raise InvalidInputError("random balanced subalgebras need a matrix preset")
    n = A.preset["n"]
    if n % 2:
        raise InvalidInputError("degree must be even")
    f = A.field
    for _ in range(budget):
        c1, c2 = f.random(rng), f.random(rng)
        if c1 == c2:
            continue
        g = A.element(tuple(f.random(rng) for _ in range(A.dim)))
        ginv = A.inverse(g.coords)
        if ginv is None:
            continue
        diag = [[f.zero] * n for _ in range(n)]
        for t in range(n):
            diag[t][t] = c1 if t < n // 2 else c2
        x = g * A.element(coords_of_matrix(A, diag)) * A.element(ginv)
        E = generate_etale(x)
        if is_et_m_point(E, 2):
            return E
    raise FieldTooSmallError("no balanced-type subalgebra found within budget")
