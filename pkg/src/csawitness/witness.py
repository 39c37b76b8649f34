"""Construction and verification of explicit rational-curve witnesses.

A PencilWitness is a machine-checkable parametrized curve: endpoints, the
data defining the point at parameter t, and a validity polynomial whose
nonvanishing at t certifies genuine membership there.  The convention is
fixed globally: t = 1 gives the start object, t = 0 the end.  Validity
polynomials are derived symbolically (rank minors, pencil minimal
polynomials, discriminants); sampling is only ever the verifier's job.
"""

import random
from fractions import Fraction

from .algebra import AlgebraElement, certified_exponent_divides_2
from .errors import (
    ConstructionFailedError, FieldTooSmallError, InvalidInputError,
    StructuralError, UnsupportedFieldError,
)
from .etale import generate_etale, is_et_m_point, minimal_polynomial
from .fields import Rationals
from .ideals import Flag, flag_check, module_presentation
from .involutions import (
    SYMPLECTIC, adjoint_involution, quaternion_conjugation,
    quaternion_reversal, standard_alternating_matrix, sym_basis,
    tensor_involution, transpose_involution, twist_by_inner,
)
from .linalg import kernel, rank, rref
from .poly import Poly, poly_squarefree
from .polyrings import (
    eval_coords, line_coords, pencil_min_poly, polymat_det, xpoly_discriminant,
)
from .quadrics import normalize_point

PARAM_CONVENTION = "t1_start_t0_end"

IDEAL_PENCIL = "ideal_pencil"
FLAG_PENCIL = "flag_pencil"
ETALE_LINE = "etale_line"
QUADRIC_LINE = "quadric_line"


class PencilWitness:
    """One parametrized segment with endpoints and a validity certificate."""

    __slots__ = ("kind", "algebra", "form", "data", "start", "end",
                 "validity", "meta", "open_set")

    def __init__(self, kind, start, end, validity, data, algebra=None,
                 form=None, meta=None, open_set=None):
        if validity.is_zero():
            raise ConstructionFailedError("validity polynomial is identically zero")
        self.kind = kind
        self.algebra = algebra
        self.form = form
        self.data = data
        self.start = start
        self.end = end
        self.validity = validity
        self.meta = dict(meta or {})
        self.open_set = open_set

    @property
    def field(self):
        return self.algebra.field if self.algebra is not None else self.form.field

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, t):
        """The domain object at parameter t; raises on degenerate parameters
        (the verifier only calls this where the validity polynomial is
        nonzero)."""
        if self.kind == IDEAL_PENCIL:
            return self._eval_ideal(t)
        if self.kind == FLAG_PENCIL:
            return self._eval_flag(t)
        if self.kind == ETALE_LINE:
            return self._eval_etale(t)
        if self.kind == QUADRIC_LINE:
            return self._eval_quadric(t)
        raise InvalidInputError(f"unknown witness kind {self.kind!r}")

    def _pencil_vectors_at(self, vecs, vecs_prime, t):
        f = self.field
        s = f.sub(f.one, t)
        out = []
        for w, wp in zip(vecs, vecs_prime):
            out.append(tuple(f.add(f.mul(t, a), f.mul(s, b)) for a, b in zip(w, wp)))
        return out

    def _eval_ideal(self, t):
        pres = module_presentation(self.algebra)
        vecs = self._pencil_vectors_at(self.data["pencil_w"],
                                       self.data["pencil_w_prime"], t)
        dbasis = pres.d_basis_coords()
        rows = [pres.vec_times_d(v, d) for v in vecs for d in dbasis]
        basis, _ = rref(self.field, rows)
        if len(basis) != len(vecs) * pres.d2:
            raise StructuralError(f"pencil drops rank at t={t}")
        return pres.ideal_from_subspace([tuple(r) for r in basis])

    def _eval_flag(self, t):
        pres = module_presentation(self.algebra)
        dbasis = pres.d_basis_coords()
        vecs = self._pencil_vectors_at(self.data["pencil_w"],
                                       self.data["pencil_w_prime"], t)
        ideals = []
        for lvl in self.data["levels"]:
            sub = vecs[:lvl]
            rows = [pres.vec_times_d(v, d) for v in sub for d in dbasis]
            basis, _ = rref(self.field, rows)
            if len(basis) != lvl * pres.d2:
                raise StructuralError(f"flag pencil drops rank at t={t}")
            ideals.append(pres.ideal_from_subspace([tuple(r) for r in basis]))
        return Flag(ideals)

    def _etale_generator_at(self, t):
        f = self.field
        s = f.sub(f.one, t)
        coords = tuple(f.add(f.mul(t, a), f.mul(s, b))
                       for a, b in zip(self.data["gen_start"], self.data["gen_end"]))
        return AlgebraElement(self.algebra, coords)

    def _eval_etale(self, t):
        return generate_etale(self._etale_generator_at(t))

    def _eval_quadric(self, t):
        pt = normalize_point(self.field, eval_coords(self.data["coord_polys"], t))
        if pt is None:
            raise StructuralError(f"curve coordinates vanish at t={t}")
        return pt

    def __repr__(self):
        return f"PencilWitness({self.kind}, validity degree {self.validity.degree})"


class WitnessChain:
    """Segments with matching intermediate endpoints."""

    __slots__ = ("segments", "_start", "_end")

    def __init__(self, segments, start=None, end=None):
        self.segments = tuple(segments)
        self._start = start
        self._end = end

    @property
    def start(self):
        return self.segments[0].start if self.segments else self._start

    @property
    def end(self):
        return self.segments[-1].end if self.segments else self._end

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        return f"WitnessChain({len(self.segments)} segments)"


# ---------------------------------------------------------------------------
# verification


class VerificationReport:
    def __init__(self):
        self.checks = []

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(n, d) for n, ok, d in self.checks if not ok]

    def to_json(self):
        return {"pass": self.passed,
                "checks": [{"name": n, "ok": ok, "detail": d}
                           for n, ok, d in self.checks]}

    def __repr__(self):
        return f"VerificationReport(pass={self.passed}, checks={len(self.checks)})"


def default_samples(field):
    if isinstance(field, Rationals):
        return [Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1)]
    return list(field.elements())


def _fmt(field, t):
    v = field.to_json(t)
    return v if isinstance(v, str) else ",".join(v)


def verify_witness(w, samples=None, open_set=None):
    """Re-check a witness or chain from scratch.

    Endpoint matches are exact object equalities; membership is checked at
    every sample where the validity polynomial is nonzero; chains also get
    continuity checks.  Failures are report entries, never exceptions.
    """
    if isinstance(w, WitnessChain):
        report = VerificationReport()
        for idx, seg in enumerate(w.segments):
            sub = verify_witness(seg, samples, open_set)
            for name, ok, detail in sub.checks:
                report.add(f"segment{idx}.{name}", ok, detail)
        for idx in range(len(w.segments) - 1):
            report.add(f"continuity@{idx}",
                       w.segments[idx].end == w.segments[idx + 1].start)
        return report

    report = VerificationReport()
    field = w.field
    if samples is None:
        samples = default_samples(field)
    report.add("validity_nonzero", not w.validity.is_zero())

    for name, t, target in (("endpoint_start", field.one, w.start),
                            ("endpoint_end", field.zero, w.end)):
        try:
            got = w.evaluate(t)
            report.add(name, got == target)
        except Exception as exc:
            report.add(name, False, f"evaluation failed: {exc}")

    if w.kind == QUADRIC_LINE:
        # on-quadric identity: q(curve(t)) == 0 as a polynomial in t
        identity = w.form.eval_polys(w.data["coord_polys"])
        report.add("on_quadric_identity", identity.is_zero())

    checker = {IDEAL_PENCIL: _check_ideal_sample,
               FLAG_PENCIL: _check_flag_sample,
               ETALE_LINE: _check_etale_sample,
               QUADRIC_LINE: _check_quadric_sample}[w.kind]
    osp = open_set if open_set is not None else w.open_set
    for t in samples:
        if field.is_zero(w.validity.eval(t)):
            continue
        try:
            ok, detail = checker(w, t, osp)
        except Exception as exc:
            ok, detail = False, str(exc)
        report.add(f"membership@t={_fmt(field, t)}", ok, detail)
    return report


def _check_ideal_sample(w, t, open_set):
    ideal = w.evaluate(t)
    want = w.meta.get("rdim")
    if want is not None and ideal.rdim != want:
        return False, f"rdim {ideal.rdim} != {want}"
    return True, ""


def _check_flag_sample(w, t, open_set):
    flag = w.evaluate(t)
    sig = tuple(w.meta.get("signature", ()))
    return flag_check(flag, sig), ""


def _check_etale_sample(w, t, open_set):
    E = w.evaluate(t)
    d = w.meta.get("etale_dim")
    if d is not None and E.dim != d:
        return False, f"dim {E.dim} != {d}"
    if w.meta.get("maximal") and not E.is_maximal():
        return False, "not maximal"
    m = w.meta.get("et_m")
    if m is not None and not is_et_m_point(E, m):
        return False, f"not a balanced type-m={m} subalgebra"
    if open_set is not None and not open_set(E):
        return False, "open-set predicate failed"
    return True, ""


def _check_quadric_sample(w, t, open_set):
    pt = w.evaluate(t)
    return w.form.field.is_zero(w.form.eval(pt)), ""


# ---------------------------------------------------------------------------
# ideal and flag pencils


def _pencil_validity(pres, wvecs, wpvecs):
    """A single rank minor certifying full span along the pencil.

    Candidate column subsets come from the rref pivots at t = 1 and t = 0; a
    minor that is nonzero at both endpoints is preferred, otherwise the one
    from t = 1 is used (it cannot vanish identically, and the endpoints are
    verified exactly anyway).
    """
    field = pres.field
    dbasis = pres.d_basis_coords()
    base_rows_t1 = [pres.vec_times_d(v, d) for v in wvecs for d in dbasis]
    base_rows_t0 = [pres.vec_times_d(v, d) for v in wpvecs for d in dbasis]
    _, piv1 = rref(field, base_rows_t1)
    _, piv0 = rref(field, base_rows_t0)
    # polynomial matrix of the moving span rows
    rows = []
    for w, wp in zip(wvecs, wpvecs):
        for dco in dbasis:
            wd = pres.vec_times_d(w, dco)
            wpd = pres.vec_times_d(wp, dco)
            rows.append([Poly(field, [b, field.sub(a, b)])
                         for a, b in zip(wd, wpd)])

    def minor(cols):
        sub = [[row[c] for c in cols] for row in rows]
        return polymat_det(sub)

    v1 = minor(piv1)
    if field.is_zero(v1.eval(field.one)):
        raise ConstructionFailedError("pivot minor vanishes at t=1")  # pragma: no cover
    if not field.is_zero(v1.eval(field.zero)):
        return v1
    if piv0 != piv1:
        v0 = minor(piv0)
        if not field.is_zero(v0.eval(field.one)):
            return v0
    return v1


def connect_ideals(I, Iprime):
    """A degree-1 pencil of right ideals from I (t=1) to I' (t=0).

    Needs a module presentation (split matrix algebra or a matrix-by-
    quaternion tensor preset) and equal reduced dimensions.  The pencil
    interpolates paired bases of the column-space images of the two ideals.
    """
    A = I.algebra
    if Iprime.algebra != A:
        raise InvalidInputError("ideals live in different algebras")
    if I.rdim != Iprime.rdim:
        raise InvalidInputError(f"reduced dimensions differ: {I.rdim} != {Iprime.rdim}")
    pres = module_presentation(A)
    if I == Iprime:
        wb = pres.d_basis_of(pres.image_subspace(I)) if not I.is_zero() else []
        return PencilWitness(IDEAL_PENCIL, I, Iprime, Poly.one(A.field),
                             {"pencil_w": [tuple(v) for v in wb],
                              "pencil_w_prime": [tuple(v) for v in wb]},
                             algebra=A, meta={"rdim": I.rdim})
    W = pres.image_subspace(I)
    Wp = pres.image_subspace(Iprime)
    if pres.ideal_from_subspace(W) != I or pres.ideal_from_subspace(Wp) != Iprime:
        raise StructuralError("ideal is not determined by its column space; "
                              "the module presentation does not match")
    wb = pres.d_basis_of(W)
    wpb = pres.d_basis_of(Wp)
    validity = _pencil_validity(pres, wb, wpb)
    w = PencilWitness(IDEAL_PENCIL, I, Iprime, validity,
                      {"pencil_w": [tuple(v) for v in wb],
                       "pencil_w_prime": [tuple(v) for v in wpb]},
                      algebra=A, meta={"rdim": I.rdim})
    if w.evaluate(A.field.one) != I or w.evaluate(A.field.zero) != Iprime:
        raise ConstructionFailedError("pencil endpoints do not reproduce the ideals")
    return w


def connect_flags(flag, flag_prime):
    """Simultaneous pencils for all levels of two flags of equal signature,
    preserving containment identically in the parameter (nested bases)."""
    A = flag.algebra
    sig = flag.signature
    if flag_prime.signature != sig:
        raise InvalidInputError(
            f"signatures differ: {sig} != {flag_prime.signature}")
    if flag_prime.algebra != A:
        raise InvalidInputError("flags live in different algebras")
    if not flag_check(flag, sig) or not flag_check(flag_prime, sig):
        raise InvalidInputError("input flags fail their own containment checks")
    pres = module_presentation(A)
    for rd in sig:
        if rd % pres.ind:
            raise InvalidInputError(f"rdim {rd} is not a multiple of the index")
    # nested D-bases: extend level by level
    wb, wpb = [], []
    for I, Ip in zip(flag.ideals, flag_prime.ideals):
        wb = pres.d_basis_of(pres.image_subspace(I), extend_from=wb)
        wpb = pres.d_basis_of(pres.image_subspace(Ip), extend_from=wpb)
    levels = [rd // pres.ind for rd in sig]
    if flag == flag_prime:
        validity = Poly.one(A.field)
    else:
        validity = Poly.one(A.field)
        for lvl in levels:
            validity = validity * _pencil_validity(pres, wb[:lvl], wpb[:lvl])
    w = PencilWitness(FLAG_PENCIL, flag, flag_prime, validity,
                      {"pencil_w": [tuple(v) for v in wb],
                       "pencil_w_prime": [tuple(v) for v in wpb],
                       "levels": levels},
                      algebra=A, meta={"signature": list(sig)})
    if w.evaluate(A.field.one) != flag or w.evaluate(A.field.zero) != flag_prime:
        raise ConstructionFailedError("flag pencil endpoints do not match")
    return w


# ---------------------------------------------------------------------------
# etale lines


def _etale_line_witness(A, gen_start, gen_end, degree, meta, open_set=None):
    """An etale_line segment with validity = discriminant of the pencil
    minimal polynomial (a polynomial in t), or None if the line is
    degenerate for this degree."""
    coord_polys = line_coords(A, gen_start.coords, gen_end.coords)
    mp = pencil_min_poly(A, coord_polys, degree)
    if mp is None:
        return None
    validity = xpoly_discriminant(mp)
    if validity.is_zero():
        return None
    start = generate_etale(gen_start)
    end = generate_etale(gen_end)
    return PencilWitness(ETALE_LINE, start, end, validity,
                         {"gen_start": gen_start.coords,
                          "gen_end": gen_end.coords,
                          "pencil_minpoly": [c.to_json() for c in mp]},
                         algebra=A, meta=meta, open_set=open_set)


def _redraw_generator(E, rng):
    """A fresh generator of the same subalgebra: a random combination of the
    basis whose minimal polynomial still has full degree."""
    A = E.algebra
    f = A.field
    for _ in range(64):
        coords = [f.zero] * A.dim
        for b in E.basis:
            c = f.random(rng)
            for i, x in enumerate(b):
                coords[i] = f.add(coords[i], f.mul(c, x))
        cand = AlgebraElement(A, tuple(coords))
        if minimal_polynomial(cand).degree == E.dim:
            try:
                if generate_etale(cand) == E:
                    return cand
            except Exception:
                continue
    raise FieldTooSmallError("could not redraw a primitive generator")


def connect_max_etale(E1, E2, retry_budget=16, rng_seed=0):
    """A line of generators linking two maximal separable subalgebras.

    The pencil minimal polynomial always has full degree here, and its
    discriminant is nonzero at t=1, so the first attempt succeeds whenever
    the generators are honest; redraws are kept as a safety valve.
    """
    A = E1.algebra
    if E2.algebra != A:
        raise InvalidInputError("subalgebras live in different algebras")
    n = A.degree
    if not E1.is_maximal() or not E2.is_maximal():
        raise InvalidInputError("both subalgebras must be maximal (dim = degree)")
    rng = random.Random(rng_seed)
    a1, a2 = E1.generator, E2.generator
    meta = {"etale_dim": n, "maximal": True}
    for _ in range(max(1, retry_budget)):
        w = _etale_line_witness(A, a1, a2, n, meta)
        if w is not None:
            if w.start != E1 or w.end != E2:
                raise ConstructionFailedError("generator line endpoints moved")
            return w
        a1 = _redraw_generator(E1, rng)
        a2 = _redraw_generator(E2, rng)
    raise FieldTooSmallError(
        "no generator line with nonzero discriminant found within budget")


# ---------------------------------------------------------------------------
# involutions: inner twists and symmetry-preserving constructions


def algebra_generators(A):
    """A small unital generating set, preset-aware (falls back to the whole
    basis)."""
    kind = A.preset.get("kind")
    if kind == "matrix":
        n = A.preset["n"]
        idx = []
        for i in range(n - 1):
            idx.append(i * n + (i + 1))
            idx.append((i + 1) * n + i)
        return [A.basis_element(i) for i in idx] or [A.one]
    if kind == "quaternion":
        return [A.basis_element(1), A.basis_element(2)]
    if kind == "tensor":
        left, right = A.preset["left"], A.preset["right"]
        dim_b = right.dim
        gens = []
        for g in algebra_generators(left):
            coords = [A.field.zero] * A.dim
            for i, c in enumerate(g.coords):
                for j, u in enumerate(right.unit):
                    coords[i * dim_b + j] = A.field.mul(c, u)
            gens.append(A.element(coords))
        for g in algebra_generators(right):
            coords = [A.field.zero] * A.dim
            for i, c in enumerate(left.unit):
                for j, u in enumerate(g.coords):
                    coords[i * dim_b + j] = A.field.mul(c, u)
            gens.append(A.element(coords))
        return gens
    return [A.basis_element(i) for i in range(A.dim)]


def _intertwiner_space(A, pairs):
    """Kernel of the conditions L(x) u = u R(x) for the (L(x), R(x)) pairs."""
    f = A.field
    rows = []
    for lx, rx in pairs:
        lm = A.left_mult_matrix(lx)
        rm = A.right_mult_matrix(rx)
        for r in range(A.dim):
            rows.append([f.sub(lm[r][c], rm[r][c]) for c in range(A.dim)])
    return kernel(f, rows)


def _search_invertible(A, space, rng, budget, also_require=None):
    """An invertible element of a subspace: basis vectors first, then seeded
    combinations."""
    f = A.field
    candidates = [tuple(v) for v in space]
    for _ in range(budget):
        for cand in candidates:
            if all(f.is_zero(c) for c in cand):
                continue
            if also_require is not None and not also_require(cand):
                continue
            if A.inverse(cand) is not None:
                return cand
        candidates = []
        for _ in range(8):
            coords = [f.zero] * A.dim
            for v in space:
                c = f.random(rng)
                for i, x in enumerate(v):
                    coords[i] = f.add(coords[i], f.mul(c, x))
            candidates.append(tuple(coords))
    return None


def solve_inner_twist(sigma1, sigma2, rng_seed=0, budget=32):
    """u with sigma2(x) u = u sigma1(x) for all x, invertible, normalized so
    its first nonzero coordinate is 1.  For same-type involutions on a
    central simple algebra the solution space is a line, and u is symmetric
    for sigma1."""
    A = sigma1.algebra
    if sigma2.algebra != A:
        raise InvalidInputError("involutions live on different algebras")
    if sigma1.kind != sigma2.kind:
        raise InvalidInputError("involutions have different types")
    gens = algebra_generators(A)
    pairs = [(sigma2.apply_coords(g.coords), sigma1.apply_coords(g.coords))
             for g in gens]
    space = _intertwiner_space(A, pairs)
    if not space:
        raise StructuralError("no intertwiner exists; the involutions are not "
                              "inner twists of each other")
    # conditions from a generating set suffice, but re-verify on the basis
    def full_check(u):
        for i in range(A.dim):
            x = A.basis_coords(i)
            if A.mul(sigma2.apply_coords(x), u) != A.mul(u, sigma1.apply_coords(x)):
                return False
        return True

    rng = random.Random(rng_seed)
    u = _search_invertible(A, space, rng, budget, also_require=full_check)
    if u is None:
        raise FieldTooSmallError("no invertible intertwiner found within budget")
    f = A.field
    first = next(c for c in u if not f.is_zero(c))
    u = tuple(f.div(c, first) for c in u)
    if sigma1.apply_coords(u) != u:
        raise StructuralError("intertwiner is not symmetric; involution types "
                              "are inconsistent")
    return A.element(u)


def symplectic_fixing_involution(L, tau, rng_seed=0, budget=32):
    """A symplectic involution fixing a separable subalgebra pointwise.

    Solve u l = tau(l) u on the generator, then adjust u by a centralizer
    element q until v = tau(u q) + u q is invertible; conjugating tau by
    v^{-1} fixes the subalgebra and stays symplectic because v is
    tau-symmetric.
    """
    A = tau.algebra
    if tau.kind != SYMPLECTIC:
        raise InvalidInputError("the seed involution must be symplectic")
    if L.algebra != A:
        raise InvalidInputError("subalgebra lives in a different algebra")
    if 2 * L.dim > A.degree:
        # symmetric elements of a symplectic pair satisfy a polynomial of
        # half the degree, so no symplectic involution fixes anything bigger
        raise InvalidInputError(
            f"a subalgebra of dimension {L.dim} cannot be fixed by a "
            f"symplectic involution on a degree-{A.degree} algebra")
    a = L.generator
    f = A.field
    ta = tau.apply_coords(a.coords)
    space = _intertwiner_space(A, [(ta, a.coords)])
    if not space:
        raise StructuralError("no intertwiner with the conjugate embedding")
    rng = random.Random(rng_seed)
    u = _search_invertible(A, space, rng, budget)
    if u is None:
        raise FieldTooSmallError("no invertible intertwiner found within budget")
    # centralizer of L = commutant of the generator
    cent = _intertwiner_space(A, [(a.coords, a.coords)])
    candidates = [A.unit] + [tuple(v) for v in cent]
    v = None
    for attempt in range(budget):
        for q in candidates:
            uq = A.mul(u, q)
            cand = A.add(tau.apply_coords(uq), uq)
            if A.inverse(cand) is not None:
                v = cand
                break
        if v is not None:
            break
        candidates = []
        for _ in range(8):
            coords = [f.zero] * A.dim
            for w in cent:
                c = f.random(rng)
                for i, x in enumerate(w):
                    coords[i] = f.add(coords[i], f.mul(c, x))
            candidates.append(tuple(coords))
    if v is None:
        raise FieldTooSmallError("no invertible symmetrization found within budget")
    v_inv = A.inverse(v)
    sigma = twist_by_inner(tau, A.element(v_inv))
    if sigma.kind != SYMPLECTIC:
        raise StructuralError("twisted involution lost symplecticity")
    if sigma.apply_coords(a.coords) != a.coords:
        raise StructuralError("twisted involution does not fix the subalgebra")
    return sigma


def default_symplectic_involution(A):
    """A canonical symplectic involution for exponent-2 presets."""
    kind = A.preset.get("kind")
    if kind == "matrix":
        n = A.preset["n"]
        if n % 2:
            raise InvalidInputError("odd matrix algebras have no symplectic involution")
        return adjoint_involution(A, standard_alternating_matrix(A.field, n))
    if kind == "quaternion":
        return quaternion_conjugation(A)
    if kind == "tensor":
        left, right = A.preset["left"], A.preset["right"]
        try:
            return tensor_involution(default_symplectic_involution(left),
                                     default_orthogonal_involution(right), A)
        except InvalidInputError:
            return tensor_involution(default_orthogonal_involution(left),
                                     default_symplectic_involution(right), A)
    raise UnsupportedFieldError(f"no canonical symplectic involution for preset {kind!r}")


def default_orthogonal_involution(A):
    kind = A.preset.get("kind")
    if kind == "matrix":
        return transpose_involution(A)
    if kind == "quaternion":
        return quaternion_reversal(A)
    if kind == "tensor":
        left, right = A.preset["left"], A.preset["right"]
        return tensor_involution(default_orthogonal_involution(left),
                                 default_orthogonal_involution(right), A)
    raise UnsupportedFieldError(f"no canonical orthogonal involution for preset {kind!r}")


def _random_symmetric(A, sigma_basis, rng):
    f = A.field
    coords = [f.zero] * A.dim
    for b in sigma_basis:
        c = f.random(rng)
        for i, x in enumerate(b):
            coords[i] = f.add(coords[i], f.mul(c, x))
    return A.element(tuple(coords))


def connect_exp2(L1, L2, open_set=None, rng_seed=0, retry_budget=64):
    """A chain of at most three generator lines between two half-degree
    separable subalgebras of an exponent-2 algebra.

    Build symplectic involutions fixing each subalgebra, twist one into the
    other by a symmetric unit u, pick a symmetric element a1 whose Pfaffian
    polynomial (and that of u a1) is squarefree, and link through the
    subalgebras generated by a1 and u a1.  Every segment's validity is the
    discriminant in t of the degree-m pencil minimal polynomial.
    """
    A = L1.algebra
    if L2.algebra != A:
        raise InvalidInputError("subalgebras live in different algebras")
    if A.field.char == 2:
        raise UnsupportedFieldError("exponent-2 paths need characteristic != 2")
    if not certified_exponent_divides_2(A):
        raise InvalidInputError(
            "exponent-2 certificate missing: build the algebra from matrix, "
            "quaternion, or tensor presets")
    n = A.degree
    if n % 2:
        raise InvalidInputError("the degree must be even")
    m = n // 2
    for L in (L1, L2):
        if L.dim != m or not is_et_m_point(L, m):
            raise InvalidInputError(
                "endpoints must be half-degree subalgebras of balanced type")
    if open_set is not None and (not open_set(L1) or not open_set(L2)):
        raise InvalidInputError("an endpoint violates the open-set predicate")
    meta = {"etale_dim": m, "et_m": m}
    if L1 == L2:
        w = _etale_line_witness(A, L1.generator, L1.generator, m, meta, open_set)
        if w is None:
            raise ConstructionFailedError("constant segment failed")
        return WitnessChain([w])
    rng = random.Random(rng_seed)
    tau = default_symplectic_involution(A)
    sigma1 = symplectic_fixing_involution(L1, tau, rng_seed=rng_seed,
                                          budget=retry_budget)
    sigma2 = symplectic_fixing_involution(L2, tau, rng_seed=rng_seed + 1,
                                          budget=retry_budget)
    u = solve_inner_twist(sigma1, sigma2, rng_seed=rng_seed + 2,
                          budget=retry_budget)
    basis1 = sym_basis(sigma1)
    beta1, beta2 = L1.generator, L2.generator
    for _ in range(retry_budget):
        alpha1 = _random_symmetric(A, basis1, rng)
        alpha2 = u * alpha1
        if sigma2.apply_coords(alpha2.coords) != alpha2.coords:
            raise StructuralError("u alpha1 is not symmetric for sigma2")
        try:
            mp1 = minimal_polynomial(alpha1)
            mp2 = minimal_polynomial(alpha2)
            if mp1.degree != m or mp2.degree != m:
                continue
            if not poly_squarefree(mp1) or not poly_squarefree(mp2):
                continue
            E1 = generate_etale(alpha1)
            E2 = generate_etale(alpha2)
            if not is_et_m_point(E1, m) or not is_et_m_point(E2, m):
                continue
            if open_set is not None and (not open_set(E1) or not open_set(E2)):
                continue
        except Exception:
            continue
        seg1 = _etale_line_witness(A, beta1, alpha1, m, meta, open_set)
        seg2 = _etale_line_witness(A, alpha1, alpha2, m, meta, open_set)
        seg3 = _etale_line_witness(A, alpha2, beta2, m, meta, open_set)
        if seg1 is None or seg2 is None or seg3 is None:
            continue
        chain = WitnessChain([seg1, seg2, seg3])
        if chain.start != L1 or chain.end != L2:
            raise ConstructionFailedError("chain endpoints do not match the inputs")
        return chain
    raise FieldTooSmallError(
        "no symmetric element with squarefree Pfaffian polynomials found "
        "within budget; extend scalars")


# ---------------------------------------------------------------------------
# quadric linkage


def _quadric_segment(form, p1, p2, aux):
    """The conic through p1 and p2 swept by the secant pencil through aux:
    phi(t) = b(w(t), aux) w(t) - q(w(t)) aux with w(t) = t p1 + (1-t) p2."""
    field = form.field
    w_polys = [Poly(field, [b, field.sub(a, b)]) for a, b in zip(p1, p2)]
    lam = Poly(field, [form.bilinear(p2, aux),
                       field.sub(form.bilinear(p1, aux), form.bilinear(p2, aux))])
    qw = form.eval_polys(w_polys)
    coord_polys = [lam * wp - qw.scale(c) for wp, c in zip(w_polys, aux)]
    identity = form.eval_polys(coord_polys)
    if not identity.is_zero():
        raise StructuralError("secant sweep left the quadric")  # pragma: no cover
    w = PencilWitness(QUADRIC_LINE, p1, p2, lam,
                      {"coord_polys": coord_polys, "aux": aux},
                      form=form)
    if w.evaluate(field.one) != p1 or w.evaluate(field.zero) != p2:
        raise ConstructionFailedError("quadric segment endpoints moved")
    return w


def _aux_candidates(form, supplied, search_bound):
    if supplied is not None:
        for p in supplied:
            yield normalize_point(form.field, p)
        return
    field = form.field
    if isinstance(field, Rationals):
        import itertools
        vals = [Fraction(v) for v in range(-search_bound, search_bound + 1)]
        for vec in itertools.product(vals, repeat=form.nvars):
            p = normalize_point(field, vec)
            if p is not None and field.is_zero(form.eval(p)):
                yield p
    else:
        from .quadrics import points_on_quadric
        for p in points_on_quadric(form):
            yield p


def connect_quadric_points(form, p1, p2, points=None, search_bound=3):
    """A chain of at most two conic segments on the quadric linking two
    rational points, through auxiliary points off both tangent hyperplanes."""
    field = form.field
    p1 = normalize_point(field, p1)
    p2 = normalize_point(field, p2)
    for p in (p1, p2):
        if p is None or not field.is_zero(form.eval(p)):
            raise InvalidInputError("endpoints must be points of the quadric")
    if p1 == p2:
        return WitnessChain([], start=p1, end=p2)

    def good_aux(p, a, b):
        if p is None or p == a or p == b:
            return False
        if not field.is_zero(form.eval(p)):
            return False
        if field.is_zero(form.bilinear(p, a)) or field.is_zero(form.bilinear(p, b)):
            return False
        return rank(field, [list(a), list(b), list(p)]) == 3

    candidates = [p for p in _aux_candidates(form, points, search_bound)
                  if p is not None and field.is_zero(form.eval(p))]
    for p in candidates:
        if good_aux(p, p1, p2):
            return WitnessChain([_quadric_segment(form, p1, p2, p)])
    # two segments through an intermediate point
    for r in candidates:
        if r in (p1, p2):
            continue
        aux1 = next((p for p in candidates if good_aux(p, p1, r)), None)
        if aux1 is None:
            continue
        aux2 = next((p for p in candidates if good_aux(p, r, p2)), None)
        if aux2 is None:
            continue
        return WitnessChain([_quadric_segment(form, p1, r, aux1),
                             _quadric_segment(form, r, p2, aux2)])
    raise FieldTooSmallError(
        "no auxiliary point off both tangent hyperplanes; too few points")
