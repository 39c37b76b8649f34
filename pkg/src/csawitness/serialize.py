"""Canonical JSON serialization for every domain object.

All files are UTF-8 JSON text; writing is canonical (sorted keys, compact
separators, trailing newline) so identical inputs produce byte-identical
files.  Parsing reconstructs objects through their verifying constructors,
so a loaded ideal re-checks closure, a loaded involution re-checks its
axioms, and so on.
"""

import json
import os

from .algebra import Algebra, make_matrix_algebra, make_quaternion, tensor_product
from .errors import InvalidInputError
from .etale import EtaleSubalgebra, generate_etale
from .fields import field_from_spec
from .ideals import Flag, RightIdeal
from .involutions import Involution, involution_from_matrix
from .poly import Poly
from .quadrics import QuadraticForm
from .witness import (
    ETALE_LINE, FLAG_PENCIL, IDEAL_PENCIL, PARAM_CONVENTION, QUADRIC_LINE,
    PencilWitness, WitnessChain,
)


def dump_canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def save_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_canonical(obj))


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# scalars and vectors


def _vec_to_json(field, vec):
    return [field.to_json(c) for c in vec]


def _vec_from_json(field, data):
    return tuple(field.parse(c) for c in data)


# ---------------------------------------------------------------------------
# algebras


def algebra_to_json(A):
    kind = A.preset.get("kind", "explicit")
    out = {"field": A.field.spec(), "degree": A.degree, "preset": kind}
    if kind == "matrix":
        out["params"] = {"n": A.preset["n"]}
    elif kind == "quaternion":
        out["params"] = {"a": A.field.to_json(A.preset["a"]),
                         "b": A.field.to_json(A.preset["b"])}
    elif kind == "tensor":
        out["params"] = {"left": algebra_to_json(A.preset["left"]),
                         "right": algebra_to_json(A.preset["right"])}
    else:
        out["preset"] = "explicit"
        out["structure_constants"] = [
            [[[k, A.field.to_json(c)] for k, c in entry] for entry in row]
            for row in A.table]
        out["unit"] = _vec_to_json(A.field, A.unit)
    return out


def algebra_from_json(data):
    field = field_from_spec(data["field"])
    preset = data.get("preset", "explicit")
    if preset == "matrix":
        return make_matrix_algebra(field, int(data["params"]["n"]))
    if preset == "quaternion":
        return make_quaternion(field, field.parse(data["params"]["a"]),
                               field.parse(data["params"]["b"]))
    if preset == "tensor":
        return tensor_product(algebra_from_json(data["params"]["left"]),
                              algebra_from_json(data["params"]["right"]))
    if preset == "explicit":
        table = [[tuple((int(k), field.parse(c)) for k, c in entry)
                  for entry in row]
                 for row in data["structure_constants"]]
        unit = _vec_from_json(field, data["unit"]) if "unit" in data else None
        return Algebra(field, table, int(data["degree"]), unit=unit)
    raise InvalidInputError(f"unknown algebra preset {preset!r}")


def _resolve_algebra(data, algebra=None, base_dir="."):
    """Inline algebra dict, or {"file": path} reference, or a caller-supplied
    object."""
    if algebra is not None:
        return algebra
    if isinstance(data, dict) and "file" in data:
        return algebra_from_json(load_json(os.path.join(base_dir, data["file"])))
    return algebra_from_json(data)


# ---------------------------------------------------------------------------
# ideals, flags, subalgebras, involutions, forms


def ideal_to_json(I, inline_algebra=True):
    out = {"basis": [_vec_to_json(I.algebra.field, b) for b in I.basis]}
    if inline_algebra:
        out["algebra"] = algebra_to_json(I.algebra)
    return out


def ideal_from_json(data, algebra=None, base_dir="."):
    A = _resolve_algebra(data.get("algebra"), algebra, base_dir)
    rows = [_vec_from_json(A.field, b) for b in data["basis"]]
    return RightIdeal(A, rows)


def flag_to_json(flag, inline_algebra=True):
    out = {"ideals": [ideal_to_json(i, inline_algebra=False) for i in flag.ideals],
           "signature": list(flag.signature)}
    if inline_algebra:
        out["algebra"] = algebra_to_json(flag.algebra)
    return out


def flag_from_json(data, algebra=None, base_dir="."):
    A = _resolve_algebra(data.get("algebra"), algebra, base_dir)
    ideals = [ideal_from_json(d, algebra=A) for d in data["ideals"]]
    flag = Flag(ideals)
    if flag.signature != tuple(data.get("signature", flag.signature)):
        raise InvalidInputError("stored signature does not match the ideals")
    return flag


def etale_to_json(E, inline_algebra=True):
    f = E.algebra.field
    out = {"generator": _vec_to_json(f, E.generator.coords)}
    if E.supplied_factors is not None:
        out["minpoly_factors"] = [g.to_json() for g in E.supplied_factors]
    if inline_algebra:
        out["algebra"] = algebra_to_json(E.algebra)
    return out


def etale_from_json(data, algebra=None, base_dir="."):
    A = _resolve_algebra(data.get("algebra"), algebra, base_dir)
    gen = A.element(_vec_from_json(A.field, data["generator"]))
    factors = None
    if "minpoly_factors" in data:
        factors = [Poly.from_json(A.field, g) for g in data["minpoly_factors"]]
    return generate_etale(gen, minpoly_factors=factors)


def involution_to_json(sigma, inline_algebra=True):
    f = sigma.algebra.field
    out = {"matrix": [_vec_to_json(f, row) for row in sigma.mat],
           "type": sigma.kind}
    if inline_algebra:
        out["algebra"] = algebra_to_json(sigma.algebra)
    return out


def involution_from_json(data, algebra=None, base_dir="."):
    A = _resolve_algebra(data.get("algebra"), algebra, base_dir)
    mat = [_vec_from_json(A.field, row) for row in data["matrix"]]
    return involution_from_matrix(A, mat, expected_kind=data.get("type"))


def form_to_json(form):
    out = form.to_json()
    out["field"] = form.field.spec()
    return out


def form_from_json(data):
    field = field_from_spec(data["field"])
    return QuadraticForm.from_json(field, data)


# ---------------------------------------------------------------------------
# witnesses


def _endpoint_to_json(kind, obj, field):
    if kind == IDEAL_PENCIL:
        return ideal_to_json(obj, inline_algebra=False)
    if kind == FLAG_PENCIL:
        return flag_to_json(obj, inline_algebra=False)
    if kind == ETALE_LINE:
        return etale_to_json(obj, inline_algebra=False)
    return _vec_to_json(field, obj)  # projective point


def _endpoint_from_json(kind, data, algebra, field):
    if kind == IDEAL_PENCIL:
        return ideal_from_json(data, algebra=algebra)
    if kind == FLAG_PENCIL:
        return flag_from_json(data, algebra=algebra)
    if kind == ETALE_LINE:
        return etale_from_json(data, algebra=algebra)
    return _vec_from_json(field, data)


def _segment_to_json(w):
    f = w.field
    seg = {"kind": w.kind,
           "start": _endpoint_to_json(w.kind, w.start, f),
           "end": _endpoint_to_json(w.kind, w.end, f),
           "validity": w.validity.to_json(),
           "meta": {k: v for k, v in w.meta.items()}}
    if w.kind in (IDEAL_PENCIL, FLAG_PENCIL):
        seg["pencil_w"] = [_vec_to_json(f, v) for v in w.data["pencil_w"]]
        seg["pencil_w_prime"] = [_vec_to_json(f, v)
                                 for v in w.data["pencil_w_prime"]]
        if w.kind == FLAG_PENCIL:
            seg["levels"] = list(w.data["levels"])
    elif w.kind == ETALE_LINE:
        seg["gen_start"] = _vec_to_json(f, w.data["gen_start"])
        seg["gen_end"] = _vec_to_json(f, w.data["gen_end"])
    elif w.kind == QUADRIC_LINE:
        seg["coord_polys"] = [p.to_json() for p in w.data["coord_polys"]]
        seg["aux"] = _vec_to_json(f, w.data["aux"])
    return seg


def _segment_from_json(seg, algebra, form):
    kind = seg["kind"]
    field = algebra.field if algebra is not None else form.field
    start = _endpoint_from_json(kind, seg["start"], algebra, field)
    end = _endpoint_from_json(kind, seg["end"], algebra, field)
    validity = Poly.from_json(field, seg["validity"])
    meta = seg.get("meta", {})
    if kind in (IDEAL_PENCIL, FLAG_PENCIL):
        data = {"pencil_w": [_vec_from_json(field, v) for v in seg["pencil_w"]],
                "pencil_w_prime": [_vec_from_json(field, v)
                                   for v in seg["pencil_w_prime"]]}
        if kind == FLAG_PENCIL:
            data["levels"] = [int(x) for x in seg["levels"]]
    elif kind == ETALE_LINE:
        data = {"gen_start": _vec_from_json(field, seg["gen_start"]),
                "gen_end": _vec_from_json(field, seg["gen_end"])}
    elif kind == QUADRIC_LINE:
        data = {"coord_polys": [Poly.from_json(field, p)
                                for p in seg["coord_polys"]],
                "aux": _vec_from_json(field, seg["aux"])}
    else:
        raise InvalidInputError(f"unknown segment kind {kind!r}")
    return PencilWitness(kind, start, end, validity, data,
                         algebra=algebra, form=form, meta=meta)


def witness_to_json(w, form=None):
    segments = w.segments if isinstance(w, WitnessChain) else (w,)
    if not segments:
        # a trivial chain: identical endpoints, no segments; keep the context
        if form is None:
            raise InvalidInputError("an empty chain needs an explicit form context")
        return {"kind": "empty", "param_convention": PARAM_CONVENTION,
                "segments": [], "form": form_to_json(form),
                "start": _vec_to_json(form.field, w.start),
                "end": _vec_to_json(form.field, w.end)}
    first = segments[0]
    out = {"kind": first.kind,
           "param_convention": PARAM_CONVENTION,
           "segments": [_segment_to_json(s) for s in segments]}
    if first.algebra is not None:
        out["algebra"] = algebra_to_json(first.algebra)
    if first.form is not None:
        out["form"] = form_to_json(first.form)
    return out


def witness_from_json(data):
    if data.get("param_convention") != PARAM_CONVENTION:
        raise InvalidInputError(
            f"unsupported parameter convention {data.get('param_convention')!r}")
    algebra = algebra_from_json(data["algebra"]) if "algebra" in data else None
    form = form_from_json(data["form"]) if "form" in data else None
    if data.get("kind") == "empty":
        start = _vec_from_json(form.field, data["start"])
        end = _vec_from_json(form.field, data["end"])
        return WitnessChain([], start=start, end=end)
    segments = [_segment_from_json(s, algebra, form) for s in data["segments"]]
    if len(segments) == 1:
        return segments[0]
    return WitnessChain(segments)
