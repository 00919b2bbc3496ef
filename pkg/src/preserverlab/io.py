"""JSON formats shared by the command line and the report writers.

Field values always travel as strings (or small structures of
strings) so nothing is ever coerced through a float; dumps sort keys
and use a fixed layout so equal data serializes to identical bytes.
Every reader accepts exactly what the matching writer emits.
"""

import json
import re

from .classify import Classification
from .fields import QI, QQ, field_make, field_of_order, hom_make
from .multipoly import MultilinearPoly, standard_polynomial

VERSION = 1


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------- fields

def field_to_json(field):
    return field.descriptor()


_GF_SHORTHAND = re.compile(r"^gf(\d+)$")


def field_from_json(desc):
    """Descriptor dict, or the shorthand strings q / qi / gf<order>."""
    if isinstance(desc, str):
        text = desc.strip().lower()
        if text == "q":
            return QQ()
        if text == "qi":
            return QI()
        m = _GF_SHORTHAND.match(text)
        if m:
            return field_of_order(int(m.group(1)))
        raise ValueError("unknown field shorthand %r" % desc)
    return field_make(desc)


# -------------------------------------------------------------- elements

def elem_to_json(field, a):
    return field.to_str(a)


def elem_from_json(field, obj):
    return field.parse(obj)


def matrix_to_json(field, A):
    return [[field.to_str(a) for a in row] for row in A]


def matrix_from_json(field, rows):
    if not isinstance(rows, (list, tuple)) or not rows:
        raise ValueError("matrix must be a non-empty list of rows")
    width = None
    out = []
    for row in rows:
        if not isinstance(row, (list, tuple)) or not row:
            raise ValueError("matrix rows must be non-empty lists")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError("matrix rows have unequal lengths")
        out.append(tuple(field.parse(a) for a in row))
    return tuple(out)


def tuple_to_json(field, mats):
    return [matrix_to_json(field, A) for A in mats]


def tuple_from_json(field, arr):
    if not isinstance(arr, (list, tuple)) or not arr:
        raise ValueError("tuple must be a non-empty list of matrices")
    return tuple(matrix_from_json(field, A) for A in arr)


# ----------------------------------------------------------- polynomials

def poly_to_json(p):
    return {
        "v": VERSION,
        "type": "polynomial",
        "field": p.field.descriptor(),
        "k": p.k,
        "terms": [{"word": list(word), "coeff": p.field.to_str(c)}
                  for word, c in sorted(p.terms.items())],
    }


def poly_from_json(obj, field=None):
    """Read a polynomial; `field` overrides only when the document
    names none."""
    if not isinstance(obj, dict):
        raise ValueError("polynomial must be a JSON object")
    if "field" in obj:
        field = field_from_json(obj["field"])
    if field is None:
        raise ValueError("polynomial document names no field and "
                         "none was supplied")
    k = int(obj["k"])
    terms = {}
    for item in obj.get("terms", ()):
        word = tuple(int(v) for v in item["word"])
        coeff = field.parse(item["coeff"])
        if word in terms:
            raise ValueError("duplicate word %r" % (word,))
        terms[word] = coeff
    return MultilinearPoly(field, k, terms)


_NAMED_WORDS = {
    "xy": ((1, 2), 1),
    "yx": ((2, 1), 1),
    "xy+yx": ((1, 2), 1, (2, 1), 1),
    "xy-yx": ((1, 2), 1, (2, 1), -1),
    "xyz-yxz": ((1, 2, 3), 1, (2, 1, 3), -1),
}


def named_poly(field, name):
    """The handful of short polynomials usable by name: xy, yx,
    xy+yx, xy-yx, xyz-yxz, and s2..s4 (standard polynomials)."""
    key = name.replace(" ", "")
    if key.startswith("s") and key[1:].isdigit():
        return standard_polynomial(field, int(key[1:]))
    if key in _NAMED_WORDS:
        flat = _NAMED_WORDS[key]
        terms = {}
        for i in range(0, len(flat), 2):
            terms[flat[i]] = field.from_int(flat[i + 1])
        return MultilinearPoly(field, len(flat[0]), terms)
    raise ValueError("unknown polynomial name %r" % name)


# ---------------------------------------------------------------- homs

def hom_to_json(hom):
    out = {"kind": hom.kind}
    if hom.kind == "frobenius":
        out["power"] = hom.power
    return out


def hom_from_json(obj):
    """Dict, or the shorthand identity / conjugation / frobenius:e."""
    if isinstance(obj, str):
        text = obj.strip().lower()
        if ":" in text:
            kind, _, power = text.partition(":")
            return hom_make(kind, int(power))
        return hom_make(text)
    return hom_make(obj["kind"], int(obj.get("power", 0)))


# ------------------------------------------------------ preserver specs

def _scalar_slot_to_json(field, slot):
    if slot is None:
        return None
    if isinstance(slot, dict):
        items = [[matrix_to_json(field, M), field.to_str(c)]
                 for M, c in slot.items()]
        items.sort(key=lambda kv: json.dumps(kv[0]))
        return {"table": items}
    return {"const": field.to_str(slot)}


def _scalar_slot_from_json(field, obj):
    if obj is None:
        return None
    if "const" in obj:
        return field.parse(obj["const"])
    table = {}
    for rows, val in obj["table"]:
        table[matrix_from_json(field, rows)] = field.parse(val)
    return table


def spec_to_json(spec):
    field = spec.field
    out = {
        "v": VERSION,
        "type": "preserver_spec",
        "kind": spec.kind,
        "field": field.descriptor(),
        "n": spec.n,
    }
    if spec.kind == "table":
        entries = [[matrix_to_json(field, A), matrix_to_json(field, B)]
                   for A, B in spec.table.items()]
        entries.sort(key=lambda kv: json.dumps(kv[0]))
        out["entries"] = entries
        return out
    out["similarity"] = (matrix_to_json(field, spec.similarity)
                         if spec.similarity is not None else None)
    out["hom"] = hom_to_json(spec.hom) if spec.hom is not None else None
    out["transpose"] = spec.transpose
    out["gamma"] = _scalar_slot_to_json(field, spec.gamma)
    out["shift"] = _scalar_slot_to_json(field, spec.shift)
    out["entry_tweak"] = spec.entry_tweak
    return out


def spec_from_json(obj):
    from .preservers import PreserverSpec
    field = field_from_json(obj["field"])
    n = int(obj["n"])
    kind = obj.get("kind", "parametric")
    if kind == "table":
        table = {}
        for rows_in, rows_out in obj["entries"]:
            table[matrix_from_json(field, rows_in)] = \
                matrix_from_json(field, rows_out)
        return PreserverSpec(field=field, n=n, kind="table", table=table)
    sim = obj.get("similarity")
    hom = obj.get("hom")
    return PreserverSpec(
        field=field, n=n,
        similarity=matrix_from_json(field, sim) if sim else None,
        hom=hom_from_json(hom) if hom else None,
        transpose=bool(obj.get("transpose", False)),
        gamma=_scalar_slot_from_json(field, obj.get("gamma")),
        shift=_scalar_slot_from_json(field, obj.get("shift")),
        entry_tweak=obj.get("entry_tweak", "none"))


# -------------------------------------------------------------- verdicts

def verdict_to_json(field, v):
    return {
        "v": VERSION,
        "type": "verdict",
        "outcome": v.outcome,
        "witness": (tuple_to_json(field, v.witness)
                    if v.witness is not None else None),
        "images": (tuple_to_json(field, v.images)
                   if v.images is not None else None),
        "direction": v.direction,
        "family": v.family,
        "checked": v.checked,
        "strategy": v.strategy,
    }


def idempotent_report_to_json(field, rep):
    return {
        "v": VERSION,
        "type": "idempotent_report",
        "outcome": rep.outcome,
        "precondition": verdict_to_json(field, rep.precondition),
        "witness": (matrix_to_json(field, rep.witness)
                    if rep.witness is not None else None),
        "images": (tuple_to_json(field, rep.images)
                   if rep.images is not None else None),
        "checked": rep.checked,
    }


def classification_to_json(st):
    field = st.extension if st.extension is not None else st.field
    return {
        "v": VERSION,
        "type": "classification",
        "case": st.case,
        "dimension": st.dim,
        "basis": [matrix_to_json(st.field, B) for B in st.basis],
        "witness": (matrix_to_json(field, st.witness)
                    if st.witness is not None else None),
        "line": (matrix_to_json(field, st.line)
                 if st.line is not None else None),
        "field": st.field.descriptor(),
        "extension": (st.extension.descriptor()
                      if st.extension is not None else None),
        "path": st.path,
        "detail": list(st.detail),
    }


def cross_check_to_json(cc):
    return {
        "v": VERSION,
        "type": "cross_check",
        "agree": cc.agree,
        "structural": classification_to_json(cc.structural),
        "direct": classification_to_json(cc.direct),
    }


def example_report_to_json(rep):
    from .preservers import Verdict
    data = {}
    field = None
    if isinstance(rep.data, dict) and "field" in rep.data:
        field = field_make(rep.data["field"])
    for key, val in (rep.data or {}).items():
        if isinstance(val, Verdict):
            data[key] = verdict_to_json(field, val)
        elif isinstance(val, Classification):
            data[key] = classification_to_json(val)
        else:
            data[key] = val
    return {
        "v": VERSION,
        "type": "example_report",
        "example": rep.example,
        "description": rep.description,
        "expected": rep.expected,
        "computed": rep.computed,
        "match": rep.match,
        "data": data,
    }


# ---------------------------------------------------------- lemma reports

def _lemma_failure_to_json(field, lemma, payload):
    mat = lambda M: matrix_to_json(field, M)
    el = lambda c: field.to_str(c)
    if lemma == "orthogonality":
        P, X, mu, nu, mup, nup = payload
        return {"P": mat(P), "X": mat(X), "mu": el(mu), "nu": el(nu),
                "mu2": el(mup), "nu2": el(nup)}
    if lemma == "zero_detection":
        A, hit = payload
        return {"A": mat(A), "witness": mat(hit) if hit is not None
                else None}
    if lemma == "nilpotent_proportionality":
        N1, N2 = payload
        return {"N1": mat(N1), "N2": mat(N2)}
    if lemma == "affine_span":
        out = {"A": mat(payload[0]), "B": mat(payload[1])}
        if len(payload) == 4:
            out["P"], out["N"] = mat(payload[2]), mat(payload[3])
        return out
    if lemma == "spectrum_formula":
        m, n, lam, mu, coeffs = payload
        return {"m": m, "n": n, "lam": el(lam), "mu": el(mu),
                "coeffs": [el(c) for c in coeffs]}
    raise ValueError("unknown lemma %r" % lemma)


def lemma_report_to_json(field, rep):
    return {
        "v": VERSION,
        "type": "lemma_report",
        "lemma": rep.lemma,
        "instances": rep.instances,
        "passed": rep.passed,
        "failures": [_lemma_failure_to_json(field, rep.lemma, f)
                     for f in rep.failures],
        "converse_failures": [
            _lemma_failure_to_json(field, rep.lemma, f)
            for f in rep.converse_failures],
        "notes": rep.notes,
    }


# -------------------------------------------------------- canonical forms

def rational_form_to_json(field, rf):
    return {
        "v": VERSION,
        "type": "rational_form",
        "form": matrix_to_json(field, rf.form),
        "transform": matrix_to_json(field, rf.transform),
        "blocks": [{"factor": [field.to_str(c) for c in f],
                    "exponent": e} for f, e in rf.blocks],
    }


def jordan_to_json(jd):
    big = jd.field
    return {
        "v": VERSION,
        "type": "jordan_form",
        "field": big.descriptor(),
        "eigenvalues": [big.to_str(v) for v in jd.eigenvalues],
        "multiplicities": list(jd.multiplicities),
        "cell_sizes": [list(cells) for cells in jd.cell_sizes],
        "form": matrix_to_json(big, jd.form),
        "transform": matrix_to_json(big, jd.transform),
    }
