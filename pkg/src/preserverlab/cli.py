"""Command line front end.

One subcommand per operation family, JSON in and JSON out.  Inputs
are file paths, inline JSON, or - for stdin; everything printed on
stdout parses back through the readers in io.  Exit codes: 0 for
success or a verified property, 2 for invalid input, 3 for a
violated property (the witness is part of the report), 4 for an
exceeded enumeration budget.  The PRESERVERLAB_BUDGET environment
variable overrides every enumeration cap.
"""

import argparse
import json
import os
import sys

from . import io as pio
from .canonical import (companion, jordan_over_splitting_field,
                        primary_rational_form)
from .classify import classify_direct, classify_structural, cross_validate
from .fields import enumerate_homs
from .matrices import (enumerate_matrices, enumerate_rank_one_idempotents,
                       enumerate_rank_one_nilpotents, is_zero_matrix)
from .multipoly import evaluate, normalize
from .operators import (ElementaryOperator, anticommutant, joint_kernel,
                        pivot_kernel, slot1_kernel,
                        spectrum_single_eigenvalue)
from .oracles import (MATRIX_CAP, TUPLE_CAP, check_spectrum_formula,
                      enumerate_zero_set, local_linear_dependence,
                      verify_affine_span, verify_nilpotent_proportionality,
                      verify_orthogonality, verify_zero_detection)
from .preservers import (EXAMPLE_IDS, FULL_SPACE_CAP, PAIR_SCAN_CAP,
                         SAMPLE_DEFAULT, check_commutativity_preservation,
                         check_maps_zeros, check_rank_one_idempotent_structure,
                         check_zero_kernel, reproduce_example,
                         rescale_to_idempotent_preserving)
from .unipoly import BudgetError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VIOLATED = 3
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    """Argument errors leave as structured JSON with exit code 2."""

    def error(self, message):
        sys.stderr.write(pio.canonical_dumps(
            {"v": pio.VERSION, "error": {"message": message,
                                         "code": EXIT_INVALID}}))
        raise SystemExit(EXIT_INVALID)


def _budget(default):
    env = os.environ.get("PRESERVERLAB_BUDGET")
    return int(env) if env else default


def _read_json(text):
    if text == "-":
        return json.load(sys.stdin)
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    with open(text) as fh:
        return json.load(fh)


def _poly_and_field(args, attr="poly"):
    """Resolve the polynomial and its field from --poly and --field.
    Named polynomials need --field; documents carry their own."""
    text = getattr(args, attr.replace("-", "_"))
    if text is None:
        raise ValueError("missing --%s" % attr)
    flag_field = pio.field_from_json(args.field) if getattr(
        args, "field", None) else None
    stripped = text.strip()
    looks_json = stripped.startswith("{") or text == "-" \
        or os.path.exists(text)
    if not looks_json:
        if flag_field is None:
            raise ValueError("polynomial given by name needs --field")
        return pio.named_poly(flag_field, text), flag_field
    p = pio.poly_from_json(_read_json(text), field=flag_field)
    if flag_field is not None and p.field is not flag_field:
        raise ValueError("--field conflicts with the polynomial's field")
    return p, p.field


def _field_arg(args):
    if not getattr(args, "field", None):
        raise ValueError("missing --field")
    return pio.field_from_json(args.field)


def _matrix_arg(field, text):
    if text is None:
        raise ValueError("missing a matrix argument")
    return pio.matrix_from_json(field, _read_json(text))


def _square(A, what="matrix"):
    if any(len(row) != len(A) for row in A):
        raise ValueError("%s must be square" % what)
    return A


def _emit(payload):
    payload.setdefault("v", pio.VERSION)
    sys.stdout.write(pio.canonical_dumps(payload))


def _emit_error(message, code):
    sys.stderr.write(pio.canonical_dumps(
        {"v": pio.VERSION, "error": {"message": str(message),
                                     "code": code}}))
    return code


# ------------------------------------------------------------ subcommands

def cmd_eval(args):
    p, field = _poly_and_field(args)
    mats = pio.tuple_from_json(field, _read_json(args.tuple))
    if len(mats) != p.k:
        raise ValueError("expected %d matrices, got %d"
                         % (p.k, len(mats)))
    value = evaluate(p, mats)
    _emit({"command": "eval",
           "value": pio.matrix_to_json(field, value),
           "is_zero": is_zero_matrix(field, value)})
    return EXIT_OK


def cmd_zeros(args):
    p, field = _poly_and_field(args)
    mats = pio.tuple_from_json(field, _read_json(args.tuple))
    if len(mats) != p.k:
        raise ValueError("expected %d matrices, got %d"
                         % (p.k, len(mats)))
    value = evaluate(p, mats)
    _emit({"command": "zeros",
           "member": is_zero_matrix(field, value),
           "value": pio.matrix_to_json(field, value)})
    return EXIT_OK


def cmd_omega(args):
    p, field = _poly_and_field(args)
    A = _square(_matrix_arg(field, args.matrix))
    np_ = normalize(p)
    slot = slot1_kernel(A, np_)
    piv = pivot_kernel(A, np_)
    joint = joint_kernel(A, np_)
    def pack(basis):
        return {"dimension": len(basis),
                "basis": [pio.matrix_to_json(field, B) for B in basis]}
    _emit({"command": "omega",
           "pivot_variable": np_.pivot_var,
           "slot_one": pack(slot),
           "pivot": pack(piv),
           "intersection": pack(joint)})
    return EXIT_OK


def cmd_classify(args):
    p, field = _poly_and_field(args)
    A = _square(_matrix_arg(field, args.matrix))
    np_ = normalize(p)
    if args.path == "structural":
        st = classify_structural(field, A, np_, lift=args.lift,
                                 seed=args.seed)
        _emit({"command": "classify",
               **pio.classification_to_json(st)})
    elif args.path == "direct":
        st = classify_direct(field, A, np_, lift=args.lift,
                             seed=args.seed)
        _emit({"command": "classify",
               **pio.classification_to_json(st)})
    else:
        cc = cross_validate(field, A, np_, lift=args.lift,
                            seed=args.seed)
        _emit({"command": "classify", **pio.cross_check_to_json(cc)})
        if not cc.agree:
            return EXIT_VIOLATED
    return EXIT_OK


def cmd_spectrum(args):
    field = _field_arg(args)
    L = _square(_matrix_arg(field, args.left), "left matrix")
    R = _square(_matrix_arg(field, args.right), "right matrix")
    coeffs = _read_json(args.coeffs)
    if not isinstance(coeffs, list) or not coeffs:
        raise ValueError("--coeffs must be a non-empty JSON list")
    cs = tuple(field.parse(c) for c in coeffs)
    op = ElementaryOperator(field=field, left=L, right=R, coeffs=cs)
    value = spectrum_single_eigenvalue(op, seed=args.seed)
    if value is None:
        raise ValueError("the operator spectrum is not a singleton "
                         "over this field")
    _emit({"command": "spectrum",
           "eigenvalue": field.to_str(value),
           "dimension": len(L) * len(R)})
    return EXIT_OK


def cmd_companion(args):
    field = _field_arg(args)
    coeffs = _read_json(args.coeffs)
    if not isinstance(coeffs, list) or len(coeffs) < 2:
        raise ValueError("--coeffs must list a monic polynomial of "
                         "degree at least 1, low terms first")
    f = tuple(field.parse(c) for c in coeffs)
    C = companion(field, f)
    _emit({"command": "companion",
           "matrix": pio.matrix_to_json(field, C)})
    return EXIT_OK


def cmd_rcf(args):
    field = _field_arg(args)
    A = _square(_matrix_arg(field, args.matrix))
    rf = primary_rational_form(field, A, seed=args.seed)
    _emit({"command": "rcf", **pio.rational_form_to_json(field, rf)})
    return EXIT_OK


def cmd_jordan(args):
    field = _field_arg(args)
    A = _square(_matrix_arg(field, args.matrix))
    jd = jordan_over_splitting_field(field, A, seed=args.seed)
    _emit({"command": "jordan", "base_field": field.descriptor(),
           **pio.jordan_to_json(jd)})
    return EXIT_OK


def cmd_anticommutant(args):
    field = _field_arg(args)
    A = _square(_matrix_arg(field, args.matrix))
    basis = anticommutant(field, A)
    _emit({"command": "anticommutant",
           "dimension": len(basis),
           "basis": [pio.matrix_to_json(field, B) for B in basis]})
    return EXIT_OK


def cmd_verify_preserver(args):
    spec = pio.spec_from_json(_read_json(args.spec))
    field = spec.field
    extras = ()
    if args.extras:
        extras = tuple(pio.tuple_from_json(field, t)
                       for t in _read_json(args.extras))
    if args.check == "commutativity":
        verdict = check_commutativity_preservation(
            spec, strong=args.strong, strategy=args.strategy,
            seed=args.seed, jobs=args.jobs,
            cap=_budget(PAIR_SCAN_CAP))
        _emit({"command": "verify-preserver", "check": args.check,
               **pio.verdict_to_json(field, verdict)})
        return {"holds": EXIT_OK, "violated": EXIT_VIOLATED,
                "budget": EXIT_BUDGET}[verdict.outcome]
    if args.check == "zero-kernel":
        p = _poly_and_field(args)[0] if args.poly else None
        # the single-matrix scan has no witness families
        strategy = "exhaustive" if args.strategy == "witnesses" \
            else args.strategy
        verdict = check_zero_kernel(spec, p, strategy=strategy,
                                    sample_size=args.samples,
                                    seed=args.seed,
                                    cap=_budget(FULL_SPACE_CAP))
        _emit({"command": "verify-preserver", "check": args.check,
               **pio.verdict_to_json(field, verdict)})
        return {"holds": EXIT_OK, "violated": EXIT_VIOLATED,
                "budget": EXIT_BUDGET}[verdict.outcome]
    p, pfield = _poly_and_field(args)
    if pfield is not field:
        raise ValueError("polynomial and spec live over different fields")
    if args.check == "idempotent-structure":
        rep = check_rank_one_idempotent_structure(
            spec, p, jobs=args.jobs, cap=_budget(PAIR_SCAN_CAP))
        _emit({"command": "verify-preserver", "check": args.check,
               **pio.idempotent_report_to_json(field, rep)})
        if rep.outcome == "precondition_failed":
            return EXIT_INVALID
        return EXIT_OK if rep.outcome == "holds" else EXIT_VIOLATED
    if args.check == "rescale":
        fixed = rescale_to_idempotent_preserving(
            spec, p, jobs=args.jobs, cap=_budget(FULL_SPACE_CAP))
        _emit({"command": "verify-preserver", "check": args.check,
               "spec": pio.spec_to_json(fixed)})
        return EXIT_OK
    p2 = p
    if args.poly2:
        p2 = _poly_and_field(args, "poly2")[0]
        if p2.field is not field:
            raise ValueError("second polynomial lives over a "
                             "different field")
    verdict = check_maps_zeros(p, p2, spec, strong=args.strong,
                               strategy=args.strategy, extras=extras,
                               sample_size=args.samples, seed=args.seed,
                               jobs=args.jobs,
                               cap=_budget(PAIR_SCAN_CAP))
    _emit({"command": "verify-preserver", "check": "zeros",
           **pio.verdict_to_json(field, verdict)})
    return {"holds": EXIT_OK, "violated": EXIT_VIOLATED,
            "budget": EXIT_BUDGET}[verdict.outcome]


def cmd_examples(args):
    ids = EXAMPLE_IDS if args.id is None else (args.id,)
    reports = [reproduce_example(i, seed=args.seed, jobs=args.jobs)
               for i in ids]
    encoded = [pio.example_report_to_json(r) for r in reports]
    if args.id is None:
        _emit({"command": "examples", "reports": encoded})
    else:
        _emit({"command": "examples", **encoded[0]})
    return EXIT_OK if all(r.match for r in reports) else EXIT_VIOLATED


def cmd_oracle(args):
    lemma = args.lemma
    if lemma == "local_dependence":
        field = _field_arg(args)
        doc = _read_json(args.input)
        Rs = [_square(pio.matrix_from_json(field, doc[key]))
              for key in ("R1", "R2", "R3")]
        out = local_linear_dependence(field, *Rs)
        payload = {"command": "oracle", "lemma": lemma,
                   "dependent_everywhere": out["dependent_everywhere"],
                   "conclusion_case": out["conclusion_case"]}
        if "projection" in out:
            payload["projection"] = pio.matrix_to_json(
                field, out["projection"])
        if "witness_vector" in out:
            payload["witness_vector"] = [field.to_str(c)
                                         for c in out["witness_vector"]]
        _emit(payload)
        return EXIT_OK
    if lemma == "spectrum":
        field = _field_arg(args)
        rep = check_spectrum_formula(field, max_block=args.max_block,
                                     cases=args.cases, seed=args.seed,
                                     per_cell=args.per_cell)
    else:
        if args.q is None or args.n is None:
            raise ValueError("--q and --n are required for this lemma")
        hom = pio.hom_from_json(args.hom) if args.hom else None
        p = None
        if args.poly:
            p = _poly_and_field(args)[0]
        if lemma == "orthogonality":
            rep = verify_orthogonality(args.q, args.n,
                                       trials=args.trials,
                                       seed=args.seed)
        elif lemma == "zero_detection":
            rep = verify_zero_detection(args.q, args.n, p=p)
        elif lemma == "nilpotent_proportionality":
            rep = verify_nilpotent_proportionality(
                args.q, args.n, hom=hom, pairs=args.pairs,
                seed=args.seed, p=p)
        else:
            rep = verify_affine_span(args.q, args.n, hom=hom,
                                     trials=args.trials or 10,
                                     pn_samples=args.pn_samples,
                                     seed=args.seed)
        field = pio.field_from_json("gf%d" % args.q)
    _emit({"command": "oracle",
           **pio.lemma_report_to_json(field, rep)})
    return EXIT_OK if rep.passed else EXIT_VIOLATED


def cmd_enumerate(args):
    what = args.what
    if what == "homs":
        field = _field_arg(args)
        homs = enumerate_homs(field)
        _emit({"command": "enumerate", "what": what,
               "count": len(homs),
               "items": [pio.hom_to_json(h) for h in homs]})
        return EXIT_OK
    if what == "zero_set":
        p, field = _poly_and_field(args)
        if args.n is None:
            raise ValueError("--n is required for zero_set")
        count = 0
        items = []
        for tup in enumerate_zero_set(p, args.n,
                                      cap=_budget(TUPLE_CAP)):
            if count < args.limit:
                items.append(pio.tuple_to_json(field, tup))
            count += 1
        _emit({"command": "enumerate", "what": what, "count": count,
               "items": None if args.count_only else items})
        return EXIT_OK
    field = _field_arg(args)
    if field.kind not in ("prime", "extension"):
        raise ValueError("enumeration needs a finite field")
    if args.n is None:
        raise ValueError("--n is required")
    n = args.n
    if what == "matrices":
        if field.order ** (n * n) > _budget(MATRIX_CAP):
            raise BudgetError("matrix space exceeds the cap")
        gen = enumerate_matrices(field, n)
    elif what == "rank_one_idempotents":
        gen = enumerate_rank_one_idempotents(field, n)
    elif what == "rank_one_nilpotents":
        gen = enumerate_rank_one_nilpotents(field, n)
    else:
        if field.order ** (n * n) > _budget(MATRIX_CAP):
            raise BudgetError("matrix space exceeds the cap")
        from .matrices import mat_mul
        gen = (P for P in enumerate_matrices(field, n)
               if mat_mul(field, P, P) == P)
    count = 0
    items = []
    for M in gen:
        if count < args.limit:
            items.append(pio.matrix_to_json(field, M))
        count += 1
    _emit({"command": "enumerate", "what": what, "count": count,
           "items": None if args.count_only else items})
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser():
    parser = _Parser(prog="preserverlab",
                     description="Exact tools for multilinear matrix "
                                 "polynomials, their annihilator "
                                 "spaces, and zero preservers.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(func=func)
        sp.add_argument("--seed", type=int, default=0)
        return sp

    def poly_args(sp, tuple_arg=False):
        sp.add_argument("--poly", required=True,
                        help="polynomial JSON (file, inline, -) or a "
                             "name such as xy+yx")
        sp.add_argument("--field", help="field shorthand (gf3, q, qi) "
                                        "or descriptor JSON")
        if tuple_arg:
            sp.add_argument("--tuple", required=True,
                            help="JSON list of matrices")

    sp = add("eval", cmd_eval, help="evaluate a polynomial on a tuple")
    poly_args(sp, tuple_arg=True)

    sp = add("zeros", cmd_zeros,
             help="test membership of a tuple in the zero set")
    poly_args(sp, tuple_arg=True)

    sp = add("omega", cmd_omega,
             help="annihilator spaces at a matrix: slot-one, pivot, "
                  "and their intersection")
    poly_args(sp)
    sp.add_argument("--matrix", required=True)

    sp = add("classify", cmd_classify,
             help="trichotomy of the joint annihilator space")
    poly_args(sp)
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--lift", action="store_true",
                    help="allow a splitting-field lift")
    sp.add_argument("--path", choices=("structural", "direct", "cross"),
                    default="cross")

    sp = add("spectrum", cmd_spectrum,
             help="single eigenvalue of a power sandwich operator")
    sp.add_argument("--field", required=True)
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--coeffs", required=True,
                    help="JSON list of coefficients, low powers of "
                         "the left factor first")

    sp = add("companion", cmd_companion,
             help="companion matrix of a monic polynomial")
    sp.add_argument("--field", required=True)
    sp.add_argument("--coeffs", required=True,
                    help="JSON list, constant term first, monic")

    sp = add("rcf", cmd_rcf, help="primary rational canonical form")
    sp.add_argument("--field", required=True)
    sp.add_argument("--matrix", required=True)

    sp = add("jordan", cmd_jordan,
             help="Jordan form over the splitting field")
    sp.add_argument("--field", required=True)
    sp.add_argument("--matrix", required=True)

    sp = add("anticommutant", cmd_anticommutant,
             help="basis of the anticommutant of a matrix")
    sp.add_argument("--field", required=True)
    sp.add_argument("--matrix", required=True)

    sp = add("verify-preserver", cmd_verify_preserver,
             help="check a candidate map against a polynomial")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--poly")
    sp.add_argument("--poly2")
    sp.add_argument("--field")
    sp.add_argument("--check",
                    choices=("zeros", "zero-kernel",
                             "idempotent-structure", "commutativity",
                             "rescale"),
                    default="zeros")
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--strategy",
                    choices=("witnesses", "exhaustive", "sample"),
                    default="witnesses")
    sp.add_argument("--samples", type=int, default=SAMPLE_DEFAULT)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--extras",
                    help="JSON list of extra witness tuples")

    sp = add("examples", cmd_examples,
             help="reproduce the six built-in worked examples")
    sp.add_argument("--id", choices=EXAMPLE_IDS)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("oracle", cmd_oracle,
             help="independent brute-force lemma checks")
    sp.add_argument("--lemma", required=True,
                    choices=("orthogonality", "zero_detection",
                             "nilpotent_proportionality", "affine_span",
                             "local_dependence", "spectrum"))
    sp.add_argument("--q", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--pairs", type=int, default=100)
    sp.add_argument("--pn-samples", type=int, default=200)
    sp.add_argument("--cases", type=int, default=200)
    sp.add_argument("--max-block", type=int, default=3)
    sp.add_argument("--per-cell", type=int)
    sp.add_argument("--hom", help="identity, conjugation, frobenius:e")
    sp.add_argument("--poly")
    sp.add_argument("--field")
    sp.add_argument("--input",
                    help="for local_dependence: JSON with R1, R2, R3")

    sp = add("enumerate", cmd_enumerate,
             help="list matrices, idempotents, nilpotents, field "
                  "homs, or a polynomial's zero set")
    sp.add_argument("--what", required=True,
                    choices=("matrices", "rank_one_idempotents",
                             "rank_one_nilpotents", "idempotents",
                             "zero_set", "homs"))
    sp.add_argument("--field")
    sp.add_argument("--poly")
    sp.add_argument("--n", type=int)
    sp.add_argument("--limit", type=int, default=25)
    sp.add_argument("--count-only", action="store_true")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except BudgetError as exc:
        return _emit_error(exc, EXIT_BUDGET)
    except (ValueError, KeyError, TypeError, OSError,
            json.JSONDecodeError) as exc:
        return _emit_error(exc, EXIT_INVALID)


if __name__ == "__main__":
    sys.exit(main())
