"""Classification of the joint annihilator space of a matrix.

For a generic normalized polynomial p and a square matrix A, the
intersection of the slot-one and pivot annihilator spaces falls, over
a splitting field of the characteristic polynomial, into exactly one
of three shapes: the zero space, a space containing a rank-one
square-zero matrix, or the scalar line through a rank-one idempotent.
Over fields where the characteristic polynomial does not split the
intersection can escape all three; that case is reported as Other.

Two routes are implemented.  classify_structural reads the case off
the Jordan data: a pair of eigenvalues annihilated by both scalar
symbols either does not exist (zero space), involves two different
eigenvalues or a repeated zero (explicit square-zero witness), or is
a simple zero eigenvalue (idempotent line through its spectral
projector).  classify_direct searches the actual kernel basis by
enumeration or seeded sampling.  cross_validate runs both and
compares the cases.
"""

from dataclasses import dataclass
import itertools
import random

from . import operators, unipoly
from .canonical import jordan_over_splitting_field
from .matrices import (
    char_poly, inverse, is_idempotent, is_rank_one, is_square_zero,
    is_zero_matrix, mat_map, mat_mul, mat_scale, null_space,
    row_space_basis, unit_matrix,
)
from .multipoly import MultilinearPoly, normalize
from .unipoly import BudgetError

CASE_TRIVIAL = "TrivialZero"
CASE_SQUARE_ZERO = "ContainsRankOneSquareZero"
CASE_LINE = "ScalarIdempotentLine"
CASE_OTHER = "Other"

DIRECT_ENUM_CAP = 2 ** 20
DIRECT_SAMPLES = 10 ** 5


@dataclass(frozen=True)
class Classification:
    case: str
    dim: int                  # dimension of the joint annihilator
    basis: tuple              # canonical basis over the base field
    witness: object           # rank-one square-zero member, or None
    line: object              # the idempotent spanning the line, or None
    field: object             # base field
    extension: object         # splitting field when a lift was used
    path: str                 # "structural" or "direct"
    detail: tuple             # human-readable step trace


def _require_generic(np):
    field = np.field
    if field.is_zero(field.add(field.one, np.tail_sum)):
        raise ValueError("classification needs a generic polynomial "
                         "(nonzero coefficient sum)")


def _lift_poly(np, big, embed):
    base = np.base
    lifted = MultilinearPoly(big, base.k,
                             {perm: embed(c)
                              for perm, c in base.terms.items()})
    return normalize(lifted)


def _kernel_projector(field, A):
    """Spectral projector onto ker A along im A, for a matrix whose
    zero eigenvalue is simple.  Exact and base-field valued."""
    n = len(A)
    kernel = null_space(field, A)
    assert len(kernel) == 1
    image = row_space_basis(field, list(zip(*A)))
    cols = [kernel[0]] + list(image)
    M = tuple(zip(*cols))
    E11 = unit_matrix(field, n, 0, 0)
    return mat_mul(field, mat_mul(field, M, E11), inverse(field, M))


def classify_structural(field, A, np, lift=True, seed=0):
    """Case read off the Jordan block data over the splitting field."""
    _require_generic(np)
    n = len(A)
    base_basis = tuple(operators.joint_kernel(A, np))
    dim = len(base_basis)
    try:
        jd = jordan_over_splitting_field(field, A, seed)
    except BudgetError:
        jd = None
    if jd is None or (not lift and jd.field is not field):
        why = ("characteristic polynomial does not split over the base "
               "field" if jd is None else
               "lift disabled and the characteristic polynomial does "
               "not split")
        return Classification(case=CASE_OTHER, dim=dim, basis=base_basis,
                              witness=None, line=None, field=field,
                              extension=None, path="structural",
                              detail=(why,))
    big = jd.field
    embed = jd.embed
    np_big = _lift_poly(np, big, embed) if big is not field else np
    A_big = mat_map(A, embed) if big is not field else A
    eigs = jd.eigenvalues
    mults = jd.multiplicities
    starts = []
    at = 0
    for m in mults:
        starts.append(at)
        at += m
    both_zero = []
    for i, lam in enumerate(eigs):
        for j, mu in enumerate(eigs):
            s1 = operators.slot1_symbol(np_big, lam, mu)
            s2 = operators.pivot_symbol(np_big, lam, mu)
            if big.is_zero(s1) and big.is_zero(s2):
                both_zero.append((i, j))
    extension = big if big is not field else None
    if not both_zero:
        return Classification(case=CASE_TRIVIAL, dim=dim, basis=base_basis,
                              witness=None, line=None, field=field,
                              extension=extension, path="structural",
                              detail=("no eigenvalue pair is annihilated "
                                      "by both scalar symbols",))
    off_diag = [(i, j) for i, j in both_zero if i != j]
    S = jd.transform
    S_inv = inverse(big, S)
    if off_diag:
        i, j = off_diag[0]
        row = starts[i]
        col = starts[j] + mults[j] - 1
        unit = unit_matrix(big, n, row, col)
        W = mat_mul(big, mat_mul(big, S, unit), S_inv)
        _assert_joint_member(big, A_big, np_big, W)
        assert is_rank_one(big, W) and is_square_zero(big, W)
        return Classification(case=CASE_SQUARE_ZERO, dim=dim,
                              basis=base_basis, witness=W, line=None,
                              field=field, extension=extension,
                              path="structural",
                              detail=("eigenvalue pair (%d, %d) off the "
                                      "diagonal is annihilated by both "
                                      "symbols" % (i, j),))
    # remaining pairs sit on the diagonal; for a generic polynomial the
    # slot-one symbol at (lam, lam) is lam^(k-1) times the coefficient
    # sum, so the eigenvalue must be zero
    z = both_zero[0][0]
    assert big.is_zero(eigs[z]), "diagonal pair with nonzero eigenvalue"
    if mults[z] >= 2:
        row = starts[z]
        col = starts[z] + mults[z] - 1
        unit = unit_matrix(big, n, row, col)
        W = mat_mul(big, mat_mul(big, S, unit), S_inv)
        _assert_joint_member(big, A_big, np_big, W)
        assert is_rank_one(big, W) and is_square_zero(big, W)
        return Classification(case=CASE_SQUARE_ZERO, dim=dim,
                              basis=base_basis, witness=W, line=None,
                              field=field, extension=extension,
                              path="structural",
                              detail=("zero eigenvalue of multiplicity "
                                      "%d carries a nilpotent corner "
                                      "unit" % mults[z],))
    P = _kernel_projector(field, A)
    assert is_idempotent(field, P) and is_rank_one(field, P)
    return Classification(case=CASE_LINE, dim=dim, basis=base_basis,
                          witness=None, line=P, field=field,
                          extension=extension, path="structural",
                          detail=("simple zero eigenvalue; the line runs "
                                  "through its spectral projector",))


def _assert_joint_member(field, A, np, X):
    s1 = operators.slot1_operator(A, np).apply(X)
    s2 = operators.pivot_operator(A, np).apply(X)
    assert is_zero_matrix(field, s1) and is_zero_matrix(field, s2)


def classify_direct(field, A, np, lift=True, seed=0,
                    cap=DIRECT_ENUM_CAP, samples=DIRECT_SAMPLES):
    """Case found by searching the joint annihilator itself."""
    _require_generic(np)
    base_basis = tuple(operators.joint_kernel(A, np))
    dim = len(base_basis)
    if dim == 0:
        return Classification(case=CASE_TRIVIAL, dim=0, basis=base_basis,
                              witness=None, line=None, field=field,
                              extension=None, path="direct",
                              detail=("the joint annihilator is zero",))
    big, np_big, basis = field, np, base_basis
    if lift and field.kind in ("prime", "extension"):
        cp = char_poly(field, A)
        big, embed = unipoly.splitting_field(field, cp, seed)
        if big is not field:
            np_big = _lift_poly(np, big, embed)
            A_big = mat_map(A, embed)
            basis = tuple(operators.joint_kernel(A_big, np_big))
            assert len(basis) == dim
    lifted = big is not field
    extension = big if big is not field else None
    if field.kind in ("rational", "gaussian"):
        # no finite search; settle what the basis shows directly
        for B in basis:
            if is_rank_one(field, B) and is_square_zero(field, B):
                return Classification(case=CASE_SQUARE_ZERO, dim=dim,
                                      basis=base_basis, witness=B,
                                      line=None, field=field,
                                      extension=None, path="direct",
                                      detail=("a basis member is rank-one "
                                              "square-zero",))
        line = _line_idempotent(field, basis)
        if line is not None:
            return Classification(case=CASE_LINE, dim=dim,
                                  basis=base_basis, witness=None,
                                  line=line, field=field, extension=None,
                                  path="direct",
                                  detail=("one-dimensional, spanned by a "
                                          "scalar multiple of an "
                                          "idempotent",))
        return Classification(case=CASE_OTHER, dim=dim, basis=base_basis,
                              witness=None, line=None, field=field,
                              extension=None, path="direct",
                              detail=("search refused over an infinite "
                                      "field",))
    W, how = _search_square_zero(big, basis, seed, cap, samples)
    if W is not None:
        return Classification(case=CASE_SQUARE_ZERO, dim=dim,
                              basis=base_basis, witness=W, line=None,
                              field=field, extension=extension,
                              path="direct", detail=(how,))
    if how == "sampled":
        # inconclusive search; fall back on the structural reading
        st = classify_structural(field, A, np, lift=lift, seed=seed)
        return Classification(case=st.case, dim=dim, basis=base_basis,
                              witness=st.witness, line=st.line,
                              field=field, extension=st.extension,
                              path="direct",
                              detail=("sampling found no witness; "
                                      "structural fallback",) + st.detail)
    if dim == 1:
        line = _line_idempotent(big, basis)
        if line is not None:
            if lifted:
                down = _descend(field, big, line)
                line = down if down is not None else line
            return Classification(case=CASE_LINE, dim=dim,
                                  basis=base_basis, witness=None,
                                  line=line, field=field,
                                  extension=extension, path="direct",
                                  detail=("one-dimensional, spanned by a "
                                          "scalar multiple of an "
                                          "idempotent",))
    return Classification(case=CASE_OTHER, dim=dim, basis=base_basis,
                          witness=None, line=None, field=field,
                          extension=extension, path="direct",
                          detail=("exhaustive search found no square-zero "
                                  "rank-one member and no idempotent "
                                  "line",))


def _line_idempotent(field, basis):
    """The idempotent spanning a one-dimensional space, when the space
    is a scalar-idempotent line."""
    if len(basis) != 1:
        return None
    B = basis[0]
    B2 = mat_mul(field, B, B)
    # B = c P with P idempotent forces B^2 = c B
    c = None
    for i in range(len(B)):
        for j in range(len(B)):
            if not field.is_zero(B[i][j]):
                c = field.div(B2[i][j], B[i][j])
                break
        if c is not None:
            break
    if c is None or field.is_zero(c):
        return None
    if B2 != mat_scale(field, c, B):
        return None
    P = mat_scale(field, field.inv(c), B)
    if not (is_idempotent(field, P) and is_rank_one(field, P)):
        return None
    return P


def _descend(base, big, M):
    """Rewrite a big-field matrix with base-subfield entries back over
    the base field, or None if any entry escapes."""
    if base.kind != "prime":
        return None
    out = []
    for row in M:
        rr = []
        for a in row:
            if any(c for c in a[1:]):
                return None
            rr.append(a[0])
        out.append(tuple(rr))
    return tuple(out)


def _search_square_zero(field, basis, seed, cap, samples):
    """First rank-one square-zero combination of the basis, scanning
    coefficient tuples lexicographically; seeded sampling past the cap.
    Returns (witness or None, note)."""
    dim = len(basis)
    total = field.order ** dim
    n = len(basis[0])
    if total <= cap:
        for coeffs in itertools.product(list(field.elements()),
                                        repeat=dim):
            if all(field.is_zero(c) for c in coeffs):
                continue
            X = _combine(field, coeffs, basis, n)
            if is_square_zero(field, X) and is_rank_one(field, X):
                return X, "exhaustive coefficient scan"
        return None, "exhausted"
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [field.random(rng) for _ in range(dim)]
        if all(field.is_zero(c) for c in coeffs):
            continue
        X = _combine(field, coeffs, basis, n)
        if is_square_zero(field, X) and is_rank_one(field, X):
            return X, "seeded sampling"
    return None, "sampled"


def _combine(field, coeffs, basis, n):
    acc = [[field.zero] * n for _ in range(n)]
    for c, B in zip(coeffs, basis):
        if field.is_zero(c):
            continue
        for i in range(n):
            row = B[i]
            for j in range(n):
                acc[i][j] = field.add(acc[i][j], field.mul(c, row[j]))
    return tuple(tuple(r) for r in acc)


@dataclass(frozen=True)
class CrossCheck:
    structural: Classification
    direct: Classification
    agree: bool


def cross_validate(field, A, np, lift=True, seed=0):
    st = classify_structural(field, A, np, lift=lift, seed=seed)
    dr = classify_direct(field, A, np, lift=lift, seed=seed)
    refused = any("search refused" in d for d in dr.detail)
    agree = (st.case == dr.case and st.dim == dr.dim) or refused
    return CrossCheck(structural=st, direct=dr, agree=agree)
