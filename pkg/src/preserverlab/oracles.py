"""Independent brute-force checks of the supporting lemmas.

Every routine here verifies a statement by direct enumeration or
seeded sampling, using only field and matrix arithmetic plus the
plain polynomial evaluator; none of them call the operator, kernel,
classification, or preserver machinery they are meant to validate.
Reports carry the failing instances so any failure can be replayed
from the payload alone.
"""

from dataclasses import dataclass, field as dc_field
import itertools
import random

from .fields import IDENTITY_HOM, apply_hom, field_of_order
from .matrices import (
    char_poly, enumerate_matrices, enumerate_rank_one_idempotents,
    enumerate_rank_one_nilpotents, enumerate_vectors, identity_matrix,
    is_zero_matrix, kron, mat_add, mat_apply_hom, mat_mul, mat_scale,
    mat_sub, mat_vec, null_space, outer, rank, rank_one_factorize,
    scalar_matrix, solve, transpose, unit_matrix, vec, vec_dot,
)
from .multipoly import MultilinearPoly, coeff_sum, evaluate, normalize
from .unipoly import BudgetError, poly_mul, poly_trim

VECTOR_CAP = 2 ** 16
MATRIX_CAP = 2 ** 20
TUPLE_CAP = 2 ** 24


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    instances: int
    failures: tuple
    converse_failures: tuple = ()
    notes: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures


def enumerate_zero_set(p, n, q=None, cap=TUPLE_CAP):
    """All k-tuples of n x n matrices annihilated by p, by direct
    evaluation, in nested enumeration order."""
    field = p.field
    if q is not None and getattr(field, "order", None) != q:
        raise ValueError("polynomial field has order %r, not %d"
                         % (getattr(field, "order", None), q))
    if field.kind not in ("prime", "extension"):
        raise BudgetError("zero set enumeration needs a finite field")
    total = field.order ** (n * n * p.k)
    if total > cap:
        raise BudgetError("tuple scan of %d exceeds cap %d"
                          % (total, cap))
    mats = list(enumerate_matrices(field, n))
    for tup in itertools.product(mats, repeat=p.k):
        if is_zero_matrix(field, evaluate(p, tup)):
            yield tup


def commuting_pair_count(field, n):
    """Number of commuting pairs, summed centralizer by centralizer:
    the centralizer of A is the kernel of X -> XA - AX, whose matrix
    is kron(A^tr, Id) - kron(Id, A) on column-stacked coordinates."""
    ident = identity_matrix(field, n)
    total = 0
    for A in enumerate_matrices(field, n):
        M = mat_sub(field, kron(field, transpose(A), ident),
                    kron(field, ident, A))
        total += field.order ** (n * n - rank(field, M))
    return total


def _all_idempotents(field, n, cap=MATRIX_CAP):
    if field.order ** (n * n) > cap:
        raise BudgetError("idempotent scan exceeds the matrix cap")
    return [P for P in enumerate_matrices(field, n)
            if mat_mul(field, P, P) == P]


def _rank_one_pool(field, n):
    """Every rank-one matrix: nonzero multiples of the normalized
    idempotents and square-zero representatives."""
    pool = []
    seen = set()
    reps = list(enumerate_rank_one_idempotents(field, n)) \
        + list(enumerate_rank_one_nilpotents(field, n))
    nonzero = [c for c in field.elements() if not field.is_zero(c)]
    for B in reps:
        for c in nonzero:
            M = mat_scale(field, c, B)
            if M not in seen:
                seen.add(M)
                pool.append(M)
    return pool


def verify_orthogonality(q, n, trials=None, seed=0):
    """Two one-sided annihilation identities at an idempotent force
    two-sided orthogonality, whenever one plus the two scalars of the
    first identity is nonzero.

    Enumerates (P idempotent, X, mu, nu, mu', nu') exhaustively when
    the matrix space is small, otherwise samples `trials` instances.
    """
    field = field_of_order(q)
    failures = []
    instances = 0
    if trials is None and field.order ** (n * n) <= 2 ** 13:
        els = list(field.elements())
        good = [(mu, nu) for mu in els for nu in els
                if not field.is_zero(
                    field.add(field.one, field.add(mu, nu)))]
        every = [(mup, nup) for mup in els for nup in els]
        idems = _all_idempotents(field, n)
        mats = list(enumerate_matrices(field, n))
        for P in idems:
            for X in mats:
                PX = mat_mul(field, P, X)
                XP = mat_mul(field, X, P)
                PXP = mat_mul(field, PX, P)
                ortho = is_zero_matrix(field, PX) and \
                    is_zero_matrix(field, XP)
                first = [is_zero_matrix(field, mat_add(
                    field, mat_add(field, PX,
                                   mat_scale(field, mu, PXP)),
                    mat_scale(field, nu, XP))) for mu, nu in good]
                second = [is_zero_matrix(field, mat_add(
                    field, mat_add(field, XP,
                                   mat_scale(field, mup, PXP)),
                    mat_scale(field, nup, PX))) for mup, nup in every]
                for a, pair1 in zip(first, good):
                    for b, pair2 in zip(second, every):
                        instances += 1
                        if a and b and not ortho:
                            failures.append((P, X) + pair1 + pair2)
        notes = {"mode": "exhaustive", "idempotents": len(idems),
                 "matrices": len(mats),
                 "scalar_pairs": [len(good), len(every)]}
    else:
        rng = random.Random(seed)
        count = trials or 10 ** 4
        while instances < count:
            P = tuple(tuple(field.random(rng) for _ in range(n))
                      for _ in range(n))
            if mat_mul(field, P, P) != P:
                continue
            X = tuple(tuple(field.random(rng) for _ in range(n))
                      for _ in range(n))
            mu, nu = field.random(rng), field.random(rng)
            if field.is_zero(field.add(field.one, field.add(mu, nu))):
                continue
            mup, nup = field.random(rng), field.random(rng)
            PX = mat_mul(field, P, X)
            XP = mat_mul(field, X, P)
            PXP = mat_mul(field, PX, P)
            eq1 = mat_add(field, mat_add(field, PX,
                                         mat_scale(field, mu, PXP)),
                          mat_scale(field, nu, XP))
            eq2 = mat_add(field, mat_add(field, XP,
                                         mat_scale(field, mup, PXP)),
                          mat_scale(field, nup, PX))
            instances += 1
            if is_zero_matrix(field, eq1) and \
                    is_zero_matrix(field, eq2) and \
                    not (is_zero_matrix(field, PX)
                         and is_zero_matrix(field, XP)):
                failures.append((P, X, mu, nu, mup, nup))
        notes = {"mode": "sampled", "seed": seed}
    return LemmaReport(lemma="orthogonality", instances=instances,
                       failures=tuple(failures), notes=notes)


def _default_generic_poly(field):
    if field.is_zero(field.add(field.one, field.one)):
        return MultilinearPoly(field, 2, {(1, 2): field.one})
    return MultilinearPoly(field, 2, {(1, 2): field.one,
                                      (2, 1): field.one})


def verify_zero_detection(q, n, p=None):
    """A matrix is zero exactly when substituting it for the first
    variable and a single rank-one matrix everywhere else always
    evaluates to zero.  Needs a nonzero coefficient sum.  Also counts
    the nonzero matrices the diagonal units alone fail to witness."""
    field = field_of_order(q)
    if p is None:
        p = _default_generic_poly(field)
    if field.is_zero(coeff_sum(p)):
        raise ValueError("zero detection needs a nonzero coefficient sum")
    if field.order ** (n * n) > MATRIX_CAP:
        raise BudgetError("matrix scan exceeds the matrix cap")
    full_pool = _rank_one_pool(field, n)
    diag_pool = [unit_matrix(field, n, i, i) for i in range(n)]
    failures = []
    diag_misses = []
    instances = 0
    k = p.k

    def witness(A, pool):
        for X in pool:
            if not is_zero_matrix(field,
                                  evaluate(p, (A,) + (X,) * (k - 1))):
                return X
        return None

    for A in enumerate_matrices(field, n):
        instances += 1
        hit = witness(A, full_pool)
        if is_zero_matrix(field, A):
            if hit is not None:
                failures.append((A, hit))
        else:
            if hit is None:
                failures.append((A, None))
            if witness(A, diag_pool) is None:
                diag_misses.append(A)
    return LemmaReport(lemma="zero_detection", instances=instances,
                       failures=tuple(failures),
                       notes={"rank_one_pool": len(full_pool),
                              "diagonal_only_misses": len(diag_misses)})


def _member_slot_one(np_, N, A):
    mats = (N,) + (A,) * (np_.k - 1)
    return is_zero_matrix(np_.field, evaluate(np_.base, mats))


def _member_pivot(np_, N, A):
    mats = [A] * np_.k
    mats[np_.pivot_var - 1] = N
    return is_zero_matrix(np_.field, evaluate(np_.base, tuple(mats)))


def _joint_member(np_, N, A):
    return _member_slot_one(np_, N, A) and _member_pivot(np_, N, A)


def _proportional(field, M, N):
    """Nonzero lam with N = lam M, or None."""
    lam = None
    for rm, rn in zip(M, N):
        for a, b in zip(rm, rn):
            if field.is_zero(a) != field.is_zero(b):
                return None
            if not field.is_zero(a) and lam is None:
                lam = field.div(b, a)
    if lam is None:
        return None
    for rm, rn in zip(M, N):
        for a, b in zip(rm, rn):
            if b != field.mul(lam, a):
                return None
    return lam


def verify_nilpotent_proportionality(q, n, hom=None, pairs=100, seed=0,
                                     p=None):
    """Agreement of annihilator membership across every rank-one
    idempotent forces two rank-one square-zero matrices to be
    proportional through the homomorphism; conversely, proportional
    pairs agree everywhere when the homomorphism fixes the
    coefficients.

    Odd draws build a proportional pair, even draws pick the two
    matrices independently.  Converse breakdowns are reported apart
    from lemma failures."""
    if n < 3:
        raise ValueError("needs matrices of size at least 3")
    field = field_of_order(q)
    hom = hom or IDENTITY_HOM
    if p is None:
        p = _default_generic_poly(field)
    np_ = normalize(p)
    rng = random.Random(seed)
    nil_pool = list(enumerate_rank_one_nilpotents(field, n))
    idem_pool = list(enumerate_rank_one_idempotents(field, n))
    hom_pool = [mat_apply_hom(field, hom, P) for P in idem_pool]
    nonzero = [c for c in field.elements() if not field.is_zero(c)]
    hom_fixes_coeffs = all(apply_hom(field, hom, c) == c
                           for c in p.terms.values())
    failures = []
    converse_failures = []
    condition_holds = proportional_count = 0
    for i in range(pairs):
        N1 = nil_pool[rng.randrange(len(nil_pool))]
        if i % 2 == 1:
            lam = nonzero[rng.randrange(len(nonzero))]
            N2 = mat_scale(field, lam, mat_apply_hom(field, hom, N1))
        else:
            N2 = nil_pool[rng.randrange(len(nil_pool))]
        cond = True
        for P, Pf in zip(idem_pool, hom_pool):
            if _joint_member(np_, N1, P) != _joint_member(np_, N2, Pf):
                cond = False
                break
        prop = _proportional(field, mat_apply_hom(field, hom, N1),
                             N2) is not None
        if cond:
            condition_holds += 1
            if not prop:
                failures.append((N1, N2))
        if prop:
            proportional_count += 1
            if hom_fixes_coeffs and not cond:
                converse_failures.append((N1, N2))
    return LemmaReport(lemma="nilpotent_proportionality",
                       instances=pairs, failures=tuple(failures),
                       converse_failures=tuple(converse_failures),
                       notes={"seed": seed,
                              "condition_holds": condition_holds,
                              "proportional": proportional_count,
                              "idempotents": len(idem_pool),
                              "hom_fixes_coefficients":
                                  hom_fixes_coeffs})


def _orthogonal_pair_list(field, n):
    """All (P, N) with P a rank-one idempotent, N rank-one, and
    PN = NP = 0, filtered through the outer factorizations."""
    idems = [(P,) + rank_one_factorize(field, P)
             for P in enumerate_rank_one_idempotents(field, n)]
    pool = [(N,) + rank_one_factorize(field, N)
            for N in _rank_one_pool(field, n)]
    out = []
    for P, xp, fp in idems:
        for N, xn, fn in pool:
            if field.is_zero(vec_dot(field, fp, xn)) and \
                    field.is_zero(vec_dot(field, fn, xp)):
                out.append((P, N))
    return out


def _random_kernel_vector(field, basis, rng):
    n = len(basis[0])
    while True:
        v = [field.zero] * n
        for b in basis:
            c = field.random(rng)
            for j in range(n):
                v[j] = field.add(v[j], field.mul(c, b[j]))
        if any(not field.is_zero(c) for c in v):
            return tuple(v)


def _sample_orthogonal_pairs(field, n, rng, count):
    made = 0
    while made < count:
        x = tuple(field.random(rng) for _ in range(n))
        g = tuple(field.random(rng) for _ in range(n))
        d = vec_dot(field, g, x)
        if field.is_zero(d):
            continue
        g = tuple(field.div(c, d) for c in g)
        y = _random_kernel_vector(field, null_space(field, (g,)), rng)
        f = _random_kernel_vector(field, null_space(field, (x,)), rng)
        made += 1
        yield outer(field, x, g), outer(field, y, f)


def _in_affine_span(field, B, A, n):
    """Scalars (gamma, mu) with B = gamma A + mu Id, or None."""
    ca, ci, cb = vec(A), vec(identity_matrix(field, n)), vec(B)
    M = tuple((ca[i], ci[i]) for i in range(n * n))
    return solve(field, M, cb)


def _affine_relation_mismatch(field, A, B, alpha, beta, hom, pairs):
    """First (P, N) in `pairs` where the annihilation relations for
    (A, alpha) and (B, beta) disagree, or None."""
    for P, N in pairs:
        lhs = mat_add(field,
                      mat_mul(field, mat_mul(field, N, A), P),
                      mat_scale(field, alpha,
                                mat_mul(field, mat_mul(field, P, A), N)))
        Pf = mat_apply_hom(field, hom, P)
        Nf = mat_apply_hom(field, hom, N)
        rhs = mat_add(field,
                      mat_mul(field, mat_mul(field, Nf, B), Pf),
                      mat_scale(field, beta,
                                mat_mul(field, mat_mul(field, Pf, B),
                                        Nf)))
        if is_zero_matrix(field, lhs) != is_zero_matrix(field, rhs):
            return P, N
    return None


def affine_span_condition(field, A, B, alpha, beta, hom=None,
                          seed=0, pn_samples=200):
    """First orthogonal (P, N) pair where the two annihilation
    relations disagree for (A, B), or None when they agree on every
    pair tried.  Exhaustive over tiny spaces, sampled otherwise."""
    hom = hom or IDENTITY_HOM
    n = len(A)
    if field.kind in ("prime", "extension") and \
            field.order ** (n * n) <= MATRIX_CAP:
        pairs = _orthogonal_pair_list(field, n)
    else:
        pairs = _sample_orthogonal_pairs(field, n,
                                         random.Random(seed), pn_samples)
    return _affine_relation_mismatch(field, A, B, alpha, beta, hom,
                                     pairs)


def verify_affine_span(q, n, hom=None, alpha=None, beta=None, trials=10,
                       pn_samples=200, seed=0):
    """Matching two-term annihilation relations over orthogonal pairs
    of a rank-one idempotent and a rank-one matrix force the second
    coefficient matrix into the affine span of the first one's
    homomorphic image and the identity.

    Odd trials construct the second matrix inside that span with the
    right-hand scalar matched through the homomorphism; even trials
    draw it freely.  Orthogonal pairs are enumerated exhaustively on
    tiny spaces and sampled otherwise, in which case an agreeing scan
    outside the span counts as inconclusive, not as a failure."""
    if n < 4:
        raise ValueError("needs matrices of size at least 4")
    field = field_of_order(q)
    hom = hom or IDENTITY_HOM
    rng = random.Random(seed)
    alpha = field.one if alpha is None else alpha
    beta = apply_hom(field, hom, alpha) if beta is None else beta
    exhaustive = field.order ** (n * n) <= MATRIX_CAP
    pair_list = _orthogonal_pair_list(field, n) if exhaustive else None
    failures = []
    converse_failures = []
    instances = 0
    condition_count = inconclusive = 0
    for i in range(trials):
        A = tuple(tuple(field.random(rng) for _ in range(n))
                  for _ in range(n))
        if is_zero_matrix(field, A):
            continue
        Af = mat_apply_hom(field, hom, A)
        constructed = i % 2 == 1
        if constructed:
            B = mat_add(field, Af,
                        scalar_matrix(field, n, field.random(rng)))
        else:
            B = tuple(tuple(field.random(rng) for _ in range(n))
                      for _ in range(n))
        if is_zero_matrix(field, B):
            continue
        instances += 1
        pairs = pair_list if exhaustive else \
            _sample_orthogonal_pairs(field, n, rng, pn_samples)
        mismatch = _affine_relation_mismatch(field, A, B, alpha, beta,
                                             hom, pairs)
        in_span = _in_affine_span(field, B, Af, n) is not None
        if mismatch is None:
            condition_count += 1
            if not in_span:
                if exhaustive:
                    failures.append((A, B))
                else:
                    inconclusive += 1
        if constructed and mismatch is not None:
            converse_failures.append((A, B) + mismatch)
    return LemmaReport(lemma="affine_span", instances=instances,
                       failures=tuple(failures),
                       converse_failures=tuple(converse_failures),
                       notes={"seed": seed,
                              "mode": "exhaustive" if exhaustive
                              else "sampled",
                              "condition_holds": condition_count,
                              "inconclusive": inconclusive,
                              "pn_samples": None if exhaustive
                              else pn_samples})


def local_linear_dependence(field, R1, R2, R3):
    """Premise: the three images of every vector are dependent.
    Conclusion branches checked constructively, first match wins:
    global dependence of the matrices, a rank-one complement
    projection flattening all three, or a common image space of
    dimension at most three."""
    if field.kind not in ("prime", "extension"):
        raise BudgetError("needs a finite field")
    n = len(R1)
    if field.order ** n > VECTOR_CAP:
        raise BudgetError("vector exhaustion exceeds the cap")
    triples = (R1, R2, R3)
    for u in enumerate_vectors(field, n):
        cols = tuple(zip(*[mat_vec(field, R, u) for R in triples]))
        if rank(field, cols) > 2:
            return {"dependent_everywhere": False,
                    "conclusion_case": "none", "witness_vector": u}
    if rank(field, tuple(vec(R) for R in triples)) <= 2:
        return {"dependent_everywhere": True,
                "conclusion_case": "globally_dependent"}
    ident = identity_matrix(field, n)
    for P in enumerate_rank_one_idempotents(field, n):
        comp = mat_sub(field, ident, P)
        flat = tuple(vec(mat_mul(field, comp, R)) for R in triples)
        if rank(field, flat) <= 1:
            return {"dependent_everywhere": True,
                    "conclusion_case": "rank_one_projection",
                    "projection": P}
    columns = []
    for R in triples:
        columns.extend(zip(*R))
    if rank(field, tuple(columns)) <= 3:
        return {"dependent_everywhere": True,
                "conclusion_case": "common_3dim_image"}
    return {"dependent_everywhere": True, "conclusion_case": "none"}


def _jordan_block(field, size, lam):
    rows = []
    for i in range(size):
        row = [field.zero] * size
        row[i] = lam
        if i + 1 < size:
            row[i + 1] = field.one
        rows.append(tuple(row))
    return tuple(rows)


def _spectrum_case_holds(field, m, n, lam, mu, coeffs):
    J1 = _jordan_block(field, m, lam)
    J2 = _jordan_block(field, n, mu)
    t = len(coeffs) - 1
    big = None
    for j, c in enumerate(coeffs):
        L = identity_matrix(field, m)
        for _ in range(j):
            L = mat_mul(field, L, J1)
        R = identity_matrix(field, n)
        for _ in range(t - j):
            R = mat_mul(field, R, J2)
        term = mat_scale(field, c, kron(field, transpose(R), L))
        big = term if big is None else mat_add(field, big, term)
    value = field.zero
    for j, c in enumerate(coeffs):
        value = field.add(value,
                          field.mul(c, field.mul(field.pow(lam, j),
                                                 field.pow(mu, t - j))))
    linear = (field.neg(value), field.one)
    expected = (field.one,)
    for _ in range(m * n):
        expected = poly_mul(field, expected, linear)
    return poly_trim(field, char_poly(field, big)) == \
        poly_trim(field, expected)


def check_spectrum_formula(field, max_block=3, cases=200, max_degree=4,
                           seed=0, per_cell=None):
    """The matrix of a power sandwich sum built from two Jordan
    blocks has a single eigenvalue, the coefficient polynomial at the
    two block eigenvalues; checked against the characteristic
    polynomial computed independently.

    By default draws `cases` random (sizes, eigenvalues, coefficient
    list) instances.  With per_cell set, sweeps every size pair and
    eigenvalue pair, drawing per_cell coefficient lists for each."""
    if field.kind not in ("prime", "extension"):
        raise BudgetError("needs a finite field")
    rng = random.Random(seed)
    els = list(field.elements())
    failures = []
    instances = 0

    def random_coeffs():
        t = rng.randrange(1, max_degree + 1)
        return tuple(els[rng.randrange(len(els))] for _ in range(t + 1))

    if per_cell is not None:
        for m in range(1, max_block + 1):
            for nn in range(1, max_block + 1):
                for lam in els:
                    for mu in els:
                        for _ in range(per_cell):
                            coeffs = random_coeffs()
                            instances += 1
                            if not _spectrum_case_holds(field, m, nn,
                                                        lam, mu, coeffs):
                                failures.append((m, nn, lam, mu, coeffs))
    else:
        for _ in range(cases):
            m = rng.randrange(1, max_block + 1)
            nn = rng.randrange(1, max_block + 1)
            lam = els[rng.randrange(len(els))]
            mu = els[rng.randrange(len(els))]
            coeffs = random_coeffs()
            instances += 1
            if not _spectrum_case_holds(field, m, nn, lam, mu, coeffs):
                failures.append((m, nn, lam, mu, coeffs))
    return LemmaReport(lemma="spectrum_formula", instances=instances,
                       failures=tuple(failures),
                       notes={"seed": seed, "max_block": max_block,
                              "per_cell": per_cell})
