"""Verification of zero-set preservation for candidate matrix maps.

A candidate map is either a parametric composition (entry tweak, field
homomorphism applied entrywise, transposition, similarity, scalar
rescaling, scalar shift) or an explicit lookup table on a finite
matrix space.  check_maps_zeros tests whether tuples annihilated by
one polynomial stay annihilated by another after the map is applied
in every slot, by full enumeration, by structured witness families,
or by seeded sampling.  Scans are chunked so parallel workers produce
output identical to a sequential run: every chunk is processed and
the violation with the smallest tuple index wins.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
import itertools
import json
import random

import numpy as np

from .dense import CHUNK, DenseSpace, FULL_SPACE_CAP
from .fields import field_make, hom_make
from .matrices import (
    enumerate_matrices, enumerate_rank_one_idempotents,
    enumerate_rank_one_nilpotents, identity_matrix, inverse, is_idempotent,
    is_rank_one, is_zero_matrix, mat_add, mat_apply_hom, mat_mul, mat_scale,
    scalar_matrix, trace, transpose, unit_matrix,
)
from .multipoly import (
    MultilinearPoly, coefficient_class, is_zero_tuple, validate_admissible,
)
from .unipoly import BudgetError

PAIR_SCAN_CAP = 2 ** 24
SAMPLE_DEFAULT = 10 ** 4
FAMILY_CAP = 64

TWEAKS = ("none", "add_a12_identity", "subtract_trace_over_n")


@dataclass
class PreserverSpec:
    """A candidate map on a square matrix space.

    Parametric mode applies, in order: the entry tweak, the field
    homomorphism entrywise, transposition, conjugation by the
    similarity matrix, multiplication by gamma, and addition of
    shift times the identity.  gamma and shift are either constant
    scalars or finite tables keyed by the input matrix.  Table mode
    looks the whole map up directly.
    """
    field: object
    n: int
    kind: str = "parametric"
    similarity: object = None
    hom: object = None
    transpose: bool = False
    gamma: object = None
    shift: object = None
    entry_tweak: str = "none"
    table: dict = None

    def __post_init__(self):
        if self.kind not in ("parametric", "table"):
            raise ValueError("unknown spec kind %r" % self.kind)
        if self.entry_tweak not in TWEAKS:
            raise ValueError("unknown entry tweak %r" % self.entry_tweak)
        if self.kind == "table" and self.table is None:
            raise ValueError("table mode needs a table")
        self._sim_inv = (inverse(self.field, self.similarity)
                         if self.similarity is not None else None)

    def _at(self, slot, X):
        if isinstance(slot, dict):
            try:
                return slot[X]
            except KeyError:
                raise ValueError("matrix outside the scalar table domain")
        return slot

    def apply(self, X):
        field, n = self.field, self.n
        if len(X) != n:
            raise ValueError("matrix size mismatch")
        if self.kind == "table":
            try:
                return self.table[X]
            except KeyError:
                raise ValueError("matrix outside the table domain")
        Y = X
        if self.entry_tweak == "add_a12_identity":
            Y = mat_add(field, Y, scalar_matrix(field, n, Y[0][1]))
        elif self.entry_tweak == "subtract_trace_over_n":
            c = field.div(trace(field, Y), field.from_int(n))
            Y = mat_add(field, Y, scalar_matrix(field, n, field.neg(c)))
        if self.hom is not None and not self.hom.is_identity():
            Y = mat_apply_hom(field, self.hom, Y)
        if self.transpose:
            Y = transpose(Y)
        if self.similarity is not None:
            Y = mat_mul(field, mat_mul(field, self.similarity, Y),
                        self._sim_inv)
        if self.gamma is not None:
            Y = mat_scale(field, self._at(self.gamma, X), Y)
        if self.shift is not None:
            c = self._at(self.shift, X)
            if not field.is_zero(c):
                Y = mat_add(field, Y, scalar_matrix(field, n, c))
        return Y

    def to_data(self):
        def pack(slot):
            if slot is None:
                return None
            if isinstance(slot, dict):
                return ("table", tuple(sorted(slot.items())))
            return ("const", slot)
        table = (tuple(sorted(self.table.items()))
                 if self.kind == "table" else None)
        hom = ((self.hom.kind, self.hom.power)
               if self.hom is not None else None)
        return (self.field.descriptor(), self.n, self.kind,
                self.similarity, hom, self.transpose,
                pack(self.gamma), pack(self.shift), self.entry_tweak,
                table)

    @staticmethod
    def from_data(data):
        desc, n, kind, sim, hom, tr, gamma, shift, tweak, table = data

        def unpack(slot):
            if slot is None:
                return None
            tag, val = slot
            return dict(val) if tag == "table" else val
        return PreserverSpec(field=field_make(desc), n=n, kind=kind,
                             similarity=sim,
                             hom=hom_make(*hom) if hom else None,
                             transpose=tr, gamma=unpack(gamma),
                             shift=unpack(shift), entry_tweak=tweak,
                             table=dict(table) if table else None)


@dataclass(frozen=True)
class Verdict:
    outcome: str              # "holds", "violated", or "budget"
    witness: tuple = None     # violating input tuple, as matrices
    images: tuple = None      # the mapped tuple at the witness
    direction: str = None     # "forward" or "backward"
    family: str = None        # witness family that produced it
    checked: dict = dc_field(default_factory=dict)
    strategy: dict = dc_field(default_factory=dict)


def _poly_raw(p):
    return (p.k, tuple(sorted(p.terms.items())))


def _poly_from_raw(field, raw):
    k, terms = raw
    return MultilinearPoly(field, k, dict(terms))


_WORKER_CACHE = {}


def _scan_range(payload):
    """One chunk of an exhaustive scan; safe to run in a worker
    process.  Returns (first violation or None, zero count, checked)."""
    (desc, n, raw1, raw2, spec_data, strong, start, count) = payload
    key = (json.dumps(desc, sort_keys=True), n, raw1, raw2,
           repr(spec_data))
    ctx = _WORKER_CACHE.get(key)
    if ctx is None:
        fld = field_make(desc)
        space = DenseSpace(fld, n)
        p1 = _poly_from_raw(fld, raw1)
        p2 = _poly_from_raw(fld, raw2)
        spec = PreserverSpec.from_data(spec_data)
        table = space.map_table(spec.apply)
        ctx = (space, p1, p2, table)
        _WORKER_CACHE[key] = ctx
    space, p1, p2, table = ctx
    columns = space.columns_for_range(p1.k, start, count)
    z1 = space.zero_mask(p1, columns)
    mapped = [table[c] for c in columns]
    z2 = space.zero_mask(p2, mapped)
    forward = z1 & ~z2
    combined = forward | ((z2 & ~z1) if strong else False)
    first = None
    if combined.any():
        at = int(np.argmax(combined))
        direction = "forward" if bool(forward[at]) else "backward"
        first = (start + at, direction)
    return first, int(z1.sum()), count


def _strategy_record(name, **extra):
    rec = {"name": name}
    rec.update(extra)
    return rec


def check_maps_zeros(p1, p2, spec, strong=False, strategy="witnesses",
                     extras=(), sample_size=SAMPLE_DEFAULT, seed=0,
                     jobs=1, cap=PAIR_SCAN_CAP):
    """Does the map send zeros of p1 to zeros of p2, slotwise?

    The default strategy "witnesses" walks the structured candidate
    families behind the classification results plus any injected
    extras, so a failure names an interpretable tuple; "exhaustive"
    scans every tuple of the space (finite fields, within cap);
    "sample" draws seeded random tuples.  strong additionally
    requires preimages of zeros to be zeros.  The reported violation
    is the one with the smallest tuple index regardless of the worker
    count.
    """
    if p1.k != p2.k:
        raise ValueError("polynomials must share the slot count")
    if p1.field is not spec.field or p2.field is not spec.field:
        raise ValueError("polynomials and map must share the field")
    if strategy == "exhaustive":
        return _check_exhaustive(p1, p2, spec, strong, seed, jobs, cap)
    if strategy == "witnesses":
        return _check_witnesses(p1, p2, spec, strong, extras)
    if strategy == "sample":
        return _check_sample(p1, p2, spec, strong, sample_size, seed)
    raise ValueError("unknown strategy %r" % strategy)


def _check_exhaustive(p1, p2, spec, strong, seed, jobs, cap):
    field, n, k = spec.field, spec.n, p1.k
    if field.kind not in ("prime", "extension"):
        raise BudgetError("exhaustive scan needs a finite field")
    space = DenseSpace(field, n)
    total = space.count ** k
    if total > cap:
        raise BudgetError("tuple scan of %d exceeds cap %d" % (total, cap))
    payload_base = (field.descriptor(), n, _poly_raw(p1), _poly_raw(p2),
                    spec.to_data(), strong)
    ranges = [(s, min(CHUNK, total - s)) for s in range(0, total, CHUNK)]
    payloads = [payload_base + r for r in ranges]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_range, payloads))
    else:
        results = [_scan_range(p) for p in payloads]
    zeros = sum(r[1] for r in results)
    firsts = [r[0] for r in results if r[0] is not None]
    strat = _strategy_record("exhaustive", tuples=total, jobs=jobs,
                             strong=strong)
    checked = {"tuples": total, "zeros": zeros}
    if not firsts:
        return Verdict(outcome="holds", checked=checked, strategy=strat)
    at, direction = min(firsts)
    codes = [int(c[0]) for c in space.columns_for_range(k, at, 1)]
    witness = tuple(space.matrix_of(c) for c in codes)
    images = tuple(spec.apply(X) for X in witness)
    return Verdict(outcome="violated", witness=witness, images=images,
                   direction=direction, checked=checked, strategy=strat)


def _unit_pool(field, n, with_identity=True):
    pool = [unit_matrix(field, n, i, j)
            for i in range(n) for j in range(n)]
    if with_identity:
        pool.append(identity_matrix(field, n))
    return pool


def _capped(gen, cap=FAMILY_CAP):
    return list(itertools.islice(gen, cap))


def _idempotent_pool(field, n):
    if field.kind in ("prime", "extension"):
        return _capped(enumerate_rank_one_idempotents(field, n))
    return [unit_matrix(field, n, i, i) for i in range(n)]


def _nilpotent_pool(field, n):
    if field.kind in ("prime", "extension"):
        return _capped(enumerate_rank_one_nilpotents(field, n))
    return [unit_matrix(field, n, i, j)
            for i in range(n) for j in range(n) if i != j]


def structured_witness_tuples(p, n, extras=()):
    """Candidate zero tuples in a fixed order: injected extras, then
    shape-driven families chosen by the coefficient class.  Yields
    (family, tuple); candidates are not filtered here."""
    field, k = p.field, p.k
    for tup in extras:
        yield "injected", tuple(tup)
    pool = _unit_pool(field, n)
    ident = identity_matrix(field, n)
    if coefficient_class(p) == "generic":
        families = ("orthogonal_idempotents", "idempotent_nilpotent",
                    "repeated_tail")
    else:
        families = ("scalar_slot", "adjacent_commuting",
                    "orthogonal_idempotents", "repeated_tail")
    for fam in families:
        if fam == "scalar_slot":
            info = validate_admissible(p)
            if not info.admissible:
                continue
            t = info.moved_index
            heads = pool if t > 1 else pool[:1]
            tails = pool if t < k else pool[:1]
            for J in heads:
                for F in tails:
                    for c in (field.zero, field.one):
                        tup = tuple(J for _ in range(t - 1)) \
                            + (scalar_matrix(field, n, c),) \
                            + tuple(F for _ in range(k - t))
                        yield fam, tup
        elif fam == "adjacent_commuting":
            for w in range(1, k):
                for X in pool:
                    for Y in pool:
                        if mat_mul(field, X, Y) != mat_mul(field, Y, X):
                            continue
                        tup = tuple(ident for _ in range(w - 1)) \
                            + (X, Y) \
                            + tuple(ident for _ in range(k - w - 1))
                        yield fam, tup
        elif fam == "orthogonal_idempotents":
            idems = _idempotent_pool(field, n)
            for P in idems:
                for Q in idems:
                    if not (is_zero_matrix(field, mat_mul(field, P, Q))
                            and is_zero_matrix(field,
                                               mat_mul(field, Q, P))):
                        continue
                    yield fam, (P, Q) + tuple(ident
                                              for _ in range(k - 2))
        elif fam == "idempotent_nilpotent":
            nils = _nilpotent_pool(field, n)
            for P in _idempotent_pool(field, n):
                for N in nils:
                    yield fam, (P, N) + tuple(ident
                                              for _ in range(k - 2))
        elif fam == "repeated_tail":
            for m in range(1, k + 1):
                for X in pool:
                    for Y in pool:
                        tup = tuple(X if pos == m else Y
                                    for pos in range(1, k + 1))
                        yield fam, tup


def _check_witnesses(p1, p2, spec, strong, extras):
    field = spec.field
    checked = zeros = 0
    for fam, tup in structured_witness_tuples(p1, spec.n, extras):
        if len(tup) != p1.k:
            raise ValueError("candidate tuple has wrong length")
        checked += 1
        z1 = is_zero_tuple(p1, tup)
        if z1:
            zeros += 1
        if not z1 and not strong:
            continue
        images = tuple(spec.apply(X) for X in tup)
        z2 = is_zero_tuple(p2, images)
        if z1 and not z2:
            return Verdict(outcome="violated", witness=tup, images=images,
                           direction="forward", family=fam,
                           checked={"tuples": checked, "zeros": zeros},
                           strategy=_strategy_record("witnesses",
                                                     strong=strong))
        if strong and z2 and not z1:
            return Verdict(outcome="violated", witness=tup, images=images,
                           direction="backward", family=fam,
                           checked={"tuples": checked, "zeros": zeros},
                           strategy=_strategy_record("witnesses",
                                                     strong=strong))
    return Verdict(outcome="holds",
                   checked={"tuples": checked, "zeros": zeros},
                   strategy=_strategy_record("witnesses", strong=strong))


def _check_sample(p1, p2, spec, strong, sample_size, seed):
    field, n, k = spec.field, spec.n, p1.k
    if field.kind not in ("prime", "extension"):
        raise BudgetError("sampling needs a finite field")
    rng = random.Random(seed)
    space = DenseSpace(field, n)
    draws = [[rng.randrange(space.count) for _ in range(k)]
             for _ in range(sample_size)]
    columns = [np.array([d[v] for d in draws], dtype=np.int64)
               for v in range(k)]
    table = space.map_table(spec.apply)
    z1 = space.zero_mask(p1, columns)
    z2 = space.zero_mask(p2, [table[c] for c in columns])
    forward = z1 & ~z2
    combined = forward | ((z2 & ~z1) if strong else False)
    checked = {"tuples": sample_size, "zeros": int(z1.sum())}
    strat = _strategy_record("sample", size=sample_size, seed=seed,
                             strong=strong)
    if not combined.any():
        return Verdict(outcome="holds", checked=checked, strategy=strat)
    at = int(np.argmax(combined))
    witness = tuple(space.matrix_of(d) for d in draws[at])
    images = tuple(spec.apply(X) for X in witness)
    direction = "forward" if bool(forward[at]) else "backward"
    return Verdict(outcome="violated", witness=witness, images=images,
                   direction=direction, checked=checked, strategy=strat)


def check_commutativity_preservation(spec, strong=True, strategy="exhaustive",
                                     seed=0, jobs=1, cap=PAIR_SCAN_CAP):
    """Zero preservation for the commutator polynomial: commuting
    pairs must stay commuting, and strongly also the converse."""
    field = spec.field
    comm = MultilinearPoly(field, 2, {(1, 2): field.one,
                                      (2, 1): field.neg(field.one)})
    return check_maps_zeros(comm, comm, spec, strong=strong,
                            strategy=strategy, seed=seed, jobs=jobs,
                            cap=cap)


def check_zero_kernel(spec, p=None, strategy="exhaustive",
                      sample_size=SAMPLE_DEFAULT, seed=0,
                      cap=FULL_SPACE_CAP):
    """Only the zero matrix may map to zero.  p is the polynomial the
    map is claimed to preserve; it is recorded for context only."""
    field, n = spec.field, spec.n
    if field.kind not in ("prime", "extension"):
        raise BudgetError("zero-kernel scan needs a finite field")
    strat = _strategy_record(strategy,
                             polynomial=repr(p) if p is not None else None)
    if strategy == "exhaustive":
        total = field.order ** (n * n)
        if total > cap:
            raise BudgetError("matrix scan of %d exceeds cap %d"
                              % (total, cap))
        candidates = enumerate_matrices(field, n)
    elif strategy == "sample":
        rng = random.Random(seed)
        strat["size"], strat["seed"] = sample_size, seed
        candidates = ( tuple(tuple(field.random(rng) for _ in range(n))
                             for _ in range(n))
                       for _ in range(sample_size) )
    else:
        raise ValueError("unknown strategy %r" % strategy)
    checked = 0
    for X in candidates:
        checked += 1
        img = spec.apply(X)
        if is_zero_matrix(field, X) != is_zero_matrix(field, img):
            return Verdict(outcome="violated", witness=(X,), images=(img,),
                           direction="forward",
                           checked={"matrices": checked}, strategy=strat)
    return Verdict(outcome="holds", checked={"matrices": checked},
                   strategy=strat)


def scalar_idempotent_split(field, M):
    """Write M as c Q with c nonzero and Q a rank-one idempotent, or
    return None."""
    c = None
    M2 = mat_mul(field, M, M)
    for row, row2 in zip(M, M2):
        for a, b in zip(row, row2):
            if not field.is_zero(a):
                c = field.div(b, a)
                break
        if c is not None:
            break
    if c is None or field.is_zero(c):
        return None
    if M2 != mat_scale(field, c, M):
        return None
    Q = mat_scale(field, field.inv(c), M)
    if not (is_idempotent(field, Q) and is_rank_one(field, Q)):
        return None
    return c, Q


@dataclass(frozen=True)
class IdempotentReport:
    outcome: str              # "holds", "violated", "precondition_failed"
    precondition: Verdict     # strong zero-preservation check
    witness: tuple = None
    images: tuple = None
    checked: int = 0


def check_rank_one_idempotent_structure(spec, p, jobs=1,
                                        cap=PAIR_SCAN_CAP):
    """Each rank-one idempotent must map to a nonzero scalar multiple
    of a rank-one idempotent, injectively on the idempotent parts.
    The map must first strongly preserve the zeros of p."""
    field, n = spec.field, spec.n
    if field.kind not in ("prime", "extension"):
        raise BudgetError("idempotent scan needs a finite field")
    pre = check_maps_zeros(p, p, spec, strong=True, strategy="exhaustive",
                           jobs=jobs, cap=cap)
    if pre.outcome != "holds":
        return IdempotentReport(outcome="precondition_failed",
                                precondition=pre)
    seen = {}
    checked = 0
    for P in enumerate_rank_one_idempotents(field, n):
        checked += 1
        img = spec.apply(P)
        split = scalar_idempotent_split(field, img)
        if split is None:
            return IdempotentReport(outcome="violated", precondition=pre,
                                    witness=(P,), images=(img,),
                                    checked=checked)
        _, Q = split
        if Q in seen:
            return IdempotentReport(outcome="violated", precondition=pre,
                                    witness=(seen[Q], P), images=(img,),
                                    checked=checked)
        seen[Q] = P
    return IdempotentReport(outcome="holds", precondition=pre,
                            checked=checked)


def rescale_to_idempotent_preserving(spec, p, jobs=1, cap=FULL_SPACE_CAP):
    """Copy of the map whose values on rank-one idempotents are
    rescaled to be idempotent again; all other images unchanged.

    For a parametric map the gamma slot becomes a full table; a
    table-mode map is fixed up pointwise."""
    field, n = spec.field, spec.n
    if field.kind not in ("prime", "extension"):
        raise BudgetError("rescaling needs a finite field")
    report = check_rank_one_idempotent_structure(spec, p, jobs=jobs)
    if report.outcome != "holds":
        raise ValueError("map does not send rank-one idempotents to "
                         "scalar multiples of such")
    total = field.order ** (n * n)
    if total > cap:
        raise BudgetError("matrix scan of %d exceeds cap %d"
                          % (total, cap))
    idems = list(enumerate_rank_one_idempotents(field, n))
    if spec.kind == "table":
        table = dict(spec.table)
        for P in idems:
            _, Q = scalar_idempotent_split(field, table[P])
            table[P] = Q
        return PreserverSpec(field=field, n=n, kind="table", table=table)
    if spec.entry_tweak != "none" or spec.shift is not None:
        raise ValueError("gamma rescaling needs a tweak-free, "
                         "shift-free parametric map")
    gamma_table = {}
    for X in enumerate_matrices(field, n):
        old = spec._at(spec.gamma, X) if spec.gamma is not None \
            else field.one
        gamma_table[X] = old
    for P in idems:
        c, _ = scalar_idempotent_split(field, spec.apply(P))
        old = spec._at(spec.gamma, P) if spec.gamma is not None \
            else field.one
        gamma_table[P] = field.div(old, c)
    return PreserverSpec(field=field, n=n, kind="parametric",
                         similarity=spec.similarity, hom=spec.hom,
                         transpose=spec.transpose, gamma=gamma_table,
                         shift=None, entry_tweak="none")


@dataclass(frozen=True)
class ExampleReport:
    example: str
    description: str
    expected: str
    computed: str
    match: bool
    data: dict


EXAMPLE_IDS = ("add_a12", "trace_kernel", "jordan_theta", "real_omega",
               "gaussian_conjugation", "transpose_xy")


def _spectrum_avoids_zero_sums(field, A, seed=0):
    """True when no two eigenvalues of A (repeats allowed) sum to
    zero.  Equivalent to the characteristic polynomials of A and -A
    being coprime, so no splitting field is needed."""
    from .matrices import char_poly
    from .unipoly import poly_gcd, poly_degree
    cp = char_poly(field, A)
    flipped = tuple(c if i % 2 == 0 else field.neg(c)
                    for i, c in enumerate(cp))
    return poly_degree(poly_gcd(field, cp, flipped)) == 0


def reproduce_example(example_id, seed=0, jobs=1):
    """Re-run one of the six catalogued counterexample fixtures and
    compare against its expected outcome."""
    if example_id == "add_a12":
        return _example_add_a12(seed)
    if example_id == "trace_kernel":
        return _example_trace_kernel(seed, jobs)
    if example_id == "jordan_theta":
        return _example_jordan_theta(seed, jobs)
    if example_id == "real_omega":
        return _example_real_omega(seed)
    if example_id == "gaussian_conjugation":
        return _example_gaussian_conjugation(seed)
    if example_id == "transpose_xy":
        return _example_transpose_xy(seed, jobs)
    raise ValueError("unknown example id %r" % example_id)


def _poly_xy_plus_yx(field):
    return MultilinearPoly(field, 2, {(1, 2): field.one,
                                      (2, 1): field.one})


def _example_add_a12(seed):
    from .fields import GF
    field = GF(3)
    n = 3
    p = MultilinearPoly(field, 3, {(1, 2, 3): field.one,
                                   (2, 1, 3): field.neg(field.one)})
    spec = PreserverSpec(field=field, n=n,
                         entry_tweak="add_a12_identity")
    verdict = check_maps_zeros(p, p, spec, strategy="witnesses")
    want = (unit_matrix(field, n, 0, 0), unit_matrix(field, n, 0, 1),
            unit_matrix(field, n, 0, 1))
    match = verdict.outcome == "violated" and verdict.witness == want
    return ExampleReport(
        example="add_a12",
        description="adding the (1,2) entry times the identity is "
                    "linear and unital but breaks a polynomial zero",
        expected="violated with the unit-matrix triple "
                 "(E11, E12, E12)",
        computed="%s with witness %r" % (verdict.outcome,
                                         verdict.witness),
        match=match,
        data={"verdict": verdict, "field": field.descriptor(), "n": n,
              "polynomial": repr(p)})


def _example_trace_kernel(seed, jobs):
    from .fields import GF
    field = GF(3)
    n = 2
    spec = PreserverSpec(field=field, n=n,
                         entry_tweak="subtract_trace_over_n")
    comm = check_commutativity_preservation(spec, strong=True,
                                            strategy="exhaustive",
                                            jobs=jobs)
    kern = check_zero_kernel(spec)
    ident = identity_matrix(field, n)
    match = (comm.outcome == "holds" and kern.outcome == "violated"
             and kern.witness == (ident,))
    return ExampleReport(
        example="trace_kernel",
        description="removing the trace part preserves commutativity "
                    "both ways yet sends the identity to zero",
        expected="commutativity preserved strongly; zero kernel "
                 "violated by the identity matrix",
        computed="commutativity %s; zero kernel %s at %r"
                 % (comm.outcome, kern.outcome, kern.witness),
        match=match,
        data={"commutativity": comm, "zero_kernel": kern,
              "field": field.descriptor(), "n": n})


def _example_jordan_theta(seed, jobs):
    from .fields import GF
    from .operators import ElementaryOperator
    from .matrices import rank as mat_rank
    field = GF(7)
    n = 2
    A = ((field.from_int(1), field.zero),
         (field.zero, field.from_int(2)))
    p = _poly_xy_plus_yx(field)
    a_free = _spectrum_avoids_zero_sums(field, A, seed)
    op = ElementaryOperator(field, A, A, (field.one, field.one))
    omega_dim = n * n - mat_rank(field, op.kron_matrix())
    space = DenseSpace(field, n)
    theta = np.zeros(space.count, dtype=bool)
    members = []
    for code in range(space.count):
        X = space.matrix_of(code)
        if _spectrum_avoids_zero_sums(field, X, seed):
            theta[code] = True
            members.append(code)
    zero_pairs = 0
    for start, columns in space.tuple_columns(2):
        mask = space.zero_mask(p, columns)
        mask &= theta[columns[0]] & theta[columns[1]]
        zero_pairs += int(mask.sum())
    rng = random.Random(seed)
    perm = members[:]
    rng.shuffle(perm)
    off_theta = [c for c in range(space.count) if not theta[c]]
    table = {}
    for src, dst in zip(members, perm):
        table[space.matrix_of(src)] = space.matrix_of(dst)
    for c in off_theta:
        table[space.matrix_of(c)] = space.matrix_of(c)
    spec = PreserverSpec(field=field, n=n, kind="table", table=table)
    stray = 0
    for src in members:
        img = spec.apply(space.matrix_of(src))
        if not theta[space.code_of(img)]:
            stray += 1
    match = (a_free and omega_dim == 0 and zero_pairs == 0
             and stray == 0)
    return ExampleReport(
        example="jordan_theta",
        description="on matrices whose eigenvalue sums avoid zero the "
                    "polynomial has no zero pairs, so any permutation "
                    "of that set preserves them vacuously",
        expected="diag(1,2) qualifies, its annihilator is zero, and "
                 "the qualifying set contains no zero pairs",
        computed="qualifies=%s annihilator_dim=%d zero_pairs=%d "
                 "theta_size=%d" % (a_free, omega_dim, zero_pairs,
                                    len(members)),
        match=match,
        data={"theta_size": len(members), "zero_pairs": zero_pairs,
              "annihilator_dim": omega_dim, "field": field.descriptor(),
              "n": n, "seed": seed})


def _example_real_omega(seed):
    from .fields import QQ
    from .classify import classify_structural, classify_direct
    field = QQ()
    n = 3
    A = ((field.from_int(0), field.from_int(-3), field.zero),
         (field.from_int(1), field.from_int(0), field.zero),
         (field.zero, field.zero, field.one))
    p = _poly_xy_plus_yx(field)
    from .multipoly import normalize
    npz = normalize(p)
    st = classify_structural(field, A, npz, seed=seed)
    dr = classify_direct(field, A, npz, seed=seed)
    grid_ok = True
    vals = [field.from_int(v) for v in (-2, -1, 0, 1, 2)]
    for c in vals:
        for d in vals:
            if field.is_zero(c) and field.is_zero(d):
                continue
            X = mat_add(field,
                        mat_scale(field, c, st.basis[1]),
                        mat_scale(field, d, st.basis[0]))
            sq = mat_mul(field, X, X)
            if is_zero_matrix(field, sq):
                grid_ok = False
    match = (st.case == "Other" and st.dim == 2
             and dr.case == "Other" and dr.dim == 2 and grid_ok)
    return ExampleReport(
        example="real_omega",
        description="over the rationals a rotation block keeps the "
                    "annihilator two-dimensional with no square-zero "
                    "members, outside the finite-field trichotomy",
        expected="classification Other with dimension 2 and no "
                 "square-zero member on the sample grid",
        computed="structural=%s/%d direct=%s/%d grid_square_zero_free=%s"
                 % (st.case, st.dim, dr.case, dr.dim, grid_ok),
        match=match,
        data={"structural": st, "direct": dr,
              "field": field.descriptor(), "n": n})


def _example_gaussian_conjugation(seed):
    from .fields import QI, CONJUGATION
    field = QI()
    n = 2
    one, i = field.one, field.i
    p = MultilinearPoly(field, 2, {(1, 2): one,
                                   (2, 1): field.neg(i)})
    A = ((one, one), (field.neg(one), one))
    B = ((one, i), (i, field.neg(one)))
    spec = PreserverSpec(field=field, n=n, hom=CONJUGATION)
    verdict = check_maps_zeros(p, p, spec, strategy="witnesses",
                               extras=[(A, B)])
    match = (verdict.outcome == "violated" and verdict.witness == (A, B)
             and verdict.family == "injected")
    return ExampleReport(
        example="gaussian_conjugation",
        description="entrywise complex conjugation moves a zero pair "
                    "of a polynomial with an imaginary coefficient "
                    "off the zero set",
        expected="violated at the displayed pair (A, B)",
        computed="%s at %r" % (verdict.outcome, verdict.witness),
        match=match,
        data={"verdict": verdict, "field": field.descriptor(), "n": n,
              "polynomial": repr(p)})


def _example_transpose_xy(seed, jobs):
    from .fields import GF
    field = GF(2)
    n = 2
    p = MultilinearPoly(field, 2, {(1, 2): field.one})
    spec = PreserverSpec(field=field, n=n, transpose=True)
    verdict = check_maps_zeros(p, p, spec, strategy="exhaustive",
                               jobs=jobs)
    want = (unit_matrix(field, n, 0, 0), unit_matrix(field, n, 1, 0))
    match = verdict.outcome == "violated" and verdict.witness == want
    return ExampleReport(
        example="transpose_xy",
        description="transposition reverses products, so the single "
                    "word xy loses a zero pair of unit matrices",
        expected="violated with the pair (E11, E21)",
        computed="%s with witness %r" % (verdict.outcome,
                                         verdict.witness),
        match=match,
        data={"verdict": verdict, "field": field.descriptor(), "n": n,
              "polynomial": repr(p)})
