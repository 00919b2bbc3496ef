"""Homogeneous multilinear polynomials in k noncommuting variables.

A polynomial is a field-coefficient combination of monomials, each
monomial being a product of all k variables exactly once.  A monomial
is stored as the tuple of one-based variable numbers in product
order, so the tuple (2, 1, 3) stands for the word x2 x1 x3, and

    evaluate(p, (A1, ..., Ak)) = sum of coeff * A_word over the terms.

Substituting a single matrix X into variable v and a fixed matrix A
into every other variable turns p into a linear operator in X whose
coefficients are read off by position:

    slot_coeffs(p, v)[i] = sum of the coefficients of the terms that
    place variable v at position i+1,

so p(X at v, A elsewhere) = sum_i slot_coeffs[i] A^i X A^(k-1-i).

normalize puts a nonzero polynomial into the shape this package's
annihilator machinery expects: the variable with the first nonzero
leading-coefficient sum is swapped into slot one and the polynomial
is rescaled so that slot1_coeffs starts with one.
"""

import itertools
from dataclasses import dataclass

from .fields import apply_hom
from .matrices import mat_mul, mat_scale, mat_add, zero_matrix, \
    is_zero_matrix
from .unipoly import BudgetError


class MultilinearPoly:
    """Immutable term map: permutation tuple -> nonzero coefficient."""

    __slots__ = ("field", "k", "terms")

    def __init__(self, field, k, terms):
        clean = {}
        expected = frozenset(range(1, k + 1))
        for perm, coeff in terms.items():
            perm = tuple(perm)
            if frozenset(perm) != expected or len(perm) != k:
                raise ValueError("not a permutation of 1..%d: %r" % (k, perm))
            if field.is_zero(coeff):
                continue
            if perm in clean:
                raise ValueError("duplicate term %r" % (perm,))
            clean[perm] = coeff
        self.field = field
        self.k = k
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, MultilinearPoly)
                and self.field is other.field
                and self.k == other.k
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        names = "xyzuvw"
        bits = []
        for perm in sorted(self.terms):
            word = "".join(names[v - 1] if self.k <= 6 else "x%d" % v
                           for v in perm)
            bits.append("%s*%s" % (self.field.to_str(self.terms[perm]), word))
        return "MultilinearPoly(%s)" % " + ".join(bits) if bits \
            else "MultilinearPoly(0)"


def poly_from_terms(field, k, term_list):
    """term_list holds (perm, coeff) pairs; integer coeffs are lifted."""
    terms = {}
    for perm, coeff in term_list:
        if isinstance(coeff, int):
            coeff = field.from_int(coeff)
        perm = tuple(perm)
        if perm in terms:
            terms[perm] = field.add(terms[perm], coeff)
        else:
            terms[perm] = coeff
    return MultilinearPoly(field, k, terms)


def scale_poly(p, c):
    field = p.field
    return MultilinearPoly(field, p.k,
                           {perm: field.mul(c, a)
                            for perm, a in p.terms.items()})


def swap_variables(p, a, b):
    """Relabel variable a as b and b as a in every term."""
    if a == b:
        return p

    def sw(v):
        return b if v == a else a if v == b else v

    return MultilinearPoly(p.field, p.k,
                           {tuple(sw(v) for v in perm): c
                            for perm, c in p.terms.items()})


def apply_hom_to_poly(p, hom):
    field = p.field
    return MultilinearPoly(field, p.k,
                           {perm: apply_hom(field, hom, c)
                            for perm, c in p.terms.items()})


def evaluate(p, mats):
    if len(mats) != p.k:
        raise ValueError("expected %d matrices, got %d" % (p.k, len(mats)))
    field = p.field
    n = len(mats[0])
    acc = zero_matrix(field, n)
    for perm, coeff in p.terms.items():
        prod = mats[perm[0] - 1]
        for v in perm[1:]:
            prod = mat_mul(field, prod, mats[v - 1])
        acc = mat_add(field, acc, mat_scale(field, coeff, prod))
    return acc


def is_zero_tuple(p, mats):
    return is_zero_matrix(p.field, evaluate(p, mats))


def coeff_sum(p):
    field = p.field
    acc = field.zero
    for c in p.terms.values():
        acc = field.add(acc, c)
    return acc


def coefficient_class(p):
    """"generic" when the coefficients sum to a nonzero value,
    "derogatory" when they cancel."""
    return "derogatory" if p.field.is_zero(coeff_sum(p)) else "generic"


def slot_coeffs(p, v):
    """Position profile of variable v: entry i is the coefficient sum
    of the terms placing v at position i+1."""
    field = p.field
    out = [field.zero] * p.k
    for perm, c in p.terms.items():
        pos = perm.index(v)
        out[pos] = field.add(out[pos], c)
    return tuple(out)


def leading_sums(p):
    """Entry v-1 is the coefficient sum of the terms whose word starts
    with variable v."""
    field = p.field
    out = [field.zero] * p.k
    for perm, c in p.terms.items():
        out[perm[0] - 1] = field.add(out[perm[0] - 1], c)
    return tuple(out)


def trailing_sums(p):
    field = p.field
    out = [field.zero] * p.k
    for perm, c in p.terms.items():
        out[perm[-1] - 1] = field.add(out[perm[-1] - 1], c)
    return tuple(out)


@dataclass(frozen=True)
class NormalizedPoly:
    """A nonzero polynomial rewritten so slot one carries weight one.

    base            the rewritten polynomial
    promoted_var    variable of the original polynomial now named x1
    scale           coefficient divided out of every term
    slot1_coeffs    position profile of x1; starts with one
    tail_sum        sum of slot1_coeffs after the first entry
    pivot_var       first variable with a nonzero trailing sum
    pivot_coeffs    position profile of the pivot variable
    pivot_lead      last entry of pivot_coeffs, nonzero
    pivot_unit_coeffs   pivot_coeffs divided by pivot_lead
    """

    base: object
    promoted_var: int
    scale: object
    slot1_coeffs: tuple
    tail_sum: object
    pivot_var: int
    pivot_coeffs: tuple
    pivot_lead: object
    pivot_unit_coeffs: tuple

    @property
    def field(self):
        return self.base.field

    @property
    def k(self):
        return self.base.k


def normalize(p):
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    field = p.field
    lead = leading_sums(p)
    promoted = next((i + 1 for i in range(p.k)
                     if not field.is_zero(lead[i])), None)
    if promoted is None:
        raise ValueError("no variable has a nonzero leading "
                         "coefficient sum; nothing can be promoted")
    scale = lead[promoted - 1]
    base = swap_variables(p, 1, promoted)
    base = scale_poly(base, field.inv(scale))
    slot1 = slot_coeffs(base, 1)
    assert slot1[0] == field.one
    tail = field.zero
    for c in slot1[1:]:
        tail = field.add(tail, c)
    trail = trailing_sums(base)
    pivot = next((j + 1 for j in range(p.k)
                  if not field.is_zero(trail[j])), None)
    if pivot is None:
        raise ValueError("every trailing coefficient sum vanishes; "
                         "no pivot variable exists")
    pivot_coeffs = slot_coeffs(base, pivot)
    pivot_lead = pivot_coeffs[-1]
    assert pivot_lead == trail[pivot - 1] and not field.is_zero(pivot_lead)
    inv = field.inv(pivot_lead)
    unit = tuple(field.mul(inv, c) for c in pivot_coeffs)
    return NormalizedPoly(base=base, promoted_var=promoted, scale=scale,
                          slot1_coeffs=slot1, tail_sum=tail,
                          pivot_var=pivot, pivot_coeffs=pivot_coeffs,
                          pivot_lead=pivot_lead, pivot_unit_coeffs=unit)


def incidence_matrix(p):
    """k x k matrix whose (i, j) entry sums the coefficients of the
    terms placing variable j at position i.  Returns the matrix and
    whether it is invertible."""
    from .matrices import is_invertible
    field = p.field
    M = [[field.zero] * p.k for _ in range(p.k)]
    for perm, c in p.terms.items():
        for pos, v in enumerate(perm):
            M[pos][v - 1] = field.add(M[pos][v - 1], c)
    M = tuple(tuple(r) for r in M)
    return M, is_invertible(field, M)


def anchor_pair(np):
    """For a normalized polynomial, the first slot j >= 2 whose
    (x1 first, xj second) coefficient sum is nonzero, with that sum.
    Exists because slot1_coeffs[0] = 1."""
    field = np.field
    base = np.base
    for j in range(2, np.k + 1):
        acc = field.zero
        for perm, c in base.terms.items():
            if perm[0] == 1 and perm[1] == j:
                acc = field.add(acc, c)
        if not field.is_zero(acc):
            return j, acc
    raise AssertionError("normalized polynomial lost its leading weight")


def anchor_reverse_coeff(np, j, tau):
    """Coefficient sum of the (x1 last, xj second to last) terms,
    divided by tau."""
    field = np.field
    acc = field.zero
    for perm, c in np.base.terms.items():
        if perm[-1] == 1 and perm[-2] == j:
            acc = field.add(acc, c)
    return field.div(acc, tau)


@dataclass(frozen=True)
class AdmissibleInfo:
    admissible: bool
    reason: str
    moved_index: int          # first position all non-identity terms move
    descent: tuple            # (w, u, v): xw at position v, x(w+1) at u < v


def validate_admissible(p):
    """Check the shape needed by the commutation and scalar-slot
    witness families: identity term with coefficient one, remaining
    coefficients summing to one after sign flip, a common first moved
    index below k, and a common inverted adjacent pair.  The smallest
    qualifying indices are reported."""
    field = p.field
    k = p.k
    ident = tuple(range(1, k + 1))
    if ident not in p.terms or p.terms[ident] != field.one:
        return AdmissibleInfo(False, "identity term must have "
                              "coefficient one", 0, ())
    rest = {perm: c for perm, c in p.terms.items() if perm != ident}
    if not rest:
        return AdmissibleInfo(False, "no non-identity terms", 0, ())
    total = field.zero
    for c in rest.values():
        total = field.add(total, c)
    if total != field.neg(field.one):
        return AdmissibleInfo(False, "non-identity coefficients must "
                              "sum to minus one", 0, ())
    moved = set()
    for perm in rest:
        moved.add(next(i + 1 for i in range(k) if perm[i] != i + 1))
    if len(moved) != 1 or moved.pop() >= k:
        return AdmissibleInfo(False, "terms disagree on the first moved "
                              "position or move only the last", 0, ())
    t = next(i + 1 for i in range(k)
             if any(perm[i] != i + 1 for perm in rest))
    descent = ()
    for w in range(1, k):
        vs = {perm.index(w) + 1 for perm in rest}
        us = {perm.index(w + 1) + 1 for perm in rest}
        if len(vs) == 1 and len(us) == 1:
            v, u = vs.pop(), us.pop()
            if u < v:
                descent = (w, u, v)
                break
    if not descent:
        return AdmissibleInfo(False, "no common inverted adjacent "
                              "variable pair", t, ())
    return AdmissibleInfo(True, "", t, descent)


def standard_polynomial(field, m):
    """Alternating sum over all orderings of m variables."""
    terms = {}
    for perm in itertools.permutations(range(1, m + 1)):
        inversions = sum(1 for a in range(m) for b in range(a + 1, m)
                         if perm[a] > perm[b])
        c = field.one if inversions % 2 == 0 else field.neg(field.one)
        terms[perm] = c
    return MultilinearPoly(field, m, terms)


IDENTITY_SCAN_CAP = 2 ** 24


def is_identity_on(p, n, cap=None):
    """Exhaustively test whether p vanishes on all k-tuples of n x n
    matrices.  Only for finite fields within the scan budget."""
    field = p.field
    if field.kind not in ("prime", "extension"):
        raise BudgetError("exhaustive identity scan needs a finite field")
    cap = IDENTITY_SCAN_CAP if cap is None else cap
    total = field.order ** (n * n * p.k)
    if total > cap:
        raise BudgetError("identity scan of %d tuples exceeds cap %d"
                          % (total, cap))
    from .dense import DenseSpace
    space = DenseSpace(field, n)
    return space.poly_identity(p)


def all_matrix_tuples(field, n, k):
    """Iterator over all k-tuples, row-major lex per matrix, leftmost
    matrix slowest.  Mirrors the dense scan order."""
    from .matrices import enumerate_matrices
    mats = list(enumerate_matrices(field, n))
    return itertools.product(mats, repeat=k)
