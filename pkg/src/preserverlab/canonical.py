"""Companion matrices, primary rational forms, and Jordan forms over
splitting fields, all in exact arithmetic.

The rational form groups companion blocks of prime-power factors of
the characteristic polynomial in a fixed canonical order (irreducible
factor by coefficient order, exponents descending), so equal forms
mean similar matrices and the form of a form is itself.

The block structure is read off the kernel dimension profile of
f(A)^j per irreducible factor f; the similarity transform is then a
solution of A P = P R picked deterministically.  The Jordan route
lifts to the splitting field of the characteristic polynomial and
builds kernel chains of A - lambda I, one grouped block per distinct
eigenvalue.
"""

from dataclasses import dataclass

from . import unipoly
from .matrices import (
    char_poly, identity_matrix, inverse, is_invertible, kron, mat_add,
    mat_mul, mat_map, mat_scale, mat_sub, mat_vec, null_space, rank,
    row_space_basis, transpose, unvec, zero_matrix,
)

import random


def companion(field, f):
    """Companion matrix: ones on the subdiagonal, the negated
    coefficients of f down the last column.  Degree one gives the 1x1
    matrix (-a0)."""
    f = unipoly.poly_trim(field, f)
    d = unipoly.poly_degree(f)
    if d < 1:
        raise ValueError("companion matrix needs degree >= 1")
    if f[-1] != field.one:
        raise ValueError("companion matrix needs a monic polynomial")
    C = [[field.zero] * d for _ in range(d)]
    for i in range(1, d):
        C[i][i - 1] = field.one
    for i in range(d):
        C[i][d - 1] = field.neg(f[i])
    return tuple(tuple(r) for r in C)


def block_diag(field, blocks):
    n = sum(len(b) for b in blocks)
    out = [[field.zero] * n for _ in range(n)]
    at = 0
    for b in blocks:
        m = len(b)
        for i in range(m):
            for j in range(m):
                out[at + i][at + j] = b[i][j]
        at += m
    return tuple(tuple(r) for r in out)


def poly_eval_matrix(field, f, A):
    """f(A) by Horner."""
    n = len(A)
    acc = zero_matrix(field, n)
    for c in reversed(f):
        acc = mat_mul(field, acc, A)
        acc = mat_add(field, acc, mat_scale(field, c, identity_matrix(field, n)))
    return acc


@dataclass(frozen=True)
class RationalForm:
    form: tuple
    transform: tuple          # invertible P with P^-1 A P = form
    blocks: tuple             # ((irreducible factor, exponent), ...)


def _similarity_transform(field, A, R, seed):
    """Invertible P with A P = P R, from the solution space of the
    Sylvester system; basis vectors are tried first, then seeded
    random combinations."""
    n = len(A)
    K = mat_sub(field,
                kron(field, identity_matrix(field, n), A),
                kron(field, transpose(R), identity_matrix(field, n)))
    basis = null_space(field, K)
    for v in basis:
        P = unvec(v, n)
        if is_invertible(field, P):
            return P
    rng = random.Random(seed)
    for _ in range(4000):
        v = [field.zero] * (n * n)
        for b in basis:
            c = field.random(rng)
            if field.is_zero(c):
                continue
            v = [field.add(x, field.mul(c, y)) for x, y in zip(v, b)]
        P = unvec(tuple(v), n)
        if is_invertible(field, P):
            return P
    raise AssertionError("no invertible similarity found; "
                         "the target form must be wrong")


def primary_rational_form(field, A, seed=0):
    """Block-diagonal similarity form with one companion block per
    prime-power elementary divisor of A."""
    n = len(A)
    cp = char_poly(field, A)
    factors = unipoly.factor_poly(field, cp, seed)
    blocks = []
    for f, mult in factors:
        d = unipoly.poly_degree(f)
        # kernel profile of f(A)^j gives the exponent multiset
        fA = poly_eval_matrix(field, f, A)
        power = identity_matrix(field, n)
        dims = [0]
        for _ in range(mult):
            power = mat_mul(field, power, fA)
            dims.append(n - rank(field, power))
            if dims[-1] == mult * d:
                break
        ge = [(dims[j] - dims[j - 1]) // d for j in range(1, len(dims))]
        for e in range(len(ge), 0, -1):
            exactly = ge[e - 1] - (ge[e] if e < len(ge) else 0)
            blocks.extend([(f, e)] * exactly)
    blocks.sort(key=lambda fe: (unipoly.poly_key(field, fe[0]), -fe[1]))
    mats = []
    for f, e in blocks:
        fe = unipoly.poly_constant(field, field.one)
        for _ in range(e):
            fe = unipoly.poly_mul(field, fe, f)
        mats.append(companion(field, fe))
    R = block_diag(field, mats)
    P = _similarity_transform(field, A, R, seed)
    assert mat_mul(field, A, P) == mat_mul(field, P, R)
    return RationalForm(form=R, transform=P, blocks=tuple(blocks))


def has_nonzero_nilpotent_block(field, A, seed=0):
    """True when the rational form has a companion block C(x^e) with
    e >= 2, a nonzero nilpotent block."""
    rf = primary_rational_form(field, A, seed)
    x = (field.zero, field.one)
    return any(f == x and e >= 2 for f, e in rf.blocks)


@dataclass(frozen=True)
class SplitJordanData:
    field: object             # splitting field of the char poly
    embed: object             # embedding of the base field
    eigenvalues: tuple        # distinct, in element index order
    multiplicities: tuple     # algebraic multiplicities, same order
    cell_sizes: tuple         # tuple of descending cell tuples per value
    form: tuple               # one grouped block per eigenvalue
    transform: tuple          # S with S^-1 (A lifted) S = form


def _jordan_chains(field, N, multiplicity):
    """Chain basis for a nilpotent-on-its-generalized-eigenspace map.

    N is n x n with ker N^j growing to the given multiplicity.  Picks
    chain tops greedily from canonical kernel bases, longest chains
    first, first-in-order vectors first."""
    n = len(N)
    powers = [identity_matrix(field, n)]
    kernels = [[]]
    while len(kernels[-1]) < multiplicity and len(kernels) <= n:
        powers.append(mat_mul(field, powers[-1], N))
        kernels.append(null_space(field, powers[-1]))
    height = len(kernels) - 1
    chains = []
    for j in range(height, 0, -1):
        # members of longer chains already sitting at height j
        carried = [c[len(c) - j] for c in chains]
        modulus = list(kernels[j - 1]) + carried
        new_tops = []
        for v in kernels[j]:
            cur = row_space_basis(field, modulus + new_tops)
            if len(row_space_basis(field, modulus + new_tops + [v])) \
                    > len(cur):
                new_tops.append(v)
        for v in new_tops:
            chain = [v]
            for _ in range(j - 1):
                chain.append(mat_vec(field, N, chain[-1]))
            chains.append(chain)
    chains.sort(key=len, reverse=True)
    return chains


def jordan_over_splitting_field(field, A, seed=0):
    """Jordan block-diagonal form over the splitting field of the
    characteristic polynomial, grouped per distinct eigenvalue."""
    n = len(A)
    cp = char_poly(field, A)
    big, embed = unipoly.splitting_field(field, cp, seed)
    lifted = mat_map(A, embed)
    cp_big = char_poly(big, lifted)
    roots = unipoly.poly_roots(big, cp_big, seed)
    assert len(roots) == n, "characteristic polynomial must split"
    distinct = []
    for r in roots:
        if r not in distinct:
            distinct.append(r)
    if big.kind in ("prime", "extension"):
        distinct.sort(key=big.index)
    else:
        distinct.sort(key=lambda c: unipoly.poly_key(big, (c,)))
    eigenvalues = tuple(distinct)
    multiplicities = tuple(roots.count(lam) for lam in eigenvalues)
    columns = []
    cell_sizes = []
    for lam, mult in zip(eigenvalues, multiplicities):
        N = mat_sub(big, lifted,
                    mat_scale(big, lam, identity_matrix(big, n)))
        chains = _jordan_chains(big, N, mult)
        cell_sizes.append(tuple(len(c) for c in chains))
        for chain in chains:
            columns.extend(reversed(chain))
    S = tuple(zip(*columns))
    assert is_invertible(big, S)
    form = mat_mul(big, inverse(big, S), mat_mul(big, lifted, S))
    # shape check: block diagonal, eigenvalues down the diagonal
    at = 0
    for lam, mult in zip(eigenvalues, multiplicities):
        for i in range(mult):
            assert form[at + i][at + i] == lam
        at += mult
    return SplitJordanData(field=big, embed=embed,
                           eigenvalues=eigenvalues,
                           multiplicities=multiplicities,
                           cell_sizes=tuple(cell_sizes),
                           form=form, transform=S)
