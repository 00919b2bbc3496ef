"""Companion matrices, the primary rational form, and Jordan form over
a splitting field."""

import random

from hypothesis import given, settings, strategies as st

from preserverlab.canonical import (
    companion,
    has_nonzero_nilpotent_block,
    jordan_over_splitting_field,
    primary_rational_form,
)
from preserverlab.fields import GF
from preserverlab.matrices import (
    char_poly,
    identity_matrix,
    inverse,
    is_invertible,
    mat_from_ints,
    mat_map,
    mat_mul,
)
from preserverlab.unipoly import (
    factor_poly,
    poly_degree,
    poly_monic,
    poly_mul,
    poly_trim,
)

F3 = GF(3)
F7 = GF(7)


def rand_mat(field, n, rng):
    return tuple(tuple(field.random(rng) for _ in range(n))
                 for _ in range(n))


def monic_polys(field, max_deg):
    def build(ints):
        body = tuple(field.from_int(c) for c in ints)
        return body + (field.one,)
    return st.lists(st.integers(0, field.order - 1), min_size=1,
                    max_size=max_deg).map(build)


def test_companion_pinned():
    # x^2 + 2x + 3 over GF(7)
    C = companion(F7, (F7.from_int(3), F7.from_int(2), F7.one))
    assert C == mat_from_ints(F7, ((0, 4), (1, 5)))
    assert char_poly(F7, C) == (F7.from_int(3), F7.from_int(2), F7.one)


@given(monic_polys(F7, 6))
@settings(max_examples=60)
def test_companion_char_poly_round_trip(f):
    assert char_poly(F7, companion(F7, f)) == f


def similar(field, A, rf):
    P = rf.transform
    return mat_mul(field, mat_mul(field, inverse(field, P), A), P) == rf.form


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_rational_form_invariants(seed):
    """The transform conjugates A onto the form, the listed factors are
    irreducible, and their powers multiply back to the char poly."""
    rng = random.Random(seed)
    A = rand_mat(F3, 4, rng)
    rf = primary_rational_form(F3, A)
    assert is_invertible(F3, rf.transform)
    assert similar(F3, A, rf)
    prod = (F3.one,)
    for f, e in rf.blocks:
        assert len(factor_poly(F3, f)) == 1          # irreducible
        for _ in range(e):
            prod = poly_mul(F3, prod, f)
    assert poly_trim(F3, prod) == char_poly(F3, A)


def test_rational_form_pinned_diagonal():
    A = mat_from_ints(F3, ((2, 0), (0, 1)))
    rf = primary_rational_form(F3, A)
    assert rf.form == A
    # block order follows the canonical factor order: x + 1 before x + 2
    assert rf.blocks == (((F3.one, F3.one), 1),
                         ((F3.from_int(2), F3.one), 1))


@given(st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_rational_form_is_a_similarity_invariant(seed):
    rng = random.Random(seed)
    A = rand_mat(F3, 3, rng)
    while True:
        S = rand_mat(F3, 3, rng)
        if is_invertible(F3, S):
            break
    B = mat_mul(F3, mat_mul(F3, S, A), inverse(F3, S))
    ra = primary_rational_form(F3, A)
    rb = primary_rational_form(F3, B)
    assert ra.form == rb.form
    assert ra.blocks == rb.blocks


def test_jordan_pinned_irreducible_quadratic():
    """x^2 + 1 over GF(3) splits in GF(9) as (x - i)(x + i) with the
    adjoined root i; the form is diag(i, -i)."""
    B = mat_from_ints(F3, ((0, 2), (1, 0)))
    jd = jordan_over_splitting_field(F3, B)
    assert jd.field.order == 9
    i = jd.field.elem_at(3)
    assert jd.eigenvalues == (i, jd.field.neg(i))
    assert jd.multiplicities == (1, 1)
    assert jd.cell_sizes == ((1,), (1,))
    assert jd.form == ((i, jd.field.zero),
                       (jd.field.zero, jd.field.neg(i)))


def test_jordan_pinned_nilpotent():
    N = mat_from_ints(F3, ((0, 1), (0, 0)))
    jd = jordan_over_splitting_field(F3, N)
    assert jd.field is F3                # no extension needed
    assert jd.eigenvalues == (F3.zero,)
    assert jd.cell_sizes == ((2,),)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_jordan_invariants(seed):
    """Conjugation onto the form holds in the splitting field; cell
    sizes are descending and account for each multiplicity."""
    rng = random.Random(seed)
    A = rand_mat(F3, 3, rng)
    jd = jordan_over_splitting_field(F3, A)
    big = jd.field
    lifted = mat_map(A, jd.embed)
    S = jd.transform
    assert mat_mul(big, mat_mul(big, inverse(big, S), lifted), S) == jd.form
    assert sum(jd.multiplicities) == 3
    assert len(set(jd.eigenvalues)) == len(jd.eigenvalues)
    for cells, mult in zip(jd.cell_sizes, jd.multiplicities):
        assert list(cells) == sorted(cells, reverse=True)
        assert sum(cells) == mult
    # eigenvalues really annihilate: det(lifted - lam I) = 0
    cp = char_poly(big, lifted)
    from preserverlab.unipoly import poly_eval
    for lam in jd.eigenvalues:
        assert big.is_zero(poly_eval(big, cp, lam))


def test_nilpotent_block_detector():
    assert has_nonzero_nilpotent_block(
        F3, mat_from_ints(F3, ((0, 1), (0, 0))))
    assert not has_nonzero_nilpotent_block(
        F3, mat_from_ints(F3, ((2, 0), (0, 1))))
    assert not has_nonzero_nilpotent_block(F3, identity_matrix(F3, 2))
