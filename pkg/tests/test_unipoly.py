"""Dense univariate polynomial arithmetic and factorization."""

import pytest
from hypothesis import given, settings, strategies as st

from preserverlab.fields import GF, QQ
from preserverlab.unipoly import (
    BudgetError,
    factor_poly,
    poly_add,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_from_ints,
    poly_gcd,
    poly_is_zero,
    poly_monic,
    poly_mul,
    poly_roots,
    poly_trim,
    splits_into_linears,
    splitting_field,
)

F5 = GF(5)
F3 = GF(3)

coeff_lists = st.lists(st.integers(0, 4), min_size=0, max_size=6)


def fpoly(ints):
    return poly_from_ints(F5, ints)


def test_trim_drops_leading_zeros():
    assert poly_trim(F5, (1, 2, 0, 0)) == (1, 2)
    assert poly_trim(F5, (0, 0)) == ()
    # reduction happens on entry, not in trim
    assert poly_is_zero(poly_from_ints(F5, (5, 10)))


def test_degree_of_zero_is_negative():
    assert poly_degree(()) == -1
    assert poly_degree((3,)) == 0
    assert poly_degree((0, 1)) == 1


@given(coeff_lists, coeff_lists)
def test_mul_commutes(a, b):
    f, g = fpoly(a), fpoly(b)
    assert poly_mul(F5, f, g) == poly_mul(F5, g, f)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_mul_distributes_over_add(a, b, c):
    f, g, h = fpoly(a), fpoly(b), fpoly(c)
    left = poly_mul(F5, f, poly_add(F5, g, h))
    right = poly_add(F5, poly_mul(F5, f, g), poly_mul(F5, f, h))
    assert left == right


@given(coeff_lists, coeff_lists)
def test_divmod_reconstructs(a, b):
    """f == q*g + r with deg r < deg g whenever g is nonzero."""
    f, g = fpoly(a), fpoly(b)
    if poly_is_zero(g):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(F5, f, g)
        return
    q, r = poly_divmod(F5, f, g)
    assert poly_degree(r) < poly_degree(g)
    assert poly_add(F5, poly_mul(F5, q, g), r) == f


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=40)
def test_gcd_divides_common_multiple(a, b, c):
    f, g, h = fpoly(a), fpoly(b), fpoly(c)
    if poly_is_zero(h):
        return
    d = poly_gcd(F5, poly_mul(F5, f, h), poly_mul(F5, g, h))
    if poly_is_zero(d):
        return
    _, r = poly_divmod(F5, d, poly_monic(F5, h))
    assert poly_is_zero(r)


@given(coeff_lists, st.integers(0, 4))
def test_eval_is_ring_hom_in_the_argument(a, x0):
    f = fpoly(a)
    g = fpoly([1, 1])
    x = F5.from_int(x0)
    assert poly_eval(F5, poly_mul(F5, f, g), x) \
        == F5.mul(poly_eval(F5, f, x), poly_eval(F5, g, x))


def test_factor_poly_pinned_split():
    # x^2 + 1 = (x + 2)(x + 3) over GF(5)
    factors = factor_poly(F5, (1, 0, 1))
    assert factors == [((2, 1), 1), ((3, 1), 1)]
    # roots come out in factor order: -2 = 3 first, then -3 = 2
    assert poly_roots(F5, (1, 0, 1)) == [3, 2]


def test_factor_poly_irreducible_stays_whole():
    # x^2 + 1 has no root mod 3
    factors = factor_poly(F3, (1, 0, 1))
    assert factors == [((1, 0, 1), 1)]
    assert not splits_into_linears(F3, (1, 0, 1))


@given(st.lists(st.integers(0, 2), min_size=2, max_size=6))
@settings(max_examples=60)
def test_factor_poly_product_reconstructs(ints):
    f = poly_trim(F3, tuple(F3.from_int(c) for c in ints))
    if poly_degree(f) < 1:
        return
    monic = poly_monic(F3, f)
    prod = (F3.one,)
    for g, m in factor_poly(F3, f):
        for _ in range(m):
            prod = poly_mul(F3, prod, g)
    assert prod == monic


@given(st.lists(st.integers(0, 2), min_size=2, max_size=5))
@settings(max_examples=40)
def test_roots_match_brute_force_scan(ints):
    f = poly_trim(F3, tuple(F3.from_int(c) for c in ints))
    if poly_degree(f) < 1:
        return
    scanned = sorted(x for x in F3.elements()
                     if F3.is_zero(poly_eval(F3, f, x)))
    assert sorted(set(poly_roots(F3, f))) == scanned


def test_splitting_field_of_quadratic():
    big, embed = splitting_field(GF(2), (1, 1, 1))
    assert big.order == 4
    lifted = tuple(embed(c) for c in (GF(2).one, GF(2).one, GF(2).one))
    assert splits_into_linears(big, lifted)
    assert len(poly_roots(big, lifted)) == 2


def test_splitting_field_keeps_split_rationals():
    Q = QQ()
    f = tuple(Q.from_int(c) for c in (-1, 0, 1))   # x^2 - 1
    big, embed = splitting_field(Q, f)
    assert big is Q
    assert embed(Q.from_int(7)) == Q.from_int(7)


def test_splitting_field_refuses_general_number_fields():
    Q = QQ()
    f = tuple(Q.from_int(c) for c in (3, 0, 1))    # x^2 + 3
    with pytest.raises(BudgetError):
        splitting_field(Q, f)


def test_rational_factoring_pinned():
    Q = QQ()
    # x^2 - 1 over Q
    f = tuple(Q.from_int(c) for c in (-1, 0, 1))
    factors = factor_poly(Q, f)
    assert len(factors) == 2
    assert all(poly_degree(g) == 1 for g, _ in factors)
