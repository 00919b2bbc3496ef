"""The annihilator-space trichotomy and its two independent paths."""

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from preserverlab.classify import (
    CASE_LINE,
    CASE_OTHER,
    CASE_SQUARE_ZERO,
    CASE_TRIVIAL,
    classify_direct,
    classify_structural,
    cross_validate,
)
from preserverlab.fields import GF, QQ
from preserverlab.io import named_poly
from preserverlab.matrices import (
    enumerate_matrices,
    identity_matrix,
    is_rank_one,
    is_square_zero,
    mat_from_ints,
    mat_scale,
    unit_matrix,
    zero_matrix,
)
from preserverlab.multipoly import normalize, poly_from_terms
from preserverlab.operators import joint_kernel

F3 = GF(3)
NP3 = normalize(named_poly(F3, "xy+yx"))


def test_case_constants_are_distinct():
    cases = {CASE_TRIVIAL, CASE_SQUARE_ZERO, CASE_LINE, CASE_OTHER}
    assert len(cases) == 4


def test_distribution_over_all_of_m2_f3():
    """Census of the 81 coefficient matrices for x y + y x."""
    dist = Counter(classify_structural(F3, A, NP3).case
                   for A in enumerate_matrices(F3, 2))
    assert dist == {CASE_SQUARE_ZERO: 27, CASE_LINE: 24, CASE_TRIVIAL: 30}
    assert CASE_OTHER not in dist


def test_identity_matrix_is_trivial():
    st_ = classify_structural(F3, identity_matrix(F3, 2), NP3)
    assert st_.case == CASE_TRIVIAL
    assert st_.dim == 0
    assert st_.witness is None


def test_zero_matrix_carries_everything():
    st_ = classify_structural(F3, zero_matrix(F3, 2), NP3)
    assert st_.case == CASE_SQUARE_ZERO
    assert st_.dim == 4
    assert is_rank_one(F3, st_.witness) and is_square_zero(F3, st_.witness)


def test_nilpotent_coefficient_matrix():
    st_ = classify_structural(F3, unit_matrix(F3, 2, 0, 1), NP3)
    assert st_.case == CASE_SQUARE_ZERO
    assert st_.dim == 2
    assert st_.witness == unit_matrix(F3, 2, 0, 1)


def test_line_case_reports_the_spectral_projector():
    """A = E11 leaves the line through the complementary projector."""
    st_ = classify_structural(F3, unit_matrix(F3, 2, 0, 0), NP3)
    assert st_.case == CASE_LINE
    assert st_.dim == 1
    assert st_.line == unit_matrix(F3, 2, 1, 1)
    st_ = classify_structural(F3, unit_matrix(F3, 2, 1, 1), NP3)
    assert st_.line == unit_matrix(F3, 2, 0, 0)


def test_structural_dim_matches_kernel_computation():
    """The reported dimension always equals the joint kernel size."""
    for A in enumerate_matrices(F3, 2):
        st_ = classify_structural(F3, A, NP3)
        assert st_.dim == len(joint_kernel(A, NP3))


def test_both_paths_agree_on_all_of_m2_f3():
    for A in enumerate_matrices(F3, 2):
        ck = cross_validate(F3, A, NP3)
        assert ck.agree, A


def test_direct_path_lifts_to_the_splitting_field():
    """Char poly x^2 + 1 forces the search into GF(9)."""
    B = mat_from_ints(F3, ((0, 2), (1, 0)))
    direct = classify_direct(F3, B, NP3, lift=True)
    assert direct.path == "direct"
    assert direct.extension is not None
    assert direct.extension.order == 9
    structural = classify_structural(F3, B, NP3)
    assert (direct.case, direct.dim) == (structural.case, structural.dim)


def test_scaling_does_not_change_the_case():
    for A in enumerate_matrices(F3, 2):
        base = classify_structural(F3, A, NP3).case
        for c in (F3.from_int(2),):
            assert classify_structural(F3, mat_scale(F3, c, A), NP3).case \
                == base


def test_rational_example_is_genuinely_other():
    """Rotation-plus-fixed-line over Q: a two dimensional annihilator
    space that fits none of the three structured shapes."""
    Q = QQ()
    A = ((Q.from_int(0), Q.from_int(-3), Q.zero),
         (Q.from_int(1), Q.zero, Q.zero),
         (Q.zero, Q.zero, Q.one))
    npq = normalize(named_poly(Q, "xy+yx"))
    st_ = classify_structural(Q, A, npq)
    assert st_.case == CASE_OTHER
    assert st_.dim == 2
    ck = cross_validate(Q, A, npq)
    assert ck.agree
    assert "refused" in ck.direct.detail[0]


def test_non_generic_polynomial_is_rejected():
    p = poly_from_terms(F3, 2, [((1, 2), 1), ((2, 1), 2)])
    np_ = normalize(p)     # tail sum 2, and 1 + 2 = 0 in GF(3)
    with pytest.raises(ValueError):
        classify_structural(F3, identity_matrix(F3, 2), np_)
