"""Independent cross-checks: every oracle here recomputes its claim
from first principles, without touching the kernels, classifier, or
preserver machinery it is meant to validate."""

import pytest

from preserverlab.fields import GF, IDENTITY_HOM, hom_make
from preserverlab.io import named_poly
from preserverlab.matrices import (
    identity_matrix,
    mat_add,
    mat_from_ints,
    mat_mul,
    mat_scale,
    unit_matrix,
    zero_matrix,
)
from preserverlab.multipoly import is_zero_tuple
from preserverlab.oracles import (
    affine_span_condition,
    check_spectrum_formula,
    commuting_pair_count,
    enumerate_zero_set,
    local_linear_dependence,
    verify_affine_span,
    verify_nilpotent_proportionality,
    verify_orthogonality,
    verify_zero_detection,
)
from preserverlab.unipoly import BudgetError

F2 = GF(2)
F3 = GF(3)
F5 = GF(5)


def test_orthogonality_exhaustive_m2_f3():
    """All idempotent/matrix/scalar combinations over M2(GF(3)): the
    paired annihilation identities always force P X = 0 = X P."""
    rep = verify_orthogonality(3, 2)
    assert rep.passed
    assert rep.instances == 61236
    assert rep.notes["mode"] == "exhaustive"
    assert rep.notes["idempotents"] == 14


def test_orthogonality_sampled_mode():
    rep = verify_orthogonality(5, 2, trials=50, seed=1)
    assert rep.passed
    assert rep.instances == 50
    assert rep.notes["mode"] == "sampled"


def test_orthogonality_needs_the_scalar_constraint():
    """With 1 + mu + nu = 0 the conclusion genuinely fails: P = X =
    E11, mu = 1, nu = -2 satisfies both identities yet P X /= 0."""
    P = X = unit_matrix(F3, 2, 0, 0)
    mu, nu = F3.one, F3.from_int(-2)
    assert F3.is_zero(F3.add(F3.one, F3.add(mu, nu)))
    PX = mat_mul(F3, P, X)
    XP = mat_mul(F3, X, P)
    PXP = mat_mul(F3, PX, P)
    first = mat_add(F3, PX, mat_add(F3, mat_scale(F3, mu, PXP),
                                    mat_scale(F3, nu, XP)))
    second = mat_add(F3, XP, mat_add(F3, mat_scale(F3, mu, PXP),
                                     mat_scale(F3, nu, PX)))
    assert first == zero_matrix(F3, 2)
    assert second == zero_matrix(F3, 2)
    assert PX != zero_matrix(F3, 2)


def test_zero_detection_exhaustive_m2_f3():
    """Nonzero coefficient matrices are always exposed by a rank-one
    substitution; diagonal units alone already suffice here."""
    rep = verify_zero_detection(3, 2)
    assert rep.passed
    assert rep.instances == 81
    assert rep.notes["rank_one_pool"] == 32
    assert rep.notes["diagonal_only_misses"] == 0


def test_zero_detection_m3_pool_size():
    rep = verify_zero_detection(3, 3)
    assert rep.passed
    assert rep.instances == 3 ** 9
    assert rep.notes["rank_one_pool"] == 338


def test_commuting_pair_count_crosschecks():
    """Centralizer sizes summed two ways, and the zero set of the
    commutator polynomial counted directly, all give 88."""
    assert commuting_pair_count(F2, 2) == 88
    zs = list(enumerate_zero_set(named_poly(F2, "xy-yx"), 2, q=2))
    assert len(zs) == 88
    # scalars commute with all 16, the other 14 with exactly 4
    assert 2 * 16 + 14 * 4 == 88


def test_zero_set_enumeration_pinned():
    zs = list(enumerate_zero_set(named_poly(F2, "xy"), 2, q=2))
    assert len(zs) == 58
    zero = zero_matrix(F2, 2)
    assert zs[0] == (zero, zero)
    for tup in zs:
        assert is_zero_tuple(named_poly(F2, "xy"), tup)
    ident = identity_matrix(F2, 2)
    assert (ident, ident) not in zs


def test_zero_set_budget():
    with pytest.raises(BudgetError):
        list(enumerate_zero_set(named_poly(F5, "xy+yx"), 3, q=5))


def test_nilpotent_proportionality_small():
    """Joint membership across every rank-one idempotent pins the
    second nilpotent onto the line of the first."""
    rep = verify_nilpotent_proportionality(3, 3, pairs=20)
    assert rep.passed
    assert not rep.converse_failures
    assert rep.instances == 20
    assert rep.notes["idempotents"] == 117
    assert rep.notes["condition_holds"] == rep.notes["proportional"] == 10


def test_affine_span_exhaustive_small():
    rep = verify_affine_span(2, 4, trials=3)
    assert rep.passed
    assert rep.notes["mode"] == "exhaustive"
    assert rep.notes["inconclusive"] == 0


def test_affine_span_condition_detects_membership():
    """B inside span{A, Id} satisfies the paired relations everywhere;
    pushing B off the span produces an explicit witness pair."""
    A = mat_from_ints(F2, ((1, 1, 0, 0), (0, 0, 1, 0),
                           (0, 0, 0, 1), (1, 0, 0, 1)))
    inside = mat_add(F2, A, identity_matrix(F2, 4))
    assert affine_span_condition(F2, A, inside, F2.one, F2.one) is None
    outside = mat_add(F2, inside, unit_matrix(F2, 4, 0, 1))
    hit = affine_span_condition(F2, A, outside, F2.one, F2.one)
    assert hit is not None
    P, N = hit
    # the witness pair is orthogonal: P idempotent, N rank one, PN=NP=0
    assert mat_mul(F2, P, P) == P
    assert mat_mul(F2, P, N) == zero_matrix(F2, 4)
    assert mat_mul(F2, N, P) == zero_matrix(F2, 4)


def test_local_dependence_global_branch():
    R1 = mat_from_ints(F5, ((1, 2, 0), (0, 1, 1), (3, 0, 1)))
    R2 = mat_from_ints(F5, ((0, 1, 4), (2, 0, 0), (1, 1, 2)))
    R3 = mat_add(F5, R1, mat_scale(F5, F5.from_int(2), R2))
    out = local_linear_dependence(F5, R1, R2, R3)
    assert out["dependent_everywhere"]
    assert out["conclusion_case"] == "globally_dependent"


def test_local_dependence_projection_branch():
    """Maps into a single row compress to nothing under 1 - E11."""
    E = lambda i, j: unit_matrix(F5, 3, i, j)
    out = local_linear_dependence(F5, E(0, 0), E(0, 1), E(0, 2))
    assert out["conclusion_case"] == "rank_one_projection"
    assert out["projection"] == E(0, 0)


def test_local_dependence_common_image_branch():
    R = lambda rows: mat_from_ints(F5, rows)
    out = local_linear_dependence(F5,
                                  R(((1, 0, 0), (0, 1, 0), (0, 0, 0))),
                                  R(((0, 1, 0), (4, 0, 0), (0, 0, 0))),
                                  R(((1, 0, 0), (0, 0, 0), (0, 0, 0))))
    assert out["dependent_everywhere"]
    assert out["conclusion_case"] == "common_3dim_image"


def test_local_dependence_premise_failure_witness():
    I4 = identity_matrix(F5, 4)
    D = mat_from_ints(F5, ((1, 0, 0, 0), (0, 2, 0, 0),
                           (0, 0, 3, 0), (0, 0, 0, 4)))
    out = local_linear_dependence(F5, I4, D, mat_mul(F5, D, D))
    assert not out["dependent_everywhere"]
    assert out["conclusion_case"] == "none"
    assert out["witness_vector"] == (F5.zero, F5.one, F5.one, F5.one)


def test_spectrum_formula_random_cases():
    rep = check_spectrum_formula(GF(5), cases=50)
    assert rep.passed
    assert rep.instances == 50


def test_spectrum_formula_per_cell_grid():
    rep = check_spectrum_formula(GF(3), max_block=2, per_cell=3)
    assert rep.passed
    # 4 block pairs x 9 eigenvalue pairs x 3 coefficient lists
    assert rep.instances == 4 * 9 * 3
