"""The dense coded scan agrees with exact per-matrix evaluation."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from preserverlab.dense import DenseSpace, FULL_SPACE_CAP
from preserverlab.fields import GF, QQ
from preserverlab.matrices import matrix_code, matrix_from_code
from preserverlab.multipoly import (
    evaluate,
    is_zero_tuple,
    poly_from_terms,
    standard_polynomial,
)
from preserverlab.unipoly import BudgetError

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)


def test_needs_a_finite_field():
    with pytest.raises(BudgetError):
        DenseSpace(QQ(), 2)


def test_code_round_trip():
    space = DenseSpace(F3, 2)
    for code in (0, 1, 40, 80):
        A = space.matrix_of(code)
        assert space.code_of(A) == code
        assert matrix_from_code(F3, code, 2) == A
    codes = space.all_codes()
    assert len(codes) == 81
    back = space.encode(space.decode(codes))
    assert bool((back == codes).all())


@pytest.mark.parametrize("field", [F3, F4], ids=["prime", "extension"])
def test_eval_tuples_matches_exact_evaluation(field):
    """Coded batch evaluation equals the per-matrix exact route on a
    spread of tuples, for both arithmetic backends."""
    space = DenseSpace(field, 2)
    p = poly_from_terms(field, 2, [((1, 2), 1), ((2, 1), 1)])
    rng = np.random.default_rng(0)
    a = rng.integers(0, space.count, size=60)
    b = rng.integers(0, space.count, size=60)
    vals = space.eval_tuples(p, [a, b])
    for idx in range(60):
        A = space.matrix_of(int(a[idx]))
        B = space.matrix_of(int(b[idx]))
        exact = evaluate(p, (A, B))
        coded = tuple(tuple(field.elem_at(int(e)) for e in row)
                      for row in vals[idx])
        assert coded == exact


def test_zero_mask_count_pinned():
    # x y has 58 zeros among the 256 pairs over M2(GF(2))
    space = DenseSpace(F2, 2)
    p = poly_from_terms(F2, 2, [((1, 2), 1)])
    total = 0
    for start, columns in space.tuple_columns(2):
        total += int(space.zero_mask(p, columns).sum())
    assert total == 58


def test_poly_identity_and_witness():
    space = DenseSpace(F2, 2)
    s2 = standard_polynomial(F2, 2)
    assert not space.poly_identity(s2)
    witness = space.first_nonzero_tuple(s2)
    assert witness is not None
    assert not is_zero_tuple(s2, witness)
    # everything before the witness vanishes: it is the earliest
    wcodes = [space.code_of(A) for A in witness]
    flat = wcodes[0] * space.count + wcodes[1]
    for idx in range(flat):
        pair = (space.matrix_of(idx // space.count),
                space.matrix_of(idx % space.count))
        assert is_zero_tuple(s2, pair)


def test_map_table_encodes_a_function():
    space = DenseSpace(F3, 2)
    table = space.map_table(lambda A: tuple(zip(*A)))   # transpose
    assert len(table) == 81
    for code in (0, 5, 17, 80):
        A = space.matrix_of(code)
        assert space.matrix_of(int(table[code])) == tuple(zip(*A))


def test_tuple_columns_cap():
    space = DenseSpace(F3, 2)
    with pytest.raises(BudgetError):
        list(space.tuple_columns(4, cap=100))


def test_all_codes_cap():
    space = DenseSpace(GF(5), 3)
    assert space.count == 5 ** 9
    assert space.count > FULL_SPACE_CAP
    with pytest.raises(BudgetError):
        space.all_codes()
