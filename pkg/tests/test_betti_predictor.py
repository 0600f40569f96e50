from itertools import product

import pytest

from predictor.betti import BettiTable, euler_hilbert, hilbert_series_box
from predictor.resolutions import (
    predict,
    resolve_ci_column_blocks,
    resolve_ci_homogeneous,
    resolve_disjoint_ci,
    resolve_equal_multiplicity,
    resolve_fat_aci,
    resolve_homogeneous_aci,
    resolve_single_fat_point,
    resolve_three_points,
    resolve_two_fat_points,
    triple_point_table,
)
from scheme.params import AciParams, BiDegree
from scheme.reduction import normalize
from utils.errors import PreconditionError

SMALL_BLOCKS = list(product((1, 2), repeat=4))


def small_params(max_m: int = 3):
    for blocks in SMALL_BLOCKS:
        for mults in product(range(max_m + 1), repeat=3):
            yield AciParams(*blocks, *mults)


def test_betti_table_cleans_zero_entries():
    table = BettiTable(beta0={BiDegree(1, 0): 1, BiDegree(0, 1): 0})
    assert dict(table.beta0) == {BiDegree(1, 0): 1}
    assert table.totals() == (1, 0, 0)


def test_betti_table_helpers():
    table = resolve_single_fat_point(1)
    assert table.shifted(BiDegree(0, 2)) == BettiTable.from_lists(
        [(1, 2, 1), (0, 3, 1)], [(1, 3, 1)]
    )
    assert table.transposed() == table
    doubled = table + table
    assert doubled.totals() == (4, 2, 0)
    assert table.max_degree() == BiDegree(1, 1)
    assert table.as_lists() == {"beta0": [[0, 1, 1], [1, 0, 1]], "beta1": [[1, 1, 1]], "beta2": []}


def test_single_fat_point():
    table = resolve_single_fat_point(2)
    assert table == BettiTable.from_lists(
        [(2, 0, 1), (1, 1, 1), (0, 2, 1)], [(2, 1, 1), (1, 2, 1)]
    )
    assert resolve_single_fat_point(0) == BettiTable.unit()


def test_two_fat_points_published_table():
    expected = BettiTable.from_lists(
        [(5, 0, 1), (4, 1, 2), (3, 2, 2), (2, 3, 2), (1, 4, 2), (0, 5, 1)],
        [(5, 1, 2), (4, 2, 3), (3, 3, 3), (2, 4, 3), (1, 5, 2)],
        [(5, 2, 1), (4, 3, 1), (3, 4, 1), (2, 5, 1)],
    )
    assert resolve_two_fat_points(4, 1) == expected


def test_two_fat_points_second_syzygies():
    table = resolve_two_fat_points(2, 2)
    assert dict(table.beta2) == {BiDegree(2, 4): 1, BiDegree(3, 3): 2, BiDegree(4, 2): 1}
    assert table.rank_identity() == 1


def test_two_fat_points_requires_normalized_input():
    with pytest.raises(PreconditionError):
        resolve_two_fat_points(1, 2)


def test_three_points_chain(three_points_table):
    intermediate = BettiTable.from_lists(
        [(6, 0, 1), (5, 1, 2), (4, 2, 3), (3, 3, 3), (2, 4, 2), (1, 5, 2), (0, 6, 1)],
        [(6, 1, 2), (5, 2, 4), (4, 3, 5), (3, 4, 4), (2, 5, 3), (1, 6, 2)],
        [(6, 2, 1), (5, 3, 2), (4, 4, 2), (3, 5, 1), (2, 6, 1)],
    )
    assert resolve_three_points(1, 4, 2) == intermediate
    assert resolve_three_points(2, 4, 3) == three_points_table


def test_fat_aci_agrees_with_three_point_recursion(three_points, three_points_table):
    assert resolve_fat_aci(three_points) == three_points_table


def test_block_scheme_published_table(block_scheme, block_scheme_table):
    assert resolve_fat_aci(block_scheme) == block_scheme_table


def test_block_scheme_base_case(block_scheme):
    base = resolve_fat_aci(block_scheme.with_mults(0, 4, 1))
    assert base == BettiTable.from_lists(
        [(9, 0, 1), (8, 2, 1), (7, 2, 1), (6, 4, 1), (5, 4, 1), (4, 6, 1), (3, 6, 1), (2, 8, 1), (1, 8, 1), (0, 10, 1)],
        [(9, 2, 2), (8, 4, 1), (7, 4, 2), (6, 6, 1), (5, 6, 2), (4, 8, 1), (3, 8, 2), (2, 10, 1), (1, 10, 1)],
        [(9, 4, 1), (7, 6, 1), (5, 8, 1), (3, 10, 1)],
    )


def test_acm_cases():
    table = resolve_ci_column_blocks(2, 1, 1, 2, 1)
    assert table.beta2 == {}
    assert table.rank_identity() == 1
    assert resolve_ci_homogeneous(1, 1, 1) == resolve_single_fat_point(1)
    assert resolve_ci_homogeneous(2, 3, 0) == BettiTable.unit()


def test_disjoint_ci_of_unit_blocks_is_two_points():
    assert resolve_disjoint_ci(1, 1, 1, 1, 3, 2) == resolve_two_fat_points(3, 2)


def test_fat_aci_requires_normalized_input():
    with pytest.raises(PreconditionError):
        resolve_fat_aci(AciParams.unit(1, 1, 2))


@pytest.mark.parametrize("params", list(small_params()), ids=lambda p: str(p.as_tuple()))
def test_rank_identity_and_transpose(params):
    table, record = predict(params)
    assert table.rank_identity() == 1
    assert predict(params.transposed())[0] == table.transposed()
    assert record.transposed == (params.m21 > params.m12)


@pytest.mark.parametrize("blocks", SMALL_BLOCKS)
@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_equal_multiplicity_matches_recursion(blocks, n, m):
    params = AciParams(*blocks, n, m, n)
    assert resolve_equal_multiplicity(params) == resolve_fat_aci(params)


@pytest.mark.parametrize("blocks", SMALL_BLOCKS)
def test_triple_points(blocks):
    params = AciParams(*blocks, 0, 0, 0)
    table = resolve_homogeneous_aci(params, 3)
    assert table == triple_point_table(*blocks)
    assert table.totals() == (10, 12, 3)


def test_euler_hilbert_single_point():
    table = resolve_single_fat_point(1)
    assert euler_hilbert(table, BiDegree(1, 1)) == 3
    assert euler_hilbert(table, BiDegree(0, 0)) == 0
    assert euler_hilbert(BettiTable.unit(), BiDegree(2, 3)) == 12


def test_euler_hilbert_stabilizes_at_length(three_points_table):
    # 3 + 10 + 6 conditions imposed by 2P11 + 4P12 + 3P21
    series = hilbert_series_box(three_points_table, BiDegree(10, 10))
    assert series[BiDegree(10, 10)] == 121 - 19
    assert series[BiDegree(8, 9)] == 90 - 19
    assert all(v >= 0 for v in series.values())


def test_predict_unit():
    table, record = predict(AciParams.unit(0, 0, 0))
    assert table == BettiTable.unit()
    assert not record.transposed


def test_predict_transposes_back():
    params = AciParams(1, 2, 2, 1, 1, 1, 3)
    table, record = predict(params)
    assert record.transposed
    normalized, _ = normalize(params)
    assert table == resolve_fat_aci(normalized).transposed()


@pytest.mark.parametrize(
    "mults", [m for m in product(range(5), repeat=3) if m[2] <= m[1]], ids=str
)
def test_fat_aci_specializes_to_three_points(mults):
    assert resolve_fat_aci(AciParams.unit(*mults)) == resolve_three_points(*mults)


def test_rank_identity_on_larger_grid():
    for blocks in product((1, 2, 3), repeat=4):
        for mults in product(range(5), repeat=3):
            table, _ = predict(AciParams(*blocks, *mults))
            assert table.rank_identity() == 1, (blocks, mults)
