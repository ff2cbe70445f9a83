import json

import pytest

from z3parts import (
    BiSeries,
    ProductKind,
    WeightKind,
    cell_stats,
    cells,
    has_triple_columns,
    partition_count,
    partitions_of,
    product_series,
    to_csv,
    to_json,
    to_table,
    weight_series,
)


def brute_rows(kind, qbound):
    """Independent tally of the weight series: scan every cell directly."""
    include_leg_zero = kind is WeightKind.WT_TILDE
    table = {n: {} for n in range(qbound + 1)}
    for n in range(qbound + 1):
        for rows in partitions_of(n):
            w = 0
            for col, row in cells(rows):
                arm, leg = cell_stats(rows, col, row)
                if not include_leg_zero and leg == 0:
                    continue
                if (arm + 1 - leg) % 3 == 0:
                    w += 1
            table[n][w] = table[n].get(w, 0) + 1
    return table


def test_constructor_truncates_and_drops_zeros():
    s = BiSeries(3, {(0, 0): 1, (1, 2): 0, (0, 9): 7})
    assert s.terms() == [(0, 0, 1)]
    with pytest.raises(ValueError):
        BiSeries(-1)
    with pytest.raises(ValueError):
        BiSeries(3, {(-1, 0): 1})


def test_mul_examples():
    one_plus_q = BiSeries.one(2) + BiSeries.term(0, 1, 2)
    one_minus_q = BiSeries.one(2) - BiSeries.term(0, 1, 2)
    assert one_plus_q * one_minus_q == BiSeries.one(2) - BiSeries.term(0, 2, 2)

    a = BiSeries(5, {(0, 0): 3, (2, 4): -1})
    assert a * BiSeries.one(5) == a

    one_plus_tq = BiSeries.one(2) + BiSeries.term(1, 1, 2)
    assert one_plus_tq * one_plus_tq == BiSeries(2, {(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_geometric_examples():
    assert BiSeries.geometric(0, 1, 3) == BiSeries(
        3, {(0, 0): 1, (0, 1): 1, (0, 2): 1, (0, 3): 1}
    )
    assert BiSeries.geometric(1, 2, 5) == BiSeries(5, {(0, 0): 1, (1, 2): 1, (2, 4): 1})
    assert len(BiSeries.geometric(2, 3, 20).terms()) == 7  # powers 0..6


def test_geometric_rejects_q_free_denominator():
    with pytest.raises(ValueError):
        BiSeries.geometric(1, 0, 5)


def test_bound_mismatch_is_rejected():
    with pytest.raises(ValueError):
        BiSeries.one(3) * BiSeries.one(4)
    with pytest.raises(ValueError):
        BiSeries.one(3) + BiSeries.one(4)


def test_coeff_and_row_accessors():
    s = BiSeries(4, {(1, 4): 3, (0, 4): 1, (2, 4): 1})
    assert s.coeff(1, 4) == 3
    assert s.coeff(5, 4) == 0
    assert s.row(4) == {0: 1, 1: 3, 2: 1}
    assert s.row(2) == {}
    with pytest.raises(ValueError):
        s.coeff(0, 5)
    with pytest.raises(ValueError):
        s.row(5)


# frozen by expanding the factor families by hand through q^4
FULL_WT_TILDE_ROWS_4 = {
    0: {0: 1},
    1: {0: 1},
    2: {0: 1, 1: 1},
    3: {0: 1, 1: 2},
    4: {0: 1, 1: 3, 2: 1},
}
FULL_WT_ROWS_4 = {
    0: {0: 1},
    1: {0: 1},
    2: {0: 1, 1: 1},
    3: {0: 2, 1: 1},
    4: {0: 2, 1: 2, 2: 1},
}


def test_product_series_small_tables():
    tilde = product_series(ProductKind.FULL_WT_TILDE, 4)
    plain = product_series(ProductKind.FULL_WT, 4)
    assert {n: tilde.row(n) for n in range(5)} == FULL_WT_TILDE_ROWS_4
    assert {n: plain.row(n) for n in range(5)} == FULL_WT_ROWS_4


def test_correction_product_small_tables():
    assert product_series(ProductKind.LEG_CORRECTION, 0) == BiSeries.one(0)
    # by hand: 1 + (t - 1) q^3 + 2 (t^2 - t) q^6
    corr = product_series(ProductKind.LEG_CORRECTION, 6)
    assert corr == BiSeries(
        6, {(0, 0): 1, (1, 3): 1, (0, 3): -1, (2, 6): 2, (1, 6): -2}
    )


def test_weight_series_examples():
    tilde = weight_series(WeightKind.WT_TILDE, 3)
    assert tilde.row(3) == {0: 1, 1: 2}
    plain = weight_series(WeightKind.WT, 2)
    assert plain.row(2) == {0: 1, 1: 1}
    assert weight_series(WeightKind.WT, 0) == BiSeries.one(0)


def test_weight_series_matches_brute_tally():
    for kind in WeightKind:
        series = weight_series(kind, 8)
        expected = brute_rows(kind, 8)
        assert {n: series.row(n) for n in range(9)} == expected


def test_setting_t_to_one_recovers_partition_counts():
    series = weight_series(WeightKind.WT_TILDE, 30)
    for n in range(31):
        assert sum(series.row(n).values()) == partition_count(n)


def test_triple_column_series_match_their_products():
    for kind, product_kind in (
        (WeightKind.WT_TILDE, ProductKind.TRIPLE_COLUMNS_WT_TILDE),
        (WeightKind.WT, ProductKind.TRIPLE_COLUMNS_WT),
    ):
        restricted = weight_series(kind, 24, condition=has_triple_columns)
        assert restricted == product_series(product_kind, 24)


def test_correction_times_wt_product_gives_wt_tilde_product():
    lhs = product_series(ProductKind.FULL_WT, 30) * product_series(ProductKind.LEG_CORRECTION, 30)
    assert lhs == product_series(ProductKind.FULL_WT_TILDE, 30)


def test_products_and_sums_have_nonnegative_coefficients():
    for kind in (
        ProductKind.FULL_WT,
        ProductKind.FULL_WT_TILDE,
        ProductKind.TRIPLE_COLUMNS_WT,
        ProductKind.TRIPLE_COLUMNS_WT_TILDE,
    ):
        assert all(c > 0 for _, _, c in product_series(kind, 24).terms())
    for kind in WeightKind:
        assert all(c > 0 for _, _, c in weight_series(kind, 24).terms())


def test_parallel_sweep_matches_sequential():
    for condition in (None, has_triple_columns):
        seq = weight_series(WeightKind.WT_TILDE, 8, condition=condition)
        par = weight_series(WeightKind.WT_TILDE, 8, condition=condition, jobs=2)
        assert seq == par


def test_csv_export():
    series = weight_series(WeightKind.WT, 2)
    assert to_csv(series) == "n,k,coefficient\n0,0,1\n1,0,1\n2,0,1\n2,1,1\n"


def test_json_export():
    series = weight_series(WeightKind.WT, 2)
    text = to_json(series)
    assert text == '{"0":[[0,"1"]],"1":[[0,"1"]],"2":[[0,"1"],[1,"1"]]}\n'
    assert json.loads(text) == {"0": [[0, "1"]], "1": [[0, "1"]], "2": [[0, "1"], [1, "1"]]}


def test_table_export():
    series = weight_series(WeightKind.WT_TILDE, 4)
    assert to_table(series) == (
        "q^0: 1\n"
        "q^1: 1\n"
        "q^2: 1 + t\n"
        "q^3: 1 + 2*t\n"
        "q^4: 1 + 3*t + t^2\n"
    )


def test_table_formats_signs_and_powers():
    series = BiSeries(6, {(0, 0): -2, (1, 0): 1, (3, 6): -4})
    assert to_table(series) == "q^0: -2 + t\nq^6: -4*t^3\n"
