"""Letter-position tables, difference tables and partition checks."""

import pytest

from splythoff.errors import InsufficientTermsError
from splythoff.tables import (
    check_partition,
    difference_table,
    double_difference_table,
    positions_table,
    positions_table_oracle,
    step_lengths,
)
from splythoff.words import kbonacci_substitution


def test_step_lengths_known_values():
    assert step_lengths(4, 0) == (2, 4, 8, 15)
    assert step_lengths(4, 1) == (2, 4, 7, 14)
    assert step_lengths(4, 2) == (2, 3, 6, 12)
    assert step_lengths(4, 3) == (1, 2, 4, 8)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_step_lengths_match_direct_expansion(k):
    sub = kbonacci_substitution(k)
    for i in range(k):
        word = bytes([i])
        expanded = []
        for _ in range(k):
            word = sub.expand(word)
            expanded.append(len(word))
        assert step_lengths(k, i) == tuple(expanded)


def test_step_lengths_rejects_bad_args():
    with pytest.raises(ValueError):
        step_lengths(2, 0)
    with pytest.raises(ValueError):
        step_lengths(4, 4)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_positions_table_matches_word_scan_oracle(k):
    fast = positions_table(k, 2000)
    slow = positions_table_oracle(k, 2000)
    assert fast.header == slow.header
    assert fast.rows == slow.rows


def test_positions_table_first_column_is_powers_of_two():
    table = positions_table(5, 10)
    assert [row[0] for row in table.rows] == [1, 2, 4, 8, 16]


def test_positions_rows_strictly_increasing():
    table = positions_table(4, 500)
    for row in table.rows:
        assert all(x < y for x, y in zip(row, row[1:]))


def test_difference_rows_are_row_gaps():
    base = positions_table(4, 300)
    diff = difference_table(4, 300, base=base)
    for j in range(3):
        assert diff.rows[j] == [
            hi - lo for hi, lo in zip(base.rows[j + 1], base.rows[j])
        ]


def test_double_difference_sum_row():
    diff = difference_table(4, 300)
    dd = double_difference_table(4, 300)
    assert dd.row("S") == [sum(col) for col in zip(*diff.rows)]


def test_last_row_closed_form():
    # The last positions row is the column index plus the other rows' sum.
    table = positions_table(5, 400)
    for i in range(400):
        assert table.rows[-1][i] == (i + 1) + sum(
            table.rows[j][i] for j in range(4)
        )


def test_check_partition_accepts_a_partition():
    evens = list(range(2, 101, 2))
    odds = list(range(1, 101, 2))
    report = check_partition([evens, odds], 100)
    assert report.is_partition


def test_check_partition_finds_duplicates_and_gaps():
    report = check_partition([[1, 2, 50], [2, 60]], 40)
    assert not report.is_partition
    assert report.violation == "duplicate"
    assert report.first_violation == 2
    report = check_partition([[1, 2, 50], [4, 60]], 40)
    assert not report.is_partition
    assert report.violation == "missing"
    assert report.first_violation == 3


def test_check_partition_undecided_raises():
    with pytest.raises(InsufficientTermsError):
        check_partition([[1, 2, 3], [4, 5, 6]], 100)
    with pytest.raises(InsufficientTermsError):
        check_partition([[1, 2], []], 2)


def test_table_row_lookup_and_columns():
    table = positions_table(4, 16)
    assert table.columns == 16
    assert table.row("X0")[0] == 1
    with pytest.raises(ValueError):
        table.row("X9")
