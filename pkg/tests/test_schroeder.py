"""Tests for the Schroeder numbers and the refined triangle."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permlab.schroeder import (
    column_identity_holds,
    inversion_seq_distribution,
    row_sum_identity_holds,
    row_total,
    schroeder_number,
    schroeder_numbers,
    triangle_row,
    triangle_rows,
)

KNOWN_NUMBERS = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446]

KNOWN_ROWS = [
    [1],
    [1, 1],
    [2, 2, 2],
    [4, 6, 6, 6],
    [8, 16, 22, 22, 22],
    [16, 40, 68, 90, 90, 90],
    [32, 96, 192, 304, 394, 394, 394],
    [64, 224, 512, 928, 1412, 1806, 1806, 1806],
]


def test_schroeder_numbers():
    assert schroeder_numbers(12) == KNOWN_NUMBERS
    assert schroeder_number(7) == 1806


def test_triangle_rows_reference():
    assert triangle_rows(8) == KNOWN_ROWS
    assert triangle_row(6) == [16, 40, 68, 90, 90, 90]


def test_first_column_is_powers_of_two():
    rows = triangle_rows(20)
    assert [row[0] for row in rows] == [1] + [2 ** (n - 2) for n in range(2, 21)]


@given(st.integers(min_value=3, max_value=40))
def test_last_three_entries_equal(n):
    row = triangle_row(n)
    assert row[-1] == row[-2] == row[-3]


@given(st.integers(min_value=1, max_value=40))
def test_row_sums_to_schroeder(n):
    assert row_total(n) == schroeder_number(n)
    assert sum(triangle_row(n)) == schroeder_number(n)


@given(st.integers(min_value=1, max_value=20))
def test_column_identity(n):
    # S(n, i) = 2 S(n-1, i) + sum_{l < i} S(n-1, l) for 1 <= i <= n - 2
    assert column_identity_holds(n)


@given(st.integers(min_value=1, max_value=25))
def test_row_sum_identity(n):
    assert row_sum_identity_holds(n)


def test_inversion_seq_distribution_matches_triangle():
    for n in range(1, 10):
        assert inversion_seq_distribution(n) == triangle_row(n)


def test_empty_prefixes():
    assert triangle_rows(0) == []
    assert schroeder_numbers(0) == []
    with pytest.raises(ValueError):
        triangle_row(0)
    with pytest.raises(ValueError):
        inversion_seq_distribution(0)
