import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knots11.snf import abelian_group, group_str, invariant_factors
from oracles import determinantal_divisors, factors_from_divisors


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    return [[draw(st.integers(-9, 9)) for _ in range(cols)] for _ in range(rows)]


@pytest.mark.parametrize("m,expected", [
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[5]], [5]),
    ([[1, 0, 0], [0, 0, 0]], [1, 0]),
    ([[0, 0, 0], [0, 0, 0], [0, 0, 0]], [0, 0, 0]),
])
def test_known_forms(m, expected):
    assert invariant_factors(m) == expected


@settings(max_examples=300)
@given(matrices())
def test_matches_determinantal_divisors(m):
    assert invariant_factors(m) == factors_from_divisors(determinantal_divisors(m))


@given(matrices())
def test_divisibility_chain(m):
    fs = invariant_factors(m)
    for x, y in zip(fs, fs[1:]):
        assert x != 0 and (y % x == 0) or y == 0


def test_group_strings():
    assert group_str([1, 1, 5]) == "Z_5"
    assert group_str([1]) == "0"
    assert group_str([0, 0, 0]) == "Z^3"
    assert group_str([3, 0]) == "Z_3 + Z"
    assert abelian_group([1, 2, 0]) == [2, 0]
