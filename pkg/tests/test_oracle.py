import random
from fractions import Fraction

import pytest

from type2poly.algebra import Series, exp_series, log1p_series, series_compose
from type2poly.oracle import (
    oracle_central_T,
    oracle_compose,
    oracle_stirling1,
    oracle_stirling2,
    set_partitions,
)


def test_set_partition_counts_are_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203]
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == bell


def test_stirling2_oracle():
    assert oracle_stirling2(4, 2) == 7
    assert oracle_stirling2(5, 3) == 25
    for n in range(1, 8):
        assert oracle_stirling2(n, n) == 1
        assert oracle_stirling2(n, 1) == 1
    with pytest.raises(ValueError):
        oracle_stirling2(13, 2)


def test_stirling1_oracle():
    assert oracle_stirling1(3, 2) == -3
    assert oracle_stirling1(3, 1) == 2
    assert oracle_stirling1(4, 2) == 11
    for n in range(7):
        assert oracle_stirling1(n, n) == 1
    with pytest.raises(ValueError):
        oracle_stirling1(10, 2)


def test_central_T_oracle():
    assert oracle_central_T(3, 1) == Fraction(1, 4)
    for n in range(9):
        assert oracle_central_T(n, n) == 1


def test_oracle_compose_identities():
    f = Series([3, Fraction(1, 2), -1, 4])
    assert oracle_compose(f, Series.variable(3)) == f
    assert oracle_compose(exp_series(6), log1p_series(6)) == Series([1, 1, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        oracle_compose(f, Series([1, 1, 0, 0]))


def test_oracle_compose_matches_horner():
    rng = random.Random(8675309)
    for _ in range(50):
        n = rng.randint(0, 8)
        f = Series([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n + 1)])
        g = Series([0] + [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)])
        assert series_compose(f, g) == oracle_compose(f, g)
