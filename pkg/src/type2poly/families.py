"""Number and polynomial families built from their generating functions.

Every polynomial family has a generating function of the shape
``prefactor(t) * kernel(x, t)`` where the kernel is ``e^(x t)`` (Euler and
Bernoulli types) or ``(1 + t)^x`` (Changhee and Daehee types).  The prefactor
is built over Q, raised to the requested integer order, then multiplied into
the kernel over Q[x].  Reading EGF coefficients gives the table.

Prefactors whose natural form divides by a series with zero constant term
(``t / (e^t - 1)`` and friends) are rewritten by cancelling ``t`` first, so
only unit-constant series are ever inverted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .algebra import (
    Polynomial,
    Series,
    binomial_series,
    exp_series,
    exp_xt_series,
    log1p_series,
    poly_eval,
    series_divide_by_t,
    series_pow_int,
    series_scale_arg,
)


class Family(str, Enum):
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    EULER = "euler"
    TYPE2_EULER = "type2_euler"
    BERNOULLI = "bernoulli"
    TYPE2_BERNOULLI = "type2_bernoulli"
    CHANGHEE = "changhee"
    TYPE2_CHANGHEE = "type2_changhee"
    DAEHEE = "daehee"
    TYPE2_DAEHEE = "type2_daehee"

    @classmethod
    def parse(cls, name: Union[str, Family]) -> Family:
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None

    @property
    def is_triangle(self) -> bool:
        return self in (Family.STIRLING1, Family.STIRLING2)

    @property
    def has_order(self) -> bool:
        return self in ORDERED_FAMILIES

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")


ORDERED_FAMILIES = frozenset({Family.TYPE2_BERNOULLI, Family.TYPE2_CHANGHEE, Family.TYPE2_DAEHEE})
POLYNOMIAL_FAMILIES = tuple(f for f in Family if not f.is_triangle)
EXP_KERNEL = frozenset({Family.EULER, Family.TYPE2_EULER, Family.BERNOULLI, Family.TYPE2_BERNOULLI})


@dataclass(frozen=True)
class FamilyId:
    family: Family
    order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if isinstance(self.order, bool) or not isinstance(self.order, int):
            raise TypeError(f"family order must be an integer, got {self.order!r}")
        if self.order != 1 and not self.family.has_order:
            raise ValueError(f"{self.family.value} has no order variants (order={self.order})")

    def __str__(self) -> str:
        if self.family.has_order and self.order != 1:
            return f"{self.family.value}^({self.order})"
        return self.family.value


@dataclass(frozen=True)
class FamilyTable:
    """``values[n]`` for n = 0..max_n.

    Polynomial families hold :class:`Polynomial` values; the Stirling
    families hold triangle rows ``values[n][k]`` for 0 <= k <= n.
    """

    family: FamilyId
    max_n: int
    values: tuple

    @property
    def is_triangle(self) -> bool:
        return self.family.family.is_triangle

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def numbers(self) -> list[Fraction]:
        return self.evaluate(0)

    def evaluate(self, x) -> list[Fraction]:
        if self.is_triangle:
            raise TypeError("triangular tables have no x variable")
        return [poly_eval(p, x) for p in self.values]


# ---------------------------------------------------------------------------
# Stirling numbers


def _triangle_from_columns(column, max_n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Triangle whose column k holds the EGF coefficients of ``g^k / k!``."""
    cols = []
    power = Series.one(max_n)
    for k in range(max_n + 1):
        if k:
            power = power * column / k
        cols.append(power)
    return tuple(tuple(cols[k].egf_coeff(n) for k in range(n + 1)) for n in range(max_n + 1))


@lru_cache(maxsize=32)
def stirling2(max_n: int) -> tuple[tuple[Fraction, ...], ...]:
    """S2(n, k) from (e^t - 1)^k / k!."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return _triangle_from_columns(exp_series(max_n) - Series.one(max_n), max_n)


@lru_cache(maxsize=32)
def stirling1(max_n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Signed S1(n, k) from log(1 + t)^k / k!."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return _triangle_from_columns(log1p_series(max_n), max_n)


def stirling2_recurrence(max_n: int) -> list[list[int]]:
    """S2 via S2(n,k) = S2(n-1,k-1) + k S2(n-1,k); for cross-checks only."""
    rows = [[1]]
    for n in range(1, max_n + 1):
        prev = rows[-1] + [0]
        rows.append([0] + [prev[k - 1] + k * prev[k] for k in range(1, n + 1)])
    return rows


def stirling1_recurrence(max_n: int) -> list[list[int]]:
    """Signed S1 via S1(n,k) = S1(n-1,k-1) - (n-1) S1(n-1,k); for cross-checks only."""
    rows = [[1]]
    for n in range(1, max_n + 1):
        prev = rows[-1] + [0]
        rows.append([0] + [prev[k - 1] - (n - 1) * prev[k] for k in range(1, n + 1)])
    return rows


# ---------------------------------------------------------------------------
# Prefactors over Q


def _binomial_pair(order: int) -> tuple[Series, Series]:
    one_plus_t = Series([1, 1] + [0] * (order - 1)) if order >= 1 else Series([1])
    return one_plus_t, one_plus_t ** -1


def prefactor(family: Family, order: int, n: int) -> Series:
    """The x-free factor of the generating function, to truncation order ``n``."""
    family = Family.parse(family)
    if family is Family.EULER:
        # 2 / (e^t + 1)
        return Series.constant(2, n) / (exp_series(n) + Series.one(n))
    if family is Family.TYPE2_EULER:
        # 2 / (e^t + e^-t)
        e = exp_series(n)
        return Series.constant(2, n) / (e + series_scale_arg(e, -1))
    if family is Family.BERNOULLI:
        # t / (e^t - 1) = 1 / ((e^t - 1) / t)
        shifted = series_divide_by_t(exp_series(n + 1) - Series.one(n + 1))
        return shifted ** -1
    if family is Family.TYPE2_BERNOULLI:
        # (t / (e^t - e^-t))^a = ((e^t - e^-t) / t)^-a
        e = exp_series(n + 1)
        shifted = series_divide_by_t(e - series_scale_arg(e, -1))
        return series_pow_int(shifted, -order)
    if family is Family.CHANGHEE:
        # 2 / (2 + t)
        return Series.constant(2, n) / (Series.constant(2, n) + Series.variable(n))
    if family is Family.TYPE2_CHANGHEE:
        # (2 / ((1+t) + (1+t)^-1))^a
        up, down = _binomial_pair(n)
        return series_pow_int(Series.constant(2, n) / (up + down), order)
    if family is Family.DAEHEE:
        # log(1+t) / t
        return series_divide_by_t(log1p_series(n + 1))
    if family is Family.TYPE2_DAEHEE:
        # (log(1+t) / ((1+t) - (1+t)^-1))^a, both parts divided by t first
        up, down = _binomial_pair(n + 1)
        mercator = series_divide_by_t(log1p_series(n + 1))
        return series_pow_int(mercator / series_divide_by_t(up - down), order)
    raise ValueError(f"{family.value} has no polynomial generating function")


@lru_cache(maxsize=None)
def _kernel(exp_type: bool, n: int) -> Series:
    return exp_xt_series(n) if exp_type else binomial_series(n)


def generating_function(fid: FamilyId, n: int) -> Series:
    """Full generating function over Q[x], truncated at ``t^n``."""
    pre = prefactor(fid.family, fid.order, n)
    return pre.lift() * _kernel(fid.family in EXP_KERNEL, n)


# ---------------------------------------------------------------------------
# Tables


@lru_cache(maxsize=256)
def _polynomial_table(family: Family, order: int, max_n: int) -> FamilyTable:
    fid = FamilyId(family, order)
    gf = generating_function(fid, max_n)
    return FamilyTable(fid, max_n, tuple(gf.egf_coeffs()))


def family_table(family, max_n: int, order: int = 1) -> FamilyTable:
    """Table for any family; triangles for Stirling, polynomials otherwise."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    fid = FamilyId(family, order)
    if fid.family is Family.STIRLING1:
        return FamilyTable(fid, max_n, stirling1(max_n))
    if fid.family is Family.STIRLING2:
        return FamilyTable(fid, max_n, stirling2(max_n))
    return _polynomial_table(fid.family, fid.order, max_n)


def family_numbers(family, max_n: int, order: int = 1) -> list[Fraction]:
    """Numbers (x = 0) computed over Q alone, without the Q[x] kernel."""
    fid = FamilyId(family, order)
    if fid.family.is_triangle:
        raise TypeError("Stirling families are triangles; use family_table")
    return prefactor(fid.family, fid.order, max_n).egf_coeffs()


def euler_polys(max_n: int) -> FamilyTable:
    return family_table(Family.EULER, max_n)


def bernoulli_polys(max_n: int) -> FamilyTable:
    return family_table(Family.BERNOULLI, max_n)


def type2_euler_polys(max_n: int) -> FamilyTable:
    return family_table(Family.TYPE2_EULER, max_n)


def changhee_polys(max_n: int) -> FamilyTable:
    return family_table(Family.CHANGHEE, max_n)


def daehee_polys(max_n: int) -> FamilyTable:
    return family_table(Family.DAEHEE, max_n)


def type2_changhee_polys(max_n: int, order: int = 1) -> FamilyTable:
    return family_table(Family.TYPE2_CHANGHEE, max_n, order)


def type2_bernoulli_polys(max_n: int, order: int = 1) -> FamilyTable:
    return family_table(Family.TYPE2_BERNOULLI, max_n, order)


def type2_daehee_polys(max_n: int, order: int = 1) -> FamilyTable:
    return family_table(Family.TYPE2_DAEHEE, max_n, order)


def max_bit_length(values) -> int:
    """Largest numerator or denominator bit length across rationals or polynomials."""
    best = 0
    for v in values:
        items = v.coeffs if isinstance(v, Polynomial) else (v if isinstance(v, tuple) else (v,))
        for q in items:
            q = Fraction(q)
            best = max(best, q.numerator.bit_length(), q.denominator.bit_length())
    return best


def binomial_polynomial(n: int) -> Polynomial:
    """x (x - 1) ... (x - n + 1); n! times the t^n coefficient of (1+t)^x."""
    p = Polynomial.constant(1)
    for j in range(n):
        p = p * Polynomial((-j, 1))
    return p



def benchmark(max_n: int = 64) -> dict[str, tuple[float, int]]:
    """Build every family's numbers over Q at ``max_n``; family -> (seconds, max bit length).

    Caches are bypassed so timings reflect a cold build.
    """
    import time

    out = {}
    for fam in Family:
        start = time.perf_counter()
        if fam is Family.STIRLING1:
            values = stirling1.__wrapped__(max_n)
        elif fam is Family.STIRLING2:
            values = stirling2.__wrapped__(max_n)
        else:
            values = family_numbers(fam, max_n)
        out[fam.value] = (time.perf_counter() - start, max_bit_length(values))
    return out
