"""Central factorials, the central difference operator and T(n, k)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    Polynomial,
    Series,
    as_rational,
    exp_series,
    poly_compose_affine,
    poly_eval,
    series_pow_int,
    series_scale_arg,
)

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def central_factorial(n: int) -> Polynomial:
    """x^[n] = x (x + n/2 - 1)(x + n/2 - 2) ... (x - n/2 + 1), with x^[0] = 1."""
    if n < 0:
        raise ValueError("central factorial needs n >= 0")
    if n == 0:
        return Polynomial.constant(1)
    p = Polynomial.x()
    shift = Fraction(n, 2)
    for j in range(1, n):
        p = p * Polynomial((shift - j, 1))
    return p


def delta(p: Polynomial) -> Polynomial:
    """Central difference p(x + 1/2) - p(x - 1/2)."""
    return poly_compose_affine(p, 1, HALF) - poly_compose_affine(p, 1, -HALF)


def delta_iter(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("delta_iter needs k >= 0")
    for _ in range(k):
        p = delta(p)
    return p


def delta_power_sum(p: Polynomial, k: int) -> Polynomial:
    """k-th central difference by the closed binomial sum over shifts l - k/2."""
    if k < 0:
        raise ValueError("delta_power_sum needs k >= 0")
    out = Polynomial()
    for l in range(k + 1):
        sign = -1 if (k - l) % 2 else 1
        out = out + poly_compose_affine(p, 1, Fraction(2 * l - k, 2)) * (sign * math.comb(k, l))
    return out


@dataclass(frozen=True)
class CentralExpansion:
    """Coefficients A_k of p(x) = sum_k A_k (x - b)^[k]."""

    base_point: Fraction
    coeffs: tuple[Fraction, ...]

    def reconstruct(self) -> Polynomial:
        out = Polynomial()
        for k, a in enumerate(self.coeffs):
            if a:
                out = out + poly_compose_affine(central_factorial(k), 1, -self.base_point) * a
        return out


def to_central_basis(p: Polynomial, b=0) -> CentralExpansion:
    """Expand ``p`` around ``b``: A_k = (delta^k p)(b) / k!."""
    b = as_rational(b)
    if p.is_zero():
        return CentralExpansion(b, ())
    coeffs = []
    current = p
    for k in range(int(p.degree) + 1):
        coeffs.append(poly_eval(current, b) / math.factorial(k))
        current = delta(current)
    return CentralExpansion(b, tuple(coeffs))


@dataclass(frozen=True)
class CentralFactorialTable:
    """Triangle of central factorial numbers of the second kind, rows 0..max_n."""

    max_n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __call__(self, n: int, k: int) -> Fraction:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"n={n} outside table (max_n={self.max_n})")
        if k < 0 or k > n:
            return Fraction(0)
        return self.entries[n][k]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def central_difference_series(order: int) -> Series:
    """e^(t/2) - e^(-t/2)."""
    e = exp_series(order)
    return series_scale_arg(e, HALF) - series_scale_arg(e, -HALF)


def central_T_column(k: int, order: int) -> Series:
    """(1/k!) (e^(t/2) - e^(-t/2))^k, whose EGF coefficients are T(n, k)."""
    return series_pow_int(central_difference_series(order), k) / math.factorial(k)


@lru_cache(maxsize=32)
def central_T(max_n: int) -> CentralFactorialTable:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    columns = [central_T_column(k, max_n) for k in range(max_n + 1)]
    entries = tuple(
        tuple(columns[k].egf_coeff(n) for k in range(n + 1)) for n in range(max_n + 1)
    )
    return CentralFactorialTable(max_n, entries)
