"""Exact scalars, dense polynomials in x, and truncated power series in t.

Scalars are :class:`fractions.Fraction`.  A :class:`Series` stores plain
Taylor coefficients ``coeffs[n]`` of ``t**n`` up to a fixed truncation order;
the exponential-generating-function value ``n! * coeffs[n]`` is read through
:meth:`Series.egf_coeff`.  Coefficients live either in the rationals
(``ring == "scalar"``) or in Q[x] (``ring == "polynomial"``).

Every value is immutable and every operation returns a new value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

SCALAR = "scalar"
POLYNOMIAL = "polynomial"
RINGS = (SCALAR, POLYNOMIAL)

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for power-series errors."""


class RingMismatchError(SeriesError, TypeError):
    pass


class NonInvertibleError(SeriesError, ZeroDivisionError):
    """Raised when a series (or constant term) has no inverse."""


class CompositionError(SeriesError):
    """Raised when the inner series of a composition has a nonzero constant term."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Canonical lossless rendering: ``"p/q"``, or ``"p"`` when ``q == 1``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Dense univariate polynomial over Q, ascending coefficients, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c=1) -> Polynomial:
        if n < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * n + [c])

    @property
    def degree(self) -> float | int:
        """Index of the last nonzero coefficient; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return _POLY_ZERO
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _POLY_ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result, base = _POLY_ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(self.coeffs)

    def __call__(self, v) -> Fraction:
        return poly_eval(self, v)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


_POLY_ZERO = Polynomial()
_POLY_ONE = Polynomial((1,))


def poly_eval(p: Polynomial, v) -> Fraction:
    """Exact Horner evaluation of ``p`` at the rational ``v``."""
    v = as_rational(v)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def poly_compose_affine(p: Polynomial, s, u) -> Polynomial:
    """Expand ``p(s*x + u)`` in the monomial basis."""
    inner = Polynomial((as_rational(u), as_rational(s)))
    acc = _POLY_ZERO
    for c in reversed(p.coeffs):
        acc = acc * inner + c
    return acc


def poly_shift(p: Polynomial, h) -> Polynomial:
    """``p(x + h)``."""
    return poly_compose_affine(p, 1, h)


# ---------------------------------------------------------------------------
# Truncated power series


def _zero(ring: str):
    return Fraction(0) if ring == SCALAR else _POLY_ZERO


def _one(ring: str):
    return Fraction(1) if ring == SCALAR else _POLY_ONE


def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, Fraction) else c.is_zero()


def _coerce_coeff(c, ring: str):
    if ring == SCALAR:
        if isinstance(c, Polynomial):
            if not c.is_constant():
                raise RingMismatchError("non-constant polynomial in a scalar series")
            return c.constant_term()
        return as_rational(c)
    if isinstance(c, Polynomial):
        return c
    return Polynomial((as_rational(c),))


def _invert_constant(c, ring: str):
    if ring == SCALAR:
        if c == 0:
            raise NonInvertibleError("constant term is zero")
        return 1 / c
    if not c.is_constant() or c.is_zero():
        raise NonInvertibleError(f"constant term {c} is not a nonzero constant")
    return 1 / c.constant_term()


class Series:
    """Power series in t truncated after ``t**order``."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: str = SCALAR):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        cs = tuple(_coerce_coeff(c, ring) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = cs
        self.ring = ring

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int, ring: str = SCALAR) -> Series:
        return cls([c] + [0] * order, ring)

    @classmethod
    def one(cls, order: int, ring: str = SCALAR) -> Series:
        return cls.constant(1, order, ring)

    @classmethod
    def zero(cls, order: int, ring: str = SCALAR) -> Series:
        return cls.constant(0, order, ring)

    @classmethod
    def variable(cls, order: int, ring: str = SCALAR) -> Series:
        """The series ``t`` (requires ``order >= 1`` to be visible)."""
        return cls([0, 1][: order + 1] + [0] * max(0, order - 1), ring)

    @classmethod
    def from_egf(cls, values: Sequence, ring: str = SCALAR) -> Series:
        """Build from EGF values ``a_n`` of ``sum a_n t**n / n!``."""
        return cls([_coerce_coeff(v, ring) / math.factorial(n) for n, v in enumerate(values)], ring)

    # access -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def egf_coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n] * math.factorial(n)

    def egf_coeffs(self) -> list:
        return [self.egf_coeff(n) for n in range(len(self.coeffs))]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], self.ring)

    def lift(self) -> Series:
        """View a scalar series as a series over Q[x]."""
        if self.ring == POLYNOMIAL:
            return self
        return Series(self.coeffs, POLYNOMIAL)

    def evaluate_x(self, v) -> Series:
        """Substitute ``x = v`` in every coefficient of a polynomial-ring series."""
        if self.ring == SCALAR:
            return self
        return Series([poly_eval(c, v) for c in self.coeffs], SCALAR)

    # operators ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series):
            return series_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Series):
            return series_add(self, -other)
        return NotImplemented

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, Polynomial)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Series):
            return series_div(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int) -> Series:
        return series_pow_int(self, k)

    def __call__(self, inner: Series) -> Series:
        return series_compose(self, inner)

    def scale(self, c) -> Series:
        """Multiply every coefficient by the ring element (or rational) ``c``."""
        if isinstance(c, Polynomial) and self.ring == SCALAR:
            return Series([c * a for a in self.coeffs], POLYNOMIAL)
        return Series([a * c for a in self.coeffs], self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) if isinstance(c, Polynomial) else format_rational(c) for c in self.coeffs)
        return f"Series([{shown}], ring={self.ring!r})"


def _check_ring(a: Series, b: Series) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")


def series_add(a: Series, b: Series) -> Series:
    _check_ring(a, b)
    n = min(a.order, b.order)
    return Series([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)], a.ring)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    _check_ring(a, b)
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    nz_b = [j for j in range(n + 1) if not _is_zero(bc[j])]
    out = [_zero(a.ring)] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if _is_zero(ai):
            continue
        for j in nz_b:
            if i + j > n:
                break
            out[i + j] = out[i + j] + ai * bc[j]
    return Series(out, a.ring)


def series_div(a: Series, b: Series) -> Series:
    """Quotient ``q`` with ``q * b == a`` through ``min(a.order, b.order)``.

    Raises NonInvertibleError if the constant term of ``b`` is not a unit.
    """
    _check_ring(a, b)
    n = min(a.order, b.order)
    inv = _invert_constant(b.coeffs[0], b.ring)
    bc = b.coeffs
    nz_b = [j for j in range(1, n + 1) if not _is_zero(bc[j])]
    q = []
    for m in range(n + 1):
        acc = a.coeffs[m]
        for j in nz_b:
            if j > m:
                break
            acc = acc - bc[j] * q[m - j]
        q.append(acc * inv)
    return Series(q, a.ring)


def series_reciprocal(a: Series) -> Series:
    return series_div(Series.one(a.order, a.ring), a)


def series_pow_int(a: Series, k: int) -> Series:
    """Integer power; negative powers go through the reciprocal. ``a**0 == 1``."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("series powers must be integers")
    if k < 0:
        try:
            base = series_reciprocal(a)
        except NonInvertibleError as exc:
            raise NonInvertibleError(f"negative power of a non-invertible series: {exc}") from None
        k = -k
    else:
        base = a
    result = Series.one(a.order, a.ring)
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_compose(f: Series, g: Series) -> Series:
    """``f(g(t))`` by Horner accumulation; ``g`` must have zero constant term.

    Costs ``order`` series products, i.e. O(N^3) ring multiplications.
    A scalar ``f`` composed with a polynomial-ring ``g`` yields a polynomial-ring series.
    """
    if not _is_zero(g.coeffs[0]):
        raise CompositionError("inner series must have zero constant term")
    if f.ring != g.ring:
        if f.ring == SCALAR:
            f = f.lift()
        else:
            g = g.lift()
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(f.coeffs[n], n, f.ring)
    for i in range(n - 1, -1, -1):
        acc = series_mul(acc, g)
        acc = Series((acc.coeffs[0] + f.coeffs[i],) + acc.coeffs[1:], f.ring)
    return acc


def series_derivative(a: Series) -> Series:
    """d/dt; the result has order ``a.order - 1``."""
    if a.order == 0:
        raise SeriesError("derivative of an order-0 series has no valid coefficients")
    return Series([i * a.coeffs[i] for i in range(1, a.order + 1)], a.ring)


def series_integral(a: Series) -> Series:
    """Antiderivative with zero constant term; order grows by one."""
    return Series([_zero(a.ring)] + [a.coeffs[i] / (i + 1) for i in range(a.order + 1)], a.ring)


def series_divide_by_t(a: Series) -> Series:
    """Exact division by ``t``: drops a zero constant term and lowers the order by one."""
    if not _is_zero(a.coeffs[0]):
        raise NonInvertibleError("series is not divisible by t (nonzero constant term)")
    if a.order == 0:
        raise SeriesError("an order-0 series carries no information after division by t")
    return Series(a.coeffs[1:], a.ring)


def series_log1p_of(g: Series) -> Series:
    """``log(1 + g)`` for ``g`` with zero constant term.

    Computed as the integral of ``g' / (1 + g)``; equal to the Mercator sum
    ``sum (-1)**(k+1) g**k / k`` through the truncation order.
    """
    if not _is_zero(g.coeffs[0]):
        raise CompositionError("log1p_of needs zero constant term")
    if g.order == 0:
        return Series.zero(0, g.ring)
    one_plus = Series((_one(g.ring),) + g.coeffs[1:], g.ring)
    q = series_div(series_derivative(g), one_plus.truncate(g.order - 1))
    return series_integral(q)


def series_exp_of(g: Series) -> Series:
    """``exp(g)`` for ``g`` with zero constant term.

    Uses ``h' = g' h``: ``n h_n = sum_{k=1..n} k g_k h_{n-k}``, O(N^2) ring products.
    """
    if not _is_zero(g.coeffs[0]):
        raise CompositionError("exp_of needs zero constant term")
    gc = g.coeffs
    nz = [k for k in range(1, g.order + 1) if not _is_zero(gc[k])]
    h = [_one(g.ring)]
    for n in range(1, g.order + 1):
        acc = _zero(g.ring)
        for k in nz:
            if k > n:
                break
            acc = acc + gc[k] * h[n - k] * k
        h.append(acc / n)
    return Series(h, g.ring)


def series_scale_arg(a: Series, c) -> Series:
    """``a(c*t)``: coefficient n is multiplied by ``c**n``."""
    c = as_rational(c)
    out = []
    power = Fraction(1)
    for coeff in a.coeffs:
        out.append(coeff * power)
        power *= c
    return Series(out, a.ring)


# ---------------------------------------------------------------------------
# Elementary series


def exp_series(order: int, ring: str = SCALAR) -> Series:
    """``e**t``."""
    return Series([Fraction(1, math.factorial(n)) for n in range(order + 1)], ring)


def log1p_series(order: int, ring: str = SCALAR) -> Series:
    """``log(1 + t)`` (Mercator series)."""
    return Series([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)], ring)


def binomial_series(order: int) -> Series:
    """``(1 + t)**x`` over Q[x], realised as ``exp(x * log(1 + t))``."""
    x_log = log1p_series(order, POLYNOMIAL).scale(Polynomial.x())
    return series_exp_of(x_log)


def exp_xt_series(order: int) -> Series:
    """``e**(x t)`` over Q[x]."""
    return series_exp_of(Series.variable(order, POLYNOMIAL).scale(Polynomial.x()))
