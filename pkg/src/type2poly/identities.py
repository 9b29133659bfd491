"""Coefficient-exact checks of the Changhee/Daehee/Euler/Bernoulli identities.

Polynomial identities are compared as elements of Q[x], never by sampling.
Each ``verify_*`` returns a :class:`VerificationReport`; failures are
reported rather than raised.  By default checking stops at the first
mismatch; ``verbose=True`` collects every mismatch.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import centralfact, families
from .algebra import Polynomial, Series, exp_series, format_rational, poly_compose_affine, series_scale_arg
from .families import Family

DEFAULT_N = 12
DEFAULT_K_MAX = 6
DEFAULT_ALPHAS = tuple(range(-3, 4))

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "max_order", "passed", "first_failure"],
    "properties": {
        "identity": {"type": "string"},
        "max_order": {"type": "integer"},
        "passed": {"type": "boolean"},
        "first_failure": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["n", "k", "lhs", "rhs"],
                    "properties": {
                        "n": {"type": "integer"},
                        "k": {"type": ["integer", "null"]},
                        "lhs": {"type": "string"},
                        "rhs": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "failures": {"type": "array"},
    },
    "additionalProperties": False,
}


def render(value) -> str:
    if isinstance(value, Polynomial):
        return str(value)
    return format_rational(Fraction(value))


@dataclass(frozen=True)
class Failure:
    n: int
    k: Optional[int]
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    max_order: int
    passed: bool
    first_failure: Optional[Failure] = None
    elapsed: float = 0.0
    failures: tuple[Failure, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must be true exactly when there is no failure")

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "max_order": self.max_order,
            "passed": self.passed,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
        }
        if verbose:
            out["failures"] = [f.to_dict() for f in self.failures]
        return out

    def content(self) -> dict:
        """Report content without timing, for determinism checks."""
        return self.to_dict(verbose=True)




def _run(identity: str, max_order: int, comparisons: Iterable[tuple], verbose: bool) -> VerificationReport:
    start = time.perf_counter()
    failures = []
    for n, k, lhs, rhs in comparisons:
        if lhs != rhs:
            failures.append(Failure(n, k, render(lhs), render(rhs)))
            if not verbose:
                break
    return VerificationReport(
        identity=identity,
        max_order=max_order,
        passed=not failures,
        first_failure=failures[0] if failures else None,
        elapsed=time.perf_counter() - start,
        failures=tuple(failures),
    )


def stirling_transform(triangle, values, n: int):
    """sum_l triangle[n][l] * values[l]."""
    row = triangle[n]
    acc = Polynomial() if isinstance(values[0], Polynomial) else Fraction(0)
    for l in range(n + 1):
        if row[l]:
            acc = acc + values[l] * row[l]
    return acc


def _table(family: Family, n: int, order: int = 1):
    return families.family_table(family, n, order).values


def _check_nonneg(**params):
    for name, value in params.items():
        if value < 0:
            raise ValueError(f"{name} must be >= 0")


# ---------------------------------------------------------------------------


def verify_thm1(N: int = DEFAULT_N, verbose: bool = False) -> VerificationReport:
    """c_n(x) = sum_l E*_l(x) S1(n, l)."""
    _check_nonneg(N=N)

    def comparisons():
        c = _table(Family.TYPE2_CHANGHEE, N)
        e2 = _table(Family.TYPE2_EULER, N)
        s1 = families.stirling1(N)
        for n in range(N + 1):
            yield n, None, c[n], stirling_transform(s1, e2, n)

    return _run("thm1", N, comparisons(), verbose)


def verify_thm2(N: int = DEFAULT_N, verbose: bool = False) -> VerificationReport:
    """E*_n(x) = sum_l S2(n, l) c_l(x)."""
    _check_nonneg(N=N)

    def comparisons():
        c = _table(Family.TYPE2_CHANGHEE, N)
        e2 = _table(Family.TYPE2_EULER, N)
        s2 = families.stirling2(N)
        for n in range(N + 1):
            yield n, None, e2[n], stirling_transform(s2, c, n)

    return _run("thm2", N, comparisons(), verbose)


def verify_thm3(N: int = DEFAULT_N, k_max: int = DEFAULT_K_MAX, verbose: bool = False) -> VerificationReport:
    """T(n,k) = 2^(k-n)/k! sum_l S2(n,l) c_l^(-k) for n >= k; the sum vanishes for n < k."""
    _check_nonneg(N=N, k_max=k_max)

    def comparisons():
        table = centralfact.central_T(N)
        s2 = families.stirling2(N)
        for k in range(k_max + 1):
            numbers = families.family_table(Family.TYPE2_CHANGHEE, N, -k).numbers()
            for n in range(N + 1):
                total = stirling_transform(s2, numbers, n)
                if n >= k:
                    yield n, k, table(n, k), Fraction(2) ** (k - n) / math.factorial(k) * total
                else:
                    yield n, k, total, Fraction(0)

    return _run("thm3", N, comparisons(), verbose)


def eq24_column(k: int, order: int) -> Series:
    """e^(-k t/2) (e^t - 1)^k / k!, the un-symmetrised form of the T(n,k) generating function."""
    e = exp_series(order)
    return series_scale_arg(e, Fraction(-k, 2)) * (e - Series.one(order)) ** k / math.factorial(k)


def verify_prop1(N: int = DEFAULT_N, k_max: int = DEFAULT_K_MAX, verbose: bool = False) -> VerificationReport:
    """(1/k!)(e^(t/2) - e^(-t/2))^k = sum_n T(n,k) t^n/n!, with T read off the central basis of x^n."""
    _check_nonneg(N=N, k_max=k_max)

    def comparisons():
        table = centralfact.central_T(N)
        for k in range(k_max + 1):
            column = eq24_column(k, N)
            for n in range(N + 1):
                yield n, k, column.egf_coeff(n), table(n, k)
        for n in range(N + 1):
            expansion = centralfact.to_central_basis(Polynomial.monomial(n), 0)
            for k in range(min(n, k_max) + 1):
                yield n, k, expansion.coeffs[k], table(n, k)

    return _run("prop1", N, comparisons(), verbose)


def verify_thm4(N: int = DEFAULT_N, verbose: bool = False) -> VerificationReport:
    """b_n(x) = sum_l S2(n,l) d_l(x), and at x = 0."""
    _check_nonneg(N=N)

    def comparisons():
        b = _table(Family.TYPE2_BERNOULLI, N)
        d = _table(Family.TYPE2_DAEHEE, N)
        s2 = families.stirling2(N)
        for n in range(N + 1):
            yield n, None, b[n], stirling_transform(s2, d, n)
        b0 = [p(0) for p in b]
        d0 = [p(0) for p in d]
        for n in range(N + 1):
            yield n, None, b0[n], stirling_transform(s2, d0, n)

    return _run("thm4", N, comparisons(), verbose)


def verify_thm5(N: int = DEFAULT_N, verbose: bool = False) -> VerificationReport:
    """d_n(x) = sum_l S1(n,l) b_l(x), and at x = 0."""
    _check_nonneg(N=N)

    def comparisons():
        b = _table(Family.TYPE2_BERNOULLI, N)
        d = _table(Family.TYPE2_DAEHEE, N)
        s1 = families.stirling1(N)
        for n in range(N + 1):
            yield n, None, d[n], stirling_transform(s1, b, n)
        b0 = [p(0) for p in b]
        d0 = [p(0) for p in d]
        for n in range(N + 1):
            yield n, None, d0[n], stirling_transform(s1, b0, n)

    return _run("thm5", N, comparisons(), verbose)


def verify_thm6(N: int = DEFAULT_N, k_max: int = DEFAULT_K_MAX, verbose: bool = False) -> VerificationReport:
    """2^(n+k) T(n+k,k) = C(n+k,k) sum_l d_l^(-k) S2(n,l)."""
    _check_nonneg(N=N, k_max=k_max)

    def comparisons():
        table = centralfact.central_T(N + k_max)
        s2 = families.stirling2(N)
        for k in range(k_max + 1):
            d = families.family_table(Family.TYPE2_DAEHEE, N, -k).numbers()
            for n in range(N + 1):
                lhs = 2 ** (n + k) * table(n + k, k)
                yield n, k, lhs, math.comb(n + k, k) * stirling_transform(s2, d, n)

    return _run("thm6", N, comparisons(), verbose)


def verify_thm7(N: int = DEFAULT_N, k_max: int = DEFAULT_K_MAX, verbose: bool = False) -> VerificationReport:
    """2^(n+k) T(n+k,k) = C(n+k,k) b_n^(-k)."""
    _check_nonneg(N=N, k_max=k_max)

    def comparisons():
        table = centralfact.central_T(N + k_max)
        for k in range(k_max + 1):
            b = families.family_table(Family.TYPE2_BERNOULLI, N, -k).numbers()
            for n in range(N + 1):
                yield n, k, 2 ** (n + k) * table(n + k, k), math.comb(n + k, k) * b[n]

    return _run("thm7", N, comparisons(), verbose)


def verify_cor1(N: int = DEFAULT_N, alpha_set: Iterable[int] = DEFAULT_ALPHAS, verbose: bool = False) -> VerificationReport:
    """b_n^(a)(x) = sum_l S2(n,l) d_l^(a)(x) and d_n^(a)(x) = sum_l S1(n,l) b_l^(a)(x).

    The failure's ``k`` field carries the order a.
    """
    _check_nonneg(N=N)
    alphas = tuple(alpha_set)

    def comparisons():
        s1 = families.stirling1(N)
        s2 = families.stirling2(N)
        for a in alphas:
            b = _table(Family.TYPE2_BERNOULLI, N, a)
            d = _table(Family.TYPE2_DAEHEE, N, a)
            for n in range(N + 1):
                yield n, a, b[n], stirling_transform(s2, d, n)
            for n in range(N + 1):
                yield n, a, d[n], stirling_transform(s1, b, n)

    return _run("cor1", N, comparisons(), verbose)


def verify_scalings(N: int = DEFAULT_N, verbose: bool = False) -> VerificationReport:
    """E*_n(x) = 2^n E_n((x+1)/2), b_n(x) = 2^(n-1) B_n((x+1)/2),
    E_n(x) = sum_l S2(n,l) Ch_l(x), Ch_n(x) = sum_l E_l(x) S1(n,l)."""
    _check_nonneg(N=N)
    half = Fraction(1, 2)

    def comparisons():
        e = _table(Family.EULER, N)
        e2 = _table(Family.TYPE2_EULER, N)
        bern = _table(Family.BERNOULLI, N)
        b2 = _table(Family.TYPE2_BERNOULLI, N)
        ch = _table(Family.CHANGHEE, N)
        s1 = families.stirling1(N)
        s2 = families.stirling2(N)
        for n in range(N + 1):
            yield n, None, e2[n], poly_compose_affine(e[n], half, half) * 2**n
        for n in range(N + 1):
            yield n, None, b2[n], poly_compose_affine(bern[n], half, half) * Fraction(2) ** (n - 1)
        for n in range(N + 1):
            yield n, None, e[n], stirling_transform(s2, ch, n)
        for n in range(N + 1):
            yield n, None, ch[n], stirling_transform(s1, e, n)

    return _run("scalings", N, comparisons(), verbose)


IDENTITY_NAMES = ("thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7", "prop1", "cor1", "scalings")


def run_identity(
    name: str,
    N: int = DEFAULT_N,
    k_max: int = DEFAULT_K_MAX,
    alpha_set: Iterable[int] = DEFAULT_ALPHAS,
    verbose: bool = False,
) -> VerificationReport:
    runners: dict[str, Callable[[], VerificationReport]] = {
        "thm1": lambda: verify_thm1(N, verbose),
        "thm2": lambda: verify_thm2(N, verbose),
        "thm3": lambda: verify_thm3(N, k_max, verbose),
        "thm4": lambda: verify_thm4(N, verbose),
        "thm5": lambda: verify_thm5(N, verbose),
        "thm6": lambda: verify_thm6(N, k_max, verbose),
        "thm7": lambda: verify_thm7(N, k_max, verbose),
        "prop1": lambda: verify_prop1(N, k_max, verbose),
        "cor1": lambda: verify_cor1(N, alpha_set, verbose),
        "scalings": lambda: verify_scalings(N, verbose),
    }
    if name not in runners:
        raise ValueError(f"unknown identity {name!r}")
    return runners[name]()


def verify_all(
    N: int = DEFAULT_N,
    k_max: int = DEFAULT_K_MAX,
    alpha_set: Iterable[int] = DEFAULT_ALPHAS,
    verbose: bool = False,
) -> list[VerificationReport]:
    alphas = tuple(alpha_set)
    return [run_identity(name, N, k_max, alphas, verbose) for name in IDENTITY_NAMES]
