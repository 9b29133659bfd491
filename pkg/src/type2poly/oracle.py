"""Brute-force reference computations for cross-checking.

Nothing here imports the series engine or the family builders; values are
produced by enumeration and plain list arithmetic so that agreement with the
main modules is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

STIRLING2_CAP = 12
STIRLING1_CAP = 9
CENTRAL_T_CAP = 12


def set_partitions(n: int):
    """Yield partitions of range(n) as restricted growth strings."""
    if n == 0:
        yield ()
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([0], 0)


def oracle_stirling2(n: int, k: int) -> int:
    """Count set partitions of an n-set into k nonempty blocks."""
    if n > STIRLING2_CAP:
        raise ValueError(f"oracle_stirling2 is capped at n={STIRLING2_CAP}")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return sum(1 for rgs in set_partitions(n) if len(set(rgs)) == k)


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def oracle_stirling1(n: int, k: int) -> int:
    """Signed count of permutations of n elements with exactly k cycles."""
    if n > STIRLING1_CAP:
        raise ValueError(f"oracle_stirling1 is capped at n={STIRLING1_CAP}")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    count = sum(1 for p in permutations(range(n)) if cycle_count(p) == k)
    return (-1) ** (n - k) * count


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def central_factorial_coeffs(n: int) -> list[Fraction]:
    """Ascending coefficients of x^[n], built as an explicit product of linear factors."""
    if n == 0:
        return [Fraction(1)]
    # roots of x^[n]: 0 and -(n/2 - j) for j = 1..n-1
    coeffs = [Fraction(0), Fraction(1)]
    for j in range(1, n):
        coeffs = _poly_mul(coeffs, [Fraction(n, 2) - j, Fraction(1)])
    return coeffs


def oracle_central_T(n: int, k: int) -> Fraction:
    """Solve x^n = sum_k T(n,k) x^[k] by back-substitution on the monic basis."""
    if n > CENTRAL_T_CAP:
        raise ValueError(f"oracle_central_T is capped at n={CENTRAL_T_CAP}")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    residual = [Fraction(0)] * n + [Fraction(1)]
    solution = [Fraction(0)] * (n + 1)
    for m in range(n, -1, -1):
        c = residual[m]
        solution[m] = c
        if c:
            basis = central_factorial_coeffs(m)
            for i, b in enumerate(basis):
                residual[i] -= c * b
    return solution[k]


def oracle_compose(f, g, N: int | None = None):
    """f(g) by summing f_k * g^k with schoolbook powers of g.

    ``f`` and ``g`` are scalar series (anything exposing ``coeffs``) or plain
    coefficient lists.  Returns a :class:`~type2poly.algebra.Series` only as a
    container for comparison.
    """
    fc = [Fraction(c) for c in getattr(f, "coeffs", f)]
    gc = [Fraction(c) for c in getattr(g, "coeffs", g)]
    if gc[0] != 0:
        raise ValueError("oracle_compose needs g(0) == 0")
    n = min(len(fc), len(gc)) - 1 if N is None else N
    result = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(n + 1):
        if k < len(fc):
            for i in range(n + 1):
                result[i] += fc[k] * power[i]
        nxt = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            for j in range(n + 1 - i):
                if j < len(gc):
                    nxt[i + j] += power[i] * gc[j]
        power = nxt

    from .algebra import Series

    return Series(result)
