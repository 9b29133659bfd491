import math
from fractions import Fraction

import jsonschema
import pytest

from type2poly import families, identities
from type2poly.algebra import Polynomial, poly_compose_affine
from type2poly.centralfact import central_T
from type2poly.families import Family, family_numbers, family_table
from type2poly.identities import (
    REPORT_SCHEMA,
    VerificationReport,
    stirling_transform,
    verify_all,
    verify_cor1,
    verify_prop1,
    verify_scalings,
    verify_thm1,
    verify_thm2,
    verify_thm3,
    verify_thm4,
    verify_thm5,
    verify_thm6,
    verify_thm7,
)
from type2poly.oracle import oracle_stirling2

F = Fraction


@pytest.mark.parametrize(
    "check",
    [verify_thm1, verify_thm2, verify_thm4, verify_thm5, verify_thm6, verify_thm7, verify_prop1, verify_cor1, verify_scalings],
)
def test_identity_passes_at_default_scale(check):
    report = check()
    assert report.passed, report.first_failure
    assert report.max_order == identities.DEFAULT_N
    jsonschema.validate(report.to_dict(), REPORT_SCHEMA)


def test_thm1_small_cases():
    e2 = family_numbers(Family.TYPE2_EULER, 2)
    c = family_numbers(Family.TYPE2_CHANGHEE, 2)
    s1 = families.stirling1(2)
    assert c[0] == e2[0] * s1[0][0] == 1
    assert c[2] == e2[2] * 1 + e2[1] * (-1) == -1
    assert verify_thm1(0).passed


def test_thm3_vanishing_branch_fails_as_stated():
    report = verify_thm3()
    assert not report.passed
    assert (report.first_failure.n, report.first_failure.k) == (0, 1)
    assert (report.first_failure.lhs, report.first_failure.rhs) == ("1", "0")
    # k = 0 alone is consistent: T(n, 0) = [n == 0]
    assert verify_thm3(12, 0).passed


def _cosh_half_power_egf(k, n):
    # cosh(t/2)^k = 2^-k sum_j C(k,j) e^{(j - k/2) t}
    return F(1, 2**k) * sum(math.comb(k, j) * F(2 * j - k, 2) ** n for j in range(k + 1))


def _sinh_half_power_egf(k, n):
    return F(1, 2**k) * sum((-1) ** (k - j) * math.comb(k, j) * F(2 * j - k, 2) ** n for j in range(k + 1))


def test_negative_order_changhee_substitution_gives_cosh():
    """Substituting t -> e^{t/2} - 1 into the order -k type 2 Changhee series gives cosh(t/2)^k.

    Checked against a closed form that uses neither the series engine nor
    the family builders; the sinh form needed for T(n,k) differs already at n = 0.
    """
    for k in range(0, 5):
        c = family_numbers(Family.TYPE2_CHANGHEE, 10, -k)
        for n in range(11):
            total = sum(oracle_stirling2(n, l) * c[l] for l in range(n + 1))
            assert total == 2**n * _cosh_half_power_egf(k, n)
    T = central_T(10)
    for k in range(0, 5):
        for n in range(k, 11):
            assert F(math.factorial(k), 2**k) * T(n, k) == _sinh_half_power_egf(k, n)
    assert _cosh_half_power_egf(1, 0) != _sinh_half_power_egf(1, 0)


def test_prop1_examples():
    assert identities.eq24_column(0, 5).egf_coeffs() == [1, 0, 0, 0, 0, 0]
    assert identities.eq24_column(2, 6).egf_coeff(4) == central_T(6)(4, 2) == 1
    assert identities.eq24_column(1, 4).egf_coeff(3) == F(1, 4)


def test_thm4_thm5_small_cases():
    b = family_numbers(Family.TYPE2_BERNOULLI, 2)
    d = family_numbers(Family.TYPE2_DAEHEE, 2)
    assert b[0] == d[0] == F(1, 2)
    s1 = families.stirling1(2)
    assert d[2] == s1[2][1] * b[1] + s1[2][2] * b[2] == F(-1, 6)


def test_thm7_examples():
    T = central_T(12)
    for k in range(7):
        b = family_numbers(Family.TYPE2_BERNOULLI, 3, -k)
        assert b[0] == 2**k
        assert 2**k * T(k, k) == b[0]
    b = family_numbers(Family.TYPE2_BERNOULLI, 2, -1)
    assert 2**3 * T(3, 1) == 2 == 3 * b[2]


def test_thm6_thm7_joint_consequence():
    s2 = families.stirling2(10)
    for k in range(6):
        d = family_numbers(Family.TYPE2_DAEHEE, 10, -k)
        b = family_numbers(Family.TYPE2_BERNOULLI, 10, -k)
        for n in range(11):
            assert stirling_transform(s2, d, n) == b[n]


def test_cor1_special_orders():
    x = Polynomial.x()
    b0 = family_table(Family.TYPE2_BERNOULLI, 8, 0)
    d0 = family_table(Family.TYPE2_DAEHEE, 8, 0)
    for n in range(9):
        assert b0[n] == x**n
        assert d0[n] == families.binomial_polynomial(n)
    assert verify_cor1(10, [0]).passed
    assert family_table(Family.TYPE2_BERNOULLI, 8, 1) == family_table(Family.TYPE2_BERNOULLI, 8)
    assert verify_cor1(12, [1]).passed == verify_thm4().passed == verify_thm5().passed is True
    assert verify_cor1(10, [-2]).passed


def test_scalings_example():
    b2 = family_table(Family.TYPE2_BERNOULLI, 2)[2]
    bern2 = family_table(Family.BERNOULLI, 2)[2]
    assert b2 == poly_compose_affine(bern2, F(1, 2), F(1, 2)) * 2


def test_theorem_pairs_are_mutually_inverse():
    s1, s2 = families.stirling1(12), families.stirling2(12)
    for fam_a, fam_b in [(Family.TYPE2_CHANGHEE, Family.TYPE2_EULER), (Family.TYPE2_DAEHEE, Family.TYPE2_BERNOULLI)]:
        a = family_table(fam_a, 12).values
        forward = [stirling_transform(s2, a, n) for n in range(13)]
        assert forward == list(family_table(fam_b, 12).values)
        back = [stirling_transform(s1, forward, n) for n in range(13)]
        assert back == list(a)


def test_reports_are_deterministic():
    first = [r.content() for r in verify_all(8, 3, (-1, 0, 2))]
    second = [r.content() for r in verify_all(8, 3, (-1, 0, 2))]
    assert first == second


def test_corrupted_stirling_table_breaks_reports(monkeypatch):
    original = families.stirling1

    def corrupted(max_n):
        rows = [list(r) for r in original(max_n)]
        if max_n >= 3:
            rows[3][2] += 1
        return tuple(tuple(r) for r in rows)

    monkeypatch.setattr(families, "stirling1", corrupted)
    r1 = verify_thm1()
    assert not r1.passed and r1.first_failure.n == 3
    assert not verify_thm5().passed
    assert not verify_scalings().passed
    verbose = verify_thm5(verbose=True)
    # the polynomial and x = 0 forms both fail at n = 3
    assert [f.n for f in verbose.failures] == [3, 3]
    assert verbose.failures[0] == verbose.first_failure
    assert len(verbose.failures) > 1 and verbose.failures[0] == verbose.first_failure


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", 1, passed=True, first_failure=identities.Failure(0, None, "1", "2"))


def test_negative_parameters_rejected():
    with pytest.raises(ValueError):
        verify_thm6(-1)
    with pytest.raises(ValueError):
        identities.run_identity("thm9")
