"""Exact single-log linear forms: expansions, oracle agreement, inclusions,
symmetry."""

import math
import random
from fractions import Fraction as F

import pytest
from mpmath import mp, mpf, fabs

from logirr import polyroots as pr
from logirr.exact import binomial, lcm_upto, to_mpf
from logirr.logforms import (
    HGParams,
    inclusion_check,
    inclusion_scaling,
    integral_value,
    linear_form,
    partial_fractions,
    symmetry_check,
    term_ratio,
)
from logirr.valuation import phi_denominator


def test_params_validation():
    with pytest.raises(ValueError):
        HGParams(3, 0, 2, F(2))  # m > n1
    with pytest.raises(ValueError):
        HGParams(0, 3, 2, F(2))  # n0 > n1
    with pytest.raises(ValueError):
        HGParams(1, 1, 1, F(5, 2))  # a outside (0, 2]
    p = HGParams(7, 6, 8, F(2))
    assert p.m_star == 6 and p.n0_star == 7


def test_partial_fractions_examples():
    assert partial_fractions(HGParams(0, 0, 0, F(2))).terms == ((0, F(1)),)
    assert partial_fractions(HGParams(1, 1, 1, F(2))).terms == ((1, F(-1)), (2, F(2)))
    pf = partial_fractions(HGParams(7, 6, 8, F(2)))
    for k, ak in pf.terms:
        assert ak == F((-1) ** ((13 - k) % 2) * binomial(k, 7) * binomial(8, k - 6))
    assert [k for k, _ in pf.terms] == list(range(7, 15))


def test_partial_fractions_reconstruct_term_ratio():
    rng = random.Random(4)
    cases = [(0, 0, 0), (1, 1, 1), (7, 6, 8), (2, 1, 2)]
    for _ in range(10):
        n1 = rng.randint(1, 10)
        n0 = rng.randint(0, n1)
        m = rng.randint(0, n1)
        cases.append((m, n0, n1))
    for m, n0, n1 in cases:
        params = HGParams(m, n0, n1, F(2))
        num, den = term_ratio(params)
        pf = partial_fractions(params)
        # exact equality of two rational functions of bounded degree: check
        # at more points than the difference numerator's degree
        points = [F(p, 3) for p in range(3 * (m + n0 + n1) + 12)]
        for t in points:
            lhs = pr.eval_exact(num, t) / pr.eval_exact(den, t)
            rhs = sum(ak / (t + k + 1) for k, ak in pf.terms)
            assert lhs == rhs, (m, n0, n1, t)


def test_linear_form_examples():
    f = linear_form(HGParams(0, 0, 0, F(2)))
    assert (f.log_coeff, f.const_coeff) == (F(1), F(0))
    f = linear_form(HGParams(1, 1, 1, F(2)))
    assert (f.log_coeff, f.const_coeff) == (F(3), F(-2))
    with mp.workdps(40):
        v = f.value(40).value
        assert abs(v - (3 * mp.log(2) - 2)) < mpf(10) ** -38


def test_linear_form_rejects_a_equal_one():
    with pytest.raises(ValueError):
        linear_form(HGParams(1, 1, 1, F(1)))


def test_rukhadze_log_coefficient_formula_and_sign():
    # the closed binomial-sum formula, alternating sign in n
    for n in (1, 2, 3):
        f = linear_form(HGParams(7 * n, 6 * n, 8 * n, F(2)))
        expected = (-1) ** n * sum(
            binomial(k, 7 * n) * binomial(8 * n, k - 6 * n)
            for k in range(7 * n, 14 * n + 1)
        )
        assert f.log_coeff == expected
        assert (f.log_coeff > 0) == (n % 2 == 0)


ORACLE_CASES = [
    (0, 0, 0, F(2)),
    (1, 1, 1, F(2)),
    (7, 6, 8, F(2)),
    (3, 2, 4, F(3, 2)),
    (2, 2, 3, F(4, 3)),
    (1, 0, 2, F(2, 3)),
]


@pytest.mark.parametrize("m,n0,n1,a", ORACLE_CASES)
def test_quadrature_oracle_agreement(m, n0, n1, a):
    params = HGParams(m, n0, n1, a)
    dps = 40
    exact = linear_form(params).value(dps).value
    oracle = integral_value(params, dps).value
    with mp.workdps(dps):
        assert fabs(exact - oracle) < mpf(10) ** (-(dps - 10))


def test_oracle_thirty_digits_high_tuple():
    params = HGParams(7, 6, 8, F(2))
    dps = 45
    exact = linear_form(params).value(dps).value
    oracle = integral_value(params, dps).value
    with mp.workdps(dps):
        assert fabs(exact - oracle) < mpf(10) ** -30


def test_integral_value_trivial():
    with mp.workdps(35):
        v = integral_value(HGParams(0, 0, 0, F(2)), 35).value
        assert fabs(v - mp.log(2)) < mpf(10) ** -33


def test_inclusion_examples():
    # (1,1,1;2): scaling (1-a)^3 = -1 flips the (3,-2) pair's sign
    b, c = inclusion_check(HGParams(1, 1, 1, F(2)))
    assert (abs(b), abs(c)) == (3, 2) and b * c < 0
    b, c = inclusion_check(HGParams(0, 0, 0, F(3, 2)))
    assert (b, c) == (-1, 0)
    # improved variant: the plain integer pair must be divisible by the
    # factorial-ratio denominator (brute-force denominator inspection)
    params = HGParams(7, 6, 8, F(2))
    plain = inclusion_check(params)
    improved = inclusion_check(params, improved=True)
    phi = phi_denominator(7, 6, 8)
    assert plain == tuple(x * phi for x in improved)


def test_inclusion_random_tuples_exact():
    rng = random.Random(17)
    done = 0
    while done < 60:
        n1 = rng.randint(1, 40)
        n0 = rng.randint(0, n1)
        m = rng.randint(0, n1)
        a = rng.choice([F(2), F(3, 2), F(4, 3), F(2, 3)])
        params = HGParams(m, n0, n1, a)
        inclusion_check(params)  # raises on violation
        if 2 * m <= n0 + n1:
            inclusion_check(params, improved=True)
        done += 1


def test_improved_inclusion_requires_valid_swap():
    with pytest.raises(ValueError):
        inclusion_check(HGParams(8, 0, 8, F(2)), improved=True)


def test_symmetry_examples():
    assert symmetry_check(HGParams(1, 1, 1, F(2)))      # fixed by the swap
    assert symmetry_check(HGParams(7, 6, 8, F(2)))      # vs (6,7,7)
    assert symmetry_check(HGParams(2, 1, 2, F(3, 2)))   # vs (1,2,1), relaxed path


def test_symmetry_random_tuples():
    rng = random.Random(23)
    done = 0
    while done < 100:
        n1 = rng.randint(1, 20)
        n0 = rng.randint(0, n1)
        m = rng.randint(0, n1)
        a = rng.choice([F(2), F(3, 2), F(4, 3), F(2, 3)])
        assert symmetry_check(HGParams(m, n0, n1, a))
        done += 1


def test_inclusion_scaling_shape():
    params = HGParams(1, 1, 1, F(3, 2))
    # (1-a)^3 d^1 D_1 with d = 2
    assert inclusion_scaling(params) == F(-1, 8) * 2 * 1
