"""Asymptotic constants: interval maxima, entropy maxima, saddles, assembly."""

import math
from fractions import Fraction as F

import pytest
from mpmath import mp, mpf, mpc, fabs

from logirr.asympt import (
    BoundAssemblyError,
    EntropyPattern,
    EntropyTerm,
    ExponentProduct,
    LedgerTerm,
    assemble_bound,
    binomial_growth_max,
    central_binomial_pattern,
    log_max_on_interval,
    rukhadze_entropy_pattern,
    saddle_points,
    vieta_root_sum,
)
from logirr.exact import GaussianRational as G


RUKHADZE_DECAY = ExponentProduct(
    factors=((F(0), F(6)), (F(1), F(8)), (F(-1), F(-7)))
)


def test_decay_objective_published_value_and_closed_form():
    dps = 50
    got = log_max_on_interval(RUKHADZE_DECAY, (F(0), F(1)), dps).value
    assert abs(float(got) + 11.84497806) < 1e-8
    with mp.workdps(dps + 5):
        closed = mp.log(2 ** 5 * 3 ** 3 * (7734633 * mp.sqrt(393) - 153333125) / mpf(7) ** 7)
        assert fabs(got - closed) < mpf(10) ** (-(dps - 8))


def test_log_max_trivial_monomial():
    got = log_max_on_interval(
        ExponentProduct(factors=((F(0), F(1)),)), (F(0), F(1)), 30
    ).value
    assert got == 0


def test_log_max_simple_family_integrand():
    # x(1-x)/(1+x) on (0,1): max at sqrt(2)-1, value 2 log(sqrt2 - 1)
    f = ExponentProduct(factors=((F(0), F(1)), (F(1), F(1)), (F(-1), F(-1))))
    got = log_max_on_interval(f, (F(0), F(1)), 45).value
    with mp.workdps(50):
        assert fabs(got - 2 * mp.log(mp.sqrt(2) - 1)) < mpf(10) ** -40


def test_log_max_unbounded_endpoint_rejected():
    f = ExponentProduct(factors=((F(0), F(-1)),))  # 1/x blows up at 0
    with pytest.raises(ArithmeticError):
        log_max_on_interval(f, (F(0), F(1)), 30)


def test_log_max_agrees_with_golden_section():
    """Critical-point route vs a plain golden-section numeric search."""
    dps = 30
    objectives = [
        (RUKHADZE_DECAY, (F(0), F(1))),
        (ExponentProduct(factors=((F(0), F(1)), (F(1), F(1)), (F(-1), F(-1)))),
         (F(0), F(1))),
    ]
    for f, (lo, hi) in objectives:
        exact = log_max_on_interval(f, (lo, hi), dps).value
        with mp.workdps(dps + 10):
            a = mpf(lo.numerator) / lo.denominator + mpf("1e-12")
            b = mpf(hi.numerator) / hi.denominator - mpf("1e-12")
            phi = (mp.sqrt(5) - 1) / 2
            c, d = b - phi * (b - a), a + phi * (b - a)
            for _ in range(200):
                if f.log_abs(c, dps) < f.log_abs(d, dps):
                    a = c
                else:
                    b = d
                c, d = b - phi * (b - a), a + phi * (b - a)
            golden = f.log_abs((a + b) / 2, dps)
            assert fabs(exact - golden) < mpf(10) ** -10


def test_entropy_max_published_value_and_closed_form():
    dps = 50
    got = binomial_growth_max(rukhadze_entropy_pattern(), (F(7), F(14)), dps).value
    assert abs(float(got) - 12.68147230) < 1e-8
    with mp.workdps(dps + 5):
        closed = mp.log(2 ** 5 * 3 ** 3 * (7734633 * mp.sqrt(393) + 153333125) / mpf(7) ** 7)
        assert fabs(got - closed) < mpf(10) ** (-(dps - 8))


def test_entropy_max_central_binomial_vs_exact_binomial():
    got = binomial_growth_max(central_binomial_pattern(), (F(0), F(2)), 40).value
    with mp.workdps(45):
        assert fabs(got - mp.log(4)) < mpf(10) ** -35
        # exact C(4000, 2000)^(1/2000) comparison
        emp = mp.log(mpf(math.comb(4000, 2000))) / 2000
        assert fabs(got - emp) < 0.01


def test_entropy_pattern_requires_cancelling_slopes():
    bad = EntropyPattern(terms=(EntropyTerm(F(1), F(1), F(0)),))
    with pytest.raises(ValueError):
        binomial_growth_max(bad, (F(1), F(2)), 30)


def test_saddles_simple_quadratic():
    f = ExponentProduct(factors=((G.of(1), F(1)), (G.of(2), F(1))), z_exponent=F(1))
    pts = saddle_points(f, 40)
    assert len(pts) == 2
    with mp.workdps(45):
        roots = sorted((r for r, _ in pts), key=lambda r: mp.re(r))
        assert fabs(roots[0] + mp.sqrt(2)) < mpf(10) ** -35
        assert fabs(roots[1] - mp.sqrt(2)) < mpf(10) ** -35
        val = dict((mp.nstr(r, 8), v) for r, v in pts)
        for r, v in pts:
            if mp.re(r) > 0:
                assert fabs(v - 2 * mp.log(mp.sqrt(2) - 1)) < mpf(10) ** -30


def test_saddles_pi_case_cubic_residuals():
    f = ExponentProduct(
        factors=((G.of(1), F(2)), (G.of(2), F(2)), (G.of(1, 1), F(2))),
        z_exponent=F(3),
    )
    pts = saddle_points(f, 40)  # residual certificate enforced internally
    assert len(pts) == 3


def test_saddles_scaling_property():
    f = ExponentProduct(
        factors=((G.of(1), F(2)), (G.of(2), F(2)), (G.of(1, 1), F(2))),
        z_exponent=F(3),
    )
    g = f.scaled(F(5))
    pf, pg = saddle_points(f, 35), saddle_points(g, 35)
    with mp.workdps(40):
        for (rf, vf), (rg, vg) in zip(
            sorted(pf, key=lambda t: (mp.re(t[0]), mp.im(t[0]))),
            sorted(pg, key=lambda t: (mp.re(t[0]), mp.im(t[0]))),
        ):
            assert fabs(rf - rg) < mpf(10) ** -30
            assert fabs(5 * vf - vg) < mpf(10) ** -28


def test_saddles_vieta_sum():
    f = ExponentProduct(
        factors=((G.of(1), F(2)), (G.of(2), F(2)), (G.of(1, 1), F(2))),
        z_exponent=F(3),
    )
    pts = saddle_points(f, 45)
    expected = vieta_root_sum(f)
    with mp.workdps(50):
        total = sum(r for r, _ in pts)
        assert fabs(total - expected.to_mpc()) < mpf(10) ** -40


def test_assemble_bound_published_combinations():
    dps = 30
    with mp.workdps(dps):
        r = assemble_bound(
            [LedgerTerm("d", "c0", mpf("6.30273213")),
             LedgerTerm("g", "c1", mpf("18.22371823"))], dps)
        assert abs(float(r.mu.value) - 3.89139977) < 1e-7
        r = assemble_bound(
            [LedgerTerm("d", "c0", 2 * mp.log(mp.sqrt(2) + 1) - 1),
             LedgerTerm("g", "c1", 2 * mp.log(mp.sqrt(2) + 1) + 1)], dps)
        assert abs(float(r.mu.value) - 4.62210083) < 1e-8
        r = assemble_bound(
            [LedgerTerm("d", "c0", mpf(1)), LedgerTerm("g", "c1", mpf(1))], dps)
        assert float(r.mu.value) == 2


def test_assemble_bound_monotone_in_c0_terms():
    dps = 30
    with mp.workdps(dps):
        mus = []
        for bump in (0, 1, 2):
            r = assemble_bound(
                [LedgerTerm("d", "c0", mpf(2) + bump),
                 LedgerTerm("g", "c1", mpf(10))], dps)
            mus.append(float(r.mu.value))
        assert mus[0] > mus[1] > mus[2]


def test_assemble_bound_error_cases():
    with mp.workdps(30):
        with pytest.raises(BoundAssemblyError):
            assemble_bound([LedgerTerm("d", "c0", mpf(-1)),
                            LedgerTerm("g", "c1", mpf(1))], 30)
        with pytest.raises(BoundAssemblyError):
            assemble_bound([LedgerTerm("d", "c0", mpf(2)),
                            LedgerTerm("d2", "c0_prime", mpf(1)),
                            LedgerTerm("g", "c1", mpf(1))], 30)
