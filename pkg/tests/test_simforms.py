"""Simultaneous complex-contour forms: expansion, witnesses, contours, bounds."""

import random
from fractions import Fraction as F

import pytest
from mpmath import mp, mpf, mpc, fabs, log

from logirr.exact import GaussianRational as G, to_mpf
from logirr.logforms import HGParams, linear_form
from logirr.simforms import (
    HataConfig,
    HataFamily,
    contour_integral,
    denominator_witness,
    expand_form,
    form_value,
    hata_bound,
    identify_saddles,
    ord_1_plus_i,
    point_power_rates,
    stratum_sums,
)


def pi_family():
    return HataFamily(points=(G.of(2), G.of(1, 1)), rates=(2, 2, 2), alpha=3)


def test_config_validation():
    with pytest.raises(ValueError):
        HataConfig(points=(G.of(1),), exponents=(1, 1), m=1)  # point = 1
    with pytest.raises(ValueError):
        HataConfig(points=(G.of(2),), exponents=(1,), m=1)  # missing exponent


def test_k1_reduction_matches_single_log_form():
    """k = 1 equals the real-integral form up to (-1)^(n+1) (1-a)^(2n+1)."""
    for n, a in ((1, F(2)), (2, F(2)), (3, F(3, 2)), (2, F(4, 3))):
        config = HataConfig(points=(G.of(a),), exponents=(n, n), m=n)
        hf = expand_form(config, G.of(a))
        gf = linear_form(HGParams(n, n, n, a))
        factor = F((-1) ** (n + 1)) * (1 - a) ** (2 * n + 1)
        assert hf.log_coeff == G.of(gf.log_coeff * factor)
        assert hf.const_coeff == G.of(gf.const_coeff * factor)


def test_log_coefficient_shared_across_targets():
    fam = pi_family()
    for n in (1, 2, 3):
        config = fam.at(n)
        forms = [expand_form(config, t) for t in fam.points]
        assert forms[0].log_coeff == forms[1].log_coeff


def test_log_coefficient_shared_random_configs():
    rng = random.Random(6)
    pts_pool = [G.of(2), G.of(1, 1), G.of(F(3, 2)), G.of(F(4, 3)), G.of(F(2, 3)),
                G.of(3), G.of(0, 1)]
    done = 0
    while done < 50:
        a1, a2 = rng.sample(pts_pool, 2)
        exps = tuple(rng.randint(1, 3) for _ in range(3))
        m = rng.randint(1, sum(exps))
        config = HataConfig(points=(a1, a2), exponents=exps, m=m)
        f1 = expand_form(config, a1)
        f2 = expand_form(config, a2)
        assert f1.log_coeff == f2.log_coeff
        done += 1


def test_exact_form_matches_contour_quadrature():
    fam = pi_family()
    dps = 40
    for n in (1, 2, 3):
        config = fam.at(n)
        for t in fam.points:
            exact = expand_form(config, t).value(dps).value
            quadv = contour_integral(config, t, dps)
            with mp.workdps(dps):
                assert fabs(exact - quadv) < mpf(10) ** (-(dps - 8)), (n, t)


def test_form_value_fast_path_matches_exact():
    fam = pi_family()
    config = fam.at(2)
    dps = 45
    for t in fam.points:
        a = expand_form(config, t).value(dps).value
        b = form_value(config, t, dps)
        with mp.workdps(dps):
            assert fabs(a - b) < mpf(10) ** (-(dps - 10))


def test_contour_trivial_log():
    # exponents all zero, m = 0: integral of dz/z from 1 to 1+i
    config = HataConfig(points=(G.of(1, 1),), exponents=(0, 0), m=0)
    dps = 40
    v = contour_integral(config, G.of(1, 1), dps)
    with mp.workdps(dps):
        expected = mp.log(2) / 2 + mp.pi / 4 * mpc(0, 1)
        assert fabs(v - expected) < mpf(10) ** (-(dps - 5))


def test_contour_homotopic_paths_agree():
    fam = pi_family()
    config = fam.at(1)
    dps = 35
    t = G.of(2)
    straight = contour_integral(config, t, dps)
    detour = contour_integral(config, t, dps, path=[mpc(1), mpc(1, 0.5), mpc(2)])
    with mp.workdps(dps):
        assert fabs(straight - detour) < mpf(10) ** (-(dps - 5))


def test_contour_path_through_zero_rejected():
    fam = pi_family()
    config = fam.at(1)
    with pytest.raises(ValueError):
        contour_integral(config, G.of(2), 30, path=[mpc(1), mpc(-1), mpc(2)])


def test_witness_identities_small_n():
    fam = pi_family()
    for n in (1, 2, 3, 4):
        config = fam.at(n)
        for target in (G.of(1), G.of(2), G.of(1, 1)):
            rep = denominator_witness(config, target)
            assert rep.ok and rep.min_scaling_power == 0, (n, target)


def test_witness_proviso_violation_reported():
    config = HataConfig(points=(G.of(2), G.of(1, 1)), exponents=(2, 2, 2), m=5)
    rep = denominator_witness(config, G.of(2))
    assert not rep.proviso_ok
    assert "n1 + [n2/2] - m" in rep.failed_proviso


def test_witness_rejects_other_points():
    config = HataConfig(points=(G.of(2), G.of(3)), exponents=(2, 2, 2), m=3)
    with pytest.raises(ValueError):
        denominator_witness(config, G.of(2))


def test_ord_at_one_plus_i():
    assert ord_1_plus_i(G.of(2)) == 2
    assert ord_1_plus_i(G.of(1, 1)) == 1
    assert ord_1_plus_i(G.of(F(1, 2))) == -2
    assert ord_1_plus_i(G.of(3)) == 0


def test_point_power_rates_pi_config_clears_nothing():
    # the regrouping identities: no extra scaling for (2, 1+i) at these rates
    assert point_power_rates((G.of(2), G.of(1, 1)), (2, 2, 2), 3) == {}


def test_point_power_rates_rational_config():
    rates = point_power_rates((G.of(F(4, 3)), G.of(F(3, 2))), (2, 2, 2), 3)
    assert rates["2"][0] == 4
    assert rates["3"][0] == 3


def test_identify_saddles_pi_family():
    decays, coeff = identify_saddles(pi_family(), 35, n_probe=16)
    vals = sorted(v for _, v in decays)
    assert abs(float(vals[0]) + 3.81675415) < 1e-6
    assert abs(float(vals[1]) + 3.42519269) < 1e-6
    assert abs(float(coeff) - 5.15572978) < 1e-6


def test_hata_bound_pi():
    report = hata_bound(pi_family(), 45)
    assert abs(float(report.mu.value) - 8.01604539) < 1e-4
    assert float(report.c0.value) < float(report.c0_prime.value)


def test_hata_bound_simple_reduction():
    fam = HataFamily(points=(G.of(2),), rates=(1, 1), alpha=1)
    report = hata_bound(fam, 45)
    assert abs(float(report.mu.value) - 4.62210083) < 1e-8


def test_finite_n_growth_matches_saddles_moderate_n():
    fam = pi_family()
    n = 40
    config = fam.at(n)
    sums = stratum_sums(config)
    dps = 60 + 9 * n
    rates = []
    for t in fam.points:
        v = form_value(config, t, dps, sums=sums)
        with mp.workdps(30):
            rates.append(float(log(fabs(v)) / n))
    assert abs(rates[0] + 3.81675415) < 0.15
    assert abs(rates[1] + 3.42519269) < 0.15
