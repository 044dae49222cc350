"""Sturm isolation and refinement."""

from fractions import Fraction as F

from mpmath import mp, mpf

from logirr import polyroots as pr


def test_polynomial_ops():
    p = [F(1), F(2)]          # 1 + 2x
    q = [F(-1), F(0), F(1)]   # x^2 - 1
    assert pr.mul(p, q) == [F(-1), F(-2), F(1), F(2)]
    assert pr.add(p, pr.neg(p)) == [F(0)]
    assert pr.derivative(q) == [F(0), F(2)]
    assert pr.eval_exact(q, F(3)) == 8
    assert pr.power(p, 2) == [F(1), F(4), F(4)]
    assert pr.clear_denominators([F(1, 2), F(1, 3)]) == [3, 2]


def test_count_and_isolate_known_roots():
    # (x^2 - 2)(x^2 - 3): roots +-sqrt2, +-sqrt3
    p = pr.mul([F(-2), F(0), F(1)], [F(-3), F(0), F(1)])
    assert pr.count_roots(p, F(0), F(2)) == 2
    assert pr.count_roots(p, F(-2), F(0)) == 2
    brackets = pr.isolate_real_roots(p, F(0), F(2))
    assert len(brackets) == 2
    roots = pr.real_roots_in(p, F(0), F(2), 40)
    with mp.workdps(40):
        assert abs(roots[0] - mp.sqrt(2)) < mpf(10) ** -38
        assert abs(roots[1] - mp.sqrt(3)) < mpf(10) ** -38


def test_isolation_handles_rational_roots():
    # roots at 1/3 and 1/2
    p = pr.mul([F(-1, 3), F(1)], [F(-1, 2), F(1)])
    roots = pr.real_roots_in(p, F(0), F(1), 30)
    with mp.workdps(30):
        assert abs(roots[0] - mpf(1) / 3) < mpf(10) ** -28
        assert abs(roots[1] - mpf(1) / 2) < mpf(10) ** -28


def test_no_roots_interval():
    p = [F(1), F(0), F(1)]  # x^2 + 1
    assert pr.isolate_real_roots(p, F(-5), F(5)) == []
