"""High-precision hypergeometric engines used as independent oracles: the
Gauss series with certified tails, the two-variable Appell series (terminating
direction supported), and the two classical fast series for pi.

Series terms are exact rationals multiplied by argument powers; conversion to
mpmath happens once per term, so the only numeric error is the tracked tail.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf, mpc, fabs

from .exact import BigFloat, to_mpf


def pochhammer(a: Fraction, n: int) -> Fraction:
    """Rising factorial (a)_n in exact arithmetic."""
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


class SeriesDivergenceError(ArithmeticError):
    pass


def _to_mp_arg(z):
    """Fraction/float/complex/mp value -> mpf or mpc at working precision."""
    if isinstance(z, Fraction):
        return to_mpf(z)
    if isinstance(z, (complex, mpc)):
        val = mpc(z)
        return mp.re(val) if mp.im(val) == 0 else val
    return mpf(z)


def _is_terminating(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def gauss_2f1(a, b, c, z, dps, max_terms=100_000) -> BigFloat:
    """2F1(a, b; c; z) by direct summation with a geometric tail bound.

    Terminating cases sum exactly.  On |z| = 1 (non-terminating) the series
    is rerouted through the Euler transform to argument z/(z-1) of smaller
    modulus, which keeps the tail bound geometric.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise ValueError("lower parameter is a non-positive integer")
    with mp.workdps(dps + 15):
        zz = _to_mp_arg(z)
        terminating = _is_terminating(a) or _is_terminating(b)
        if not terminating and fabs(zz) >= 1:
            if fabs(zz / (zz - 1)) < 1:
                # Euler transform: (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
                inner = gauss_2f1(a, c - b, c, zz / (zz - 1), dps + 10)
                val = (1 - zz) ** (-to_mpf(a)) * inner.value
                with mp.workdps(dps):
                    return BigFloat(+val, dps)
            raise SeriesDivergenceError(f"2F1 argument {z} outside summable domain")
        target = mpf(10) ** (-(dps + 10))
        total = mpf(0) if mp.im(zz) == 0 else mpc(0)
        term = Fraction(1)
        zpow = zz ** 0
        nu = 0
        while True:
            t = to_mpf(term.numerator) / to_mpf(term.denominator) * zpow
            total += t
            if terminating and (_is_terminating(a) and nu >= -a or
                                _is_terminating(b) and nu >= -b):
                break
            # ratio of consecutive exact terms
            ratio = (a + nu) * (b + nu) / ((c + nu) * (nu + 1))
            if ratio == 0:
                break
            q = fabs(to_mpf(ratio) * zz)
            if fabs(t) > 0 and q < 1:
                tail = fabs(t) * q / (1 - q)
                if tail < target:
                    break
            term *= ratio
            zpow *= zz
            nu += 1
            if nu > max_terms:
                raise SeriesDivergenceError("2F1 did not meet tail bound in budget")
        with mp.workdps(dps):
            return BigFloat(+total, dps)


def euler_transform(a, b, c, z):
    """Parameters and argument of the Euler-transformed series: returns
    ((a, c-b, c), z/(z-1), prefactor_exponent_a)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return (a, c - b, c), lambda zz: zz / (zz - 1), a


def appell_f1(a, b1, b2, c, x, y, dps, max_terms=100_000) -> BigFloat:
    """Appell F1(a; b1, b2; c; x, y).

    When b2 is a non-positive integer the y-direction terminates and each
    y-stratum reduces to a Gauss series (valid for any y, |x| handled by
    gauss_2f1).  Otherwise both arguments must satisfy |x|, |y| < 1 and the
    double series is summed by diagonals with a geometric tail bound.
    """
    a, b1, b2, c = Fraction(a), Fraction(b1), Fraction(b2), Fraction(c)
    with mp.workdps(dps + 15):
        xx = _to_mp_arg(x)
        yy = _to_mp_arg(y)
        if _is_terminating(b2):
            n2 = int(-b2)
            total = mpc(0)
            for muu in range(n2 + 1):
                coeff = (
                    pochhammer(a, muu) * pochhammer(b2, muu)
                    / (pochhammer(c, muu) * math.factorial(muu))
                )
                inner = gauss_2f1(a + muu, b1, c + muu, xx, dps + 10)
                total += to_mpf(coeff) * yy ** muu * inner.value
            if mp.im(total) == 0:
                total = mp.re(total)
            with mp.workdps(dps):
                return BigFloat(+total, dps)
        if not (fabs(xx) < 1 and fabs(yy) < 1):
            raise SeriesDivergenceError(
                "F1 needs |x|, |y| < 1 unless a terminating direction applies"
            )
        # diagonal summation: s = nu + mu constant makes the tail 1-dimensional
        target = mpf(10) ** (-(dps + 10))
        total = mpc(0)
        r = max(fabs(xx), fabs(yy))
        s = 0
        while True:
            diag = mpc(0)
            for nu in range(s + 1):
                muu = s - nu
                coeff = (
                    pochhammer(a, s) * pochhammer(b1, nu) * pochhammer(b2, muu)
                    / (math.factorial(nu) * math.factorial(muu) * pochhammer(c, s))
                )
                diag += to_mpf(coeff) * xx ** nu * yy ** muu
            total += diag
            # |(a)_s / (c)_s| is eventually polynomially bounded; once the
            # diagonal magnitude falls under target * (1-r), geometric decay
            # in r certifies the tail
            if s > 4 and fabs(diag) * r / (1 - r) < target and fabs(diag) < target:
                break
            s += 1
            if s > max_terms:
                raise SeriesDivergenceError("F1 did not meet tail bound in budget")
        if mp.im(total) == 0:
            total = mp.re(total)
        with mp.workdps(dps):
            return BigFloat(+total, dps)


_RAMANUJAN = {
    # id: (linear coefficient, constant, sign, base, power step, offset, limit name)
    39: (21460, 1123, -1, 882, 2, 1, "4/pi"),
    44: (26390, 1103, 1, 99, 4, 2, "1/(2 pi sqrt(2))"),
}


def ramanujan_pi(series_id: int, terms: int, dps) -> BigFloat:
    """Partial sum of the two classical (1/4, 1/2, 3/4) series for pi.

    Series 39 converges to 4/pi, series 44 to 1/(2*pi*sqrt(2)); each term is
    kept exact and converted once at the end.
    """
    if series_id not in _RAMANUJAN:
        raise ValueError(f"unknown series id {series_id}; use 39 or 44")
    if terms < 1:
        raise ValueError("need at least one term")
    lin, const, sign, base, step, offset, _ = _RAMANUJAN[series_id]
    total = Fraction(0)
    for nu in range(terms):
        num = (
            pochhammer(Fraction(1, 4), nu)
            * pochhammer(Fraction(1, 2), nu)
            * pochhammer(Fraction(3, 4), nu)
        )
        term = (
            num
            / Fraction(math.factorial(nu)) ** 3
            * (lin * nu + const)
            * Fraction(sign) ** nu
            / Fraction(base) ** (step * nu + offset)
        )
        total += term
    with mp.workdps(dps):
        return BigFloat(to_mpf(total), dps)


def ramanujan_reference(series_id: int, dps):
    """The exact limit the series converges to, for comparison."""
    with mp.workdps(dps):
        if series_id == 39:
            return BigFloat(+(4 / mp.pi), dps)
        if series_id == 44:
            return BigFloat(+(1 / (2 * mp.pi * mp.sqrt(2))), dps)
    raise ValueError(f"unknown series id {series_id}")
