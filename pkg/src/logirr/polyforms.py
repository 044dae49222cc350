"""Polynomial-numerator constructions: integer-polynomial linear forms in
log 2 through the substitution y = x(1-x)/(1+x), the small-degree sup-norm
box search behind the transfinite-diameter heuristics, validation of the
shifted-coefficient representation H(z) = sum B_nu Delta^(n-nu) z^nu + ...,
the explicit six-factor polynomial family for the log 3 measure, and the
envelope-based bound assembly for all of these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpf, log, fabs

from . import polyroots as pr
from ._kernels import gstar_expand
from .asympt import (
    BoundReport,
    ExponentProduct,
    LedgerTerm,
    assemble_bound,
)
from .exact import BigFloat, lcm_upto, to_mpf
from .logforms import HGParams, LogLinearForm, linear_form


# ---------------------------------------------------------------------------
# forms from integer polynomials in y = x(1-x)/(1+x)


def gn_linear_form(coeffs, n: int) -> LogLinearForm:
    """Exact form of  int_0^1 G(x(1-x)/(1+x)) dx/(1+x)  for G with the given
    integer coefficients, degree bound n.

    Each power y^k is the (k,k,k;2) integral, so the form is the coefficient-
    weighted sum of those exact forms; D_n then clears every denominator.
    """
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) - 1 > n:
        raise ValueError(f"degree {len(coeffs) - 1} exceeds the bound {n}")
    total = LogLinearForm(Fraction(0), Fraction(0), Fraction(2))
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            base = LogLinearForm(Fraction(1), Fraction(0), Fraction(2))
        else:
            base = linear_form(HGParams(k, k, k, Fraction(2)))
        total = total + base.scaled(Fraction(c))
    return total


def gn_inclusion_check(coeffs, n: int):
    """D_n-scaled integer pair for the form of G (raises if not integral)."""
    form = gn_linear_form(coeffs, n)
    dn = lcm_upto(n)
    b = form.log_coeff * dn
    c = form.const_coeff * dn
    if b.denominator != 1 or c.denominator != 1:
        raise ArithmeticError(f"D_{n}-scaled coefficients not integral")
    return int(b), int(c)


# ---------------------------------------------------------------------------
# sup-norm box search


@dataclass(frozen=True)
class GStarResult:
    coeffs: tuple  # ascending-degree ints of the winner
    sup_norm: BigFloat  # max |G| on the segment
    sup_norm_root: BigFloat  # (max |G|)^(1/degree_bound)
    scanned_exactly: int  # candidates that reached exact evaluation


def poly_sup_on_segment(coeffs, lo, hi, dps=30):
    """Exact-critical-point sup of |G| on [lo, hi]; endpoints may be mpf."""
    dcoeffs = pr.derivative([Fraction(c) for c in coeffs])
    with mp.workdps(dps + 10):
        lo_m, hi_m = mpf(lo), mpf(hi)
        candidates = [lo_m, hi_m]
        if pr.degree(dcoeffs) >= 1:
            # bracket on a slightly padded rational cover of the segment
            lo_f = Fraction(float(lo_m)).limit_denominator(10 ** 12) - Fraction(1, 10 ** 9)
            hi_f = Fraction(float(hi_m)).limit_denominator(10 ** 12) + Fraction(1, 10 ** 9)
            for root in pr.real_roots_in(dcoeffs, lo_f, hi_f, dps + 10):
                if lo_m <= root <= hi_m:
                    candidates.append(root)
        best = max(fabs(pr.eval_mp(coeffs, x)) for x in candidates)
        with mp.workdps(dps):
            return +best


def search_gstar(
    degree: int,
    coeff_bound: int,
    segment,
    dps=30,
    require_constant_term=False,
):
    """Exhaustive box search for the integer polynomial minimizing
    max |G(y)|^(1/degree) over the segment, coefficients in [-bound, bound].

    Breadth-first over coefficient levels with certified pruning: sample
    maxima lower-bound the true sup, unassigned coefficients are bounded by
    their largest possible contribution, and the survivors of the last level
    are re-evaluated exactly.  `require_constant_term` restricts to G(0) != 0
    (the primitive-factor variant of the search).
    """
    if degree > 8:
        raise ValueError("exhaustive search is capped at degree 8")
    if degree < 1 or coeff_bound < 1:
        raise ValueError("empty search space")
    lo, hi = segment
    with mp.workdps(dps + 10):
        lo_m, hi_m = mpf(lo), mpf(hi)
        samples = [lo_m + (hi_m - lo_m) * mpf(i) / 32 for i in range(33)]
        samples_f = np.array([float(s) for s in samples])
        # initial incumbent: the monomial y^degree (always in the box)
        incumbent = [0] * degree + [1]
        best_sup = poly_sup_on_segment(incumbent, lo_m, hi_m, dps)
        if require_constant_term:
            incumbent = [1] + [0] * degree
            best_sup = mpf(1)
        ymax = float(max(abs(lo_m), abs(hi_m)))
        # tail[k][j]: worst-case |sum_{i>=k} c_i y_j^i| for |c_i| <= bound
        tails = []
        for k in range(degree + 2):
            tails.append(
                np.array([
                    coeff_bound * sum(abs(float(s)) ** i for i in range(k, degree + 1))
                    for s in samples_f
                ])
            )
        values = np.zeros((1, len(samples_f)))
        choices = [np.zeros((1, 0), dtype=np.int64)]
        levels = []
        margin = 1e-9
        for k in range(degree + 1):
            powers = samples_f ** k
            vals, picked, coeff = gstar_expand(
                values, powers, coeff_bound, tails[k + 1], float(best_sup) * (1 + margin)
            )
            prev = choices[-1]
            stacked = np.column_stack([prev[picked], coeff])
            if k == 0 and require_constant_term:
                keep = stacked[:, 0] != 0
                stacked = stacked[keep]
                vals = vals[keep]
            values = vals
            choices.append(stacked)
            levels.append(values.shape[0])
            if values.shape[0] == 0:
                break
        finalists = choices[-1] if values.shape[0] else np.zeros((0, degree + 1))
        best_coeffs = tuple(incumbent)
        scanned = 0
        for row in finalists:
            cs = [int(c) for c in row]
            if all(c == 0 for c in cs):
                continue
            if pr.degree([Fraction(c) for c in cs]) < 1:
                if not require_constant_term:
                    continue
            scanned += 1
            sup = poly_sup_on_segment(cs, lo_m, hi_m, dps)
            if sup < best_sup:
                best_sup = sup
                best_coeffs = tuple(cs)
        with mp.workdps(dps):
            root = best_sup ** (mpf(1) / degree)
            return GStarResult(
                coeffs=best_coeffs,
                sup_norm=BigFloat(+best_sup, dps),
                sup_norm_root=BigFloat(+root, dps),
                scanned_exactly=scanned,
            )


# ---------------------------------------------------------------------------
# shifted-coefficient representation and its simultaneous forms


@dataclass(frozen=True)
class HnForm:
    """Witness that H(z) = sum_{nu<=n} B_nu Delta^(n-nu) z^nu
    + sum_{nu>n} B_nu z^nu with integer B_nu."""

    b: tuple  # B_0..B_deg
    delta: int
    n: int

    def coefficient(self, nu: int) -> int:
        return self.b[nu] if nu < len(self.b) else 0


class HnValidationError(ValueError):
    def __init__(self, nu, coeff, needed):
        self.nu = nu
        super().__init__(
            f"coefficient of z^{nu} is {coeff}, not divisible by {needed}"
        )


def hn_validate(coeffs, n: int, delta: int) -> HnForm:
    """Extract the B_nu, checking Delta^(n-nu) divides coefficient nu <= n."""
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) - 1 > 2 * n:
        raise ValueError(f"degree {len(coeffs) - 1} exceeds 2n = {2 * n}")
    b = []
    for nu, c in enumerate(coeffs):
        if nu <= n:
            need = delta ** (n - nu)
            if c % need != 0:
                raise HnValidationError(nu, c, need)
            b.append(c // need)
        else:
            b.append(c)
    return HnForm(b=tuple(b), delta=delta, n=n)


@dataclass(frozen=True)
class SimultaneousForms:
    """Shared log coefficient with one constant per target."""

    log_coeff: object
    constants: tuple  # ((target, const), ...)
    n: int

    def form_for(self, target) -> LogLinearForm:
        for t, c in self.constants:
            if t == target:
                return LogLinearForm(self.log_coeff, c, t)
        raise KeyError(f"no form for target {target}")


def hn_simultaneous_forms(coeffs, n: int, delta: int, points) -> SimultaneousForms:
    """Exact simultaneous forms  I(n; a_j) = -B_n log a_j + A_j  from an
    integer polynomial with the shifted-coefficient representation.

    With d the common denominator of the points,

        I(n; a) = sum_{nu != n} c_nu d^(nu-n) (1 - a^(nu-n))/(nu - n)
                  - c_n log a,

    which is the exact value of the defining integral
    (1-a) int_0^1 H(d - d(1-a)x) / (d^n (1-(1-a)x)^(n+1)) dx.  D_n-scaled
    integrality of the shared and per-target coefficients is verified before
    returning.
    """
    points = tuple(Fraction(p) for p in points)
    d = _common_denominator(points)
    for p in points:
        if delta % p.numerator != 0 or delta % d != 0:
            raise ValueError(
                f"delta = {delta} must be a common multiple of point numerators and {d}"
            )
    hn_validate(coeffs, n, delta)  # divisibility witness required up front
    coeffs = [int(c) for c in coeffs]
    dn = lcm_upto(n)
    b_log = -Fraction(coeffs[n] if n < len(coeffs) else 0)
    consts = []
    for a in points:
        rat = Fraction(0)
        for nu, c in enumerate(coeffs):
            if nu == n or c == 0:
                continue
            rat += c * Fraction(d) ** (nu - n) * (1 - a ** (nu - n)) / (nu - n)
        if (rat * dn).denominator != 1 or (b_log * dn).denominator != 1:
            raise ArithmeticError("D_n-scaled coefficients are not integral")
        consts.append((a, rat))
    return SimultaneousForms(log_coeff=b_log, constants=tuple(consts), n=n)


def reduced_forms(coeffs, n: int, points) -> SimultaneousForms:
    """Forms of  int_a^1 H(w)/w^(n+1) dw  for the polynomial as given, i.e.
    the defining integral with the common d^n point-power divided out.

    This is the natural normalization for polynomials (like the six-factor
    family) whose roots sit on the segments [a_j, 1] themselves.  D_n-scaled
    integrality is verified exactly for the instance at hand.
    """
    points = tuple(Fraction(p) for p in points)
    coeffs = [int(c) for c in coeffs]
    dn = lcm_upto(n)
    b_log = -Fraction(coeffs[n] if n < len(coeffs) else 0)
    consts = []
    for a in points:
        rat = Fraction(0)
        for nu, c in enumerate(coeffs):
            if nu == n or c == 0:
                continue
            rat += c * (1 - a ** (nu - n)) / (nu - n)
        if (rat * dn).denominator != 1 or (b_log * dn).denominator != 1:
            raise ArithmeticError("D_n-scaled coefficients are not integral")
        consts.append((a, rat))
    return SimultaneousForms(log_coeff=b_log, constants=tuple(consts), n=n)


def _common_denominator(points):
    d = 1
    for p in points:
        d = math.lcm(d, p.denominator)
    return d


# ---------------------------------------------------------------------------
# the explicit six-factor family for log 3


RHIN_POINTS = (Fraction(2, 3), Fraction(4, 3))
RHIN_DELTA = 12
RHIN_RATES = (
    Fraction("0.704324"),
    Fraction("0.552418"),
    Fraction("0.447582"),
    Fraction("0.109072"),
    Fraction("0.038934"),
    Fraction("0.054368"),
)
RHIN_FACTORS = (
    (Fraction(-1), Fraction(1)),               # z - 1
    (Fraction(-2, 3), Fraction(1)),            # z - 2/3
    (Fraction(-4, 3), Fraction(1)),            # z - 4/3
    (Fraction(-4), Fraction(5)),               # 5z - 4
    (Fraction(16), Fraction(-34), Fraction(17)),   # 17z^2 - 34z + 16
    (Fraction(16), Fraction(-36), Fraction(19)),   # 19z^2 - 36z + 16
)


def rhin_polynomial(n: int):
    """The explicit degree <= 2n integer polynomial: a fixed 2^14 3^(2n+7)
    prefactor times six factors with floored proportional exponents.

    Floors are taken on exact rational products; the result is always an
    integer polynomial.
    """
    p = [Fraction(2) ** 14 * Fraction(3) ** (2 * n + 7)]
    for rate, fac in zip(RHIN_RATES, RHIN_FACTORS):
        e = int(rate * n)  # exact floor: Fraction int() truncates toward zero
        p = pr.mul(p, pr.power(list(fac), e))
    out = [int(c) for c in p]
    if any(Fraction(c) != pc for c, pc in zip(out, p)):
        raise ArithmeticError("prefactor failed to clear the denominators")
    return out


def rhin_envelope(dps):
    """Envelope pieces of the six-factor family: the sup of the phase
    h(w) - log w on each integration segment and the negative-axis
    coefficient saddle, plus the prefactor growth 2 log 3."""
    with mp.workdps(dps + 10):
        def h_minus_logw(w):
            total = 2 * log(mpf(3))
            for rate, fac in zip(RHIN_RATES, RHIN_FACTORS):
                v = pr.eval_mp(list(fac), w)
                total += to_mpf(rate) * log(fabs(v))
            return total - log(fabs(w))

        # critical points: sum rate * f'/f - 1/w = 0 cleared to a polynomial
        allf = [[Fraction(0), Fraction(1)]] + [list(f) for f in RHIN_FACTORS]
        weights = [Fraction(-1)] + list(RHIN_RATES)
        num = [Fraction(0)]
        for j, fac in enumerate(allf):
            term = [weights[j]]
            term = pr.mul(term, pr.derivative(allf[j]))
            for i, f2 in enumerate(allf):
                if i != j:
                    term = pr.mul(term, f2)
            num = pr.add(num, term)
        sups = {}
        for a in RHIN_POINTS:
            lo, hi = (a, Fraction(1)) if a < 1 else (Fraction(1), a)
            cands = [to_mpf(lo) + mpf(1) / 10 ** 6, to_mpf(hi) - mpf(1) / 10 ** 6]
            for root in pr.real_roots_in(num, lo, hi, dps + 10):
                cands.append(root)
            sups[a] = max(h_minus_logw(w) for w in cands)
        coeff_growth = None
        for root in pr.real_roots_in(num, Fraction(-100), Fraction(0), dps + 10):
            v = h_minus_logw(root)
            if coeff_growth is None or v < coeff_growth:
                coeff_growth = v
        return sups, +coeff_growth


def rhin_bound(dps) -> BoundReport:
    """Envelope-ledger bound for the six-factor log 3 family.

    The assembly can legitimately fail (C0 <= 0) when the real-segment
    envelope overestimates the oscillatory integral; the error carries the
    full ledger in that case.
    """
    sups, coeff_growth = rhin_envelope(dps)
    with mp.workdps(dps):
        terms = []
        ordered = sorted(RHIN_POINTS, key=lambda a: float(sups[a]), reverse=True)
        for side, a in zip(("c0", "c0_prime"), ordered):
            terms.append(
                LedgerTerm(
                    f"integral envelope on segment to {a}",
                    side, -sups[a],
                    "sup of the phase over the real integration segment",
                )
            )
            terms.append(LedgerTerm("lcm growth", side, mpf(-1), "lcm of 1..n"))
        terms.append(
            LedgerTerm("coefficient growth at negative-axis saddle", "c1",
                       coeff_growth, "")
        )
        terms.append(LedgerTerm("lcm growth", "c1", mpf(1), "lcm of 1..n"))
    return assemble_bound(terms, dps, label="log3 six-factor family")


def simple_family_bound(dps) -> BoundReport:
    """The (z-1)^n (z-2)^n family: envelope on [1, 2] and the negative-axis
    saddle; reproduces the basic log 2 exponent bound."""
    f = ExponentProduct(
        factors=((Fraction(1), Fraction(1)), (Fraction(2), Fraction(1))),
        z_exponent=Fraction(1),
    )
    with mp.workdps(dps + 10):
        decay = _segment_sup(f, Fraction(1), Fraction(2), dps)
        growth = _negative_axis_min(f, dps)
        terms = [
            LedgerTerm("integral envelope on [1,2]", "c0", -decay, ""),
            LedgerTerm("lcm growth", "c0", mpf(-1), ""),
            LedgerTerm("coefficient growth at negative-axis saddle", "c1", growth, ""),
            LedgerTerm("lcm growth", "c1", mpf(1), ""),
        ]
    return assemble_bound(terms, dps, label="plain (z-1)^n(z-2)^n family")


def _segment_sup(f: ExponentProduct, lo, hi, dps):
    num = f.derivative_numerator()
    poly = [c.re for c in num]
    with mp.workdps(dps + 10):
        cands = list(pr.real_roots_in(poly, lo, hi, dps + 10))
        best = max(f.log_abs(w, dps) for w in cands)
        return +best


def _negative_axis_min(f: ExponentProduct, dps):
    num = f.derivative_numerator()
    poly = [c.re for c in num]
    with mp.workdps(dps + 10):
        cands = list(pr.real_roots_in(poly, Fraction(-10 ** 6), Fraction(0), dps + 10))
        if not cands:
            raise ArithmeticError("no negative-axis saddle found")
        best = min(f.log_abs(w, dps) for w in cands)
        return +best
