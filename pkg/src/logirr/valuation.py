"""Denominator savings of factorial-ratio type: the exact reduced denominator
of m!(n0+n1-m)!/(n0!n1!), its large-prime part, the 1-periodic integer step
profiles behind both, and the digamma-weighted integral giving their
exponential growth rate.

The digamma implementation follows the classical certified scheme: shift the
argument up by the recurrence, then sum the asymptotic series with exact
Bernoulli numbers, with the truncation error tracked against the target
precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from ._kernels import varpi_min
from .exact import BigFloat, binomial, ordp_factorial, primes_in, to_mpf


@dataclass(frozen=True)
class StepFunction:
    """1-periodic integer step function given by disjoint half-open intervals
    [lo, hi) in [0, 1) with positive values; zero elsewhere."""

    intervals: tuple  # ((lo, hi, value), ...) sorted, Fractions

    def __post_init__(self):
        prev = Fraction(-1)
        for lo, hi, v in self.intervals:
            if not (0 <= lo < hi <= 1):
                raise ValueError(f"interval [{lo},{hi}) outside [0,1)")
            if lo < prev:
                raise ValueError("intervals must be sorted and disjoint")
            if v < 0 or v != int(v):
                raise ValueError("values must be non-negative integers")
            prev = hi

    def value_at(self, x) -> int:
        x = Fraction(x) % 1
        for lo, hi, v in self.intervals:
            if lo <= x < hi:
                return int(v)
        return 0

    def is_zero(self) -> bool:
        return not self.intervals

    @staticmethod
    def from_samples(samples):
        """Merge consecutive lattice samples ((x_i, v_i), x ascending) into runs.

        The function is taken constant on [x_i, x_{i+1}); the final sample's
        run closes at 1.
        """
        intervals = []
        run_start = None
        run_val = 0
        xs = [x for x, _ in samples] + [Fraction(1)]
        for i, (x, v) in enumerate(samples):
            if v != run_val:
                if run_val > 0:
                    intervals.append((run_start, x, run_val))
                run_start, run_val = x, v
        if run_val > 0:
            intervals.append((run_start, xs[-1], run_val))
        return StepFunction(tuple(intervals))


def phi_exponent(t: int, m: int, n0: int, n1: int) -> int:
    """max(0, [n0/t] + [n1/t] - [m/t] - [(n0+n1-m)/t])."""
    return max(0, n0 // t + n1 // t - m // t - (n0 + n1 - m) // t)


def phi_denominator(m: int, n0: int, n1: int) -> int:
    """Reduced denominator of m!(n0+n1-m)!/(n0!n1!), exactly."""
    q = Fraction(
        math.factorial(m) * math.factorial(n0 + n1 - m),
        math.factorial(n0) * math.factorial(n1),
    )
    return q.denominator


def phi_denominator_via_primes(m: int, n0: int, n1: int) -> int:
    """Same quantity assembled prime-by-prime from factorial valuations
    (independent route used to cross-check phi_denominator).

    Per prime the level contributions are totalled before clamping at zero:
    a level can be negative while another is positive, so clamping each
    level separately would overshoot the true denominator.
    """
    out = 1
    for p in primes_in(2, max(n0 + n1, 1)):
        v = (
            ordp_factorial(p, m)
            + ordp_factorial(p, n0 + n1 - m)
            - ordp_factorial(p, n0)
            - ordp_factorial(p, n1)
        )
        out *= p ** max(0, -v)
    return out


def phi_tilde(m: int, n0: int, n1: int, threshold: float | None = None) -> int:
    """Large-prime part: product of p^phi(p) over primes p > sqrt(n1).

    The cutoff is parameterizable; the default sqrt(n1) is the classical one.
    Divides phi_denominator(m, n0, n1) exactly.
    """
    if threshold is None:
        threshold = math.isqrt(n1)
    lo = int(threshold) + 1
    out = 1
    for p in primes_in(max(lo, 2), max(n0 + n1, 1)):
        out *= p ** phi_exponent(p, m, n0, n1)
    return out


def phi_step_profile(m_rate: int, n0_rate: int, n1_rate: int) -> StepFunction:
    """Exact breakpoint list of the bracket profile

        x -> max(0, [n0r x] + [n1r x] - [mr x] - [(n0r+n1r-mr) x])

    on [0,1).  Jumps only occur at rationals whose denominator divides the
    lcm of the four rates, so sampling that lattice is exact.
    """
    s_rate = n0_rate + n1_rate - m_rate
    if s_rate < 0:
        raise ValueError("rates must satisfy m_rate <= n0_rate + n1_rate")
    L = math.lcm(*(r for r in (m_rate, n0_rate, n1_rate, max(s_rate, 1)) if r > 0))
    samples = []
    for q in range(L):
        x = Fraction(q, L)
        v = max(
            0,
            _floor_frac(n0_rate, x) + _floor_frac(n1_rate, x)
            - _floor_frac(m_rate, x) - _floor_frac(s_rate, x),
        )
        samples.append((x, v))
    return StepFunction.from_samples(samples)


def _floor_frac(rate: int, x: Fraction) -> int:
    v = rate * x
    return v.numerator // v.denominator


@dataclass(frozen=True)
class VarpiCertificate:
    """Witnesses that the reported minimum is attained: for each lattice x,
    an admissible (y0, y1, y2) achieving it."""

    denominator: int  # lattice size for x
    y_denominator: int
    witnesses: tuple  # ((q, min, r0, r1, r2), ...)


def minimize_varpi(alpha0: int, alpha1: int, alpha2: int, alpha: int):
    """Pointwise minimum profile of the three-term carry count

        w(x, y) = sum_j ([alpha_j x] - [y_j] - [alpha_j x - y_j])

    over y in [0,1)^3 subject to y0+y1+y2 == alpha*x (mod 1); y2 is solved
    from the congruence while y0, y1 scan an exact sub-lattice.

    Returns (StepFunction, VarpiCertificate).
    """
    rates = (alpha0, alpha1, alpha2)
    if min(rates) <= 0 or alpha <= 0:
        raise ValueError("rates must be positive")
    # x-breakpoints: floors jump on 1/rate lattices; feasibility comparisons
    # are linear with integer slope differences, so their crossings also live
    # on divisors of the slope differences.
    slopes = set()
    for mask in range(8):
        s = sum(r for j, r in enumerate(rates) if mask >> j & 1) - alpha
        if s != 0:
            slopes.add(abs(s))
    L = math.lcm(alpha0, alpha1, alpha2, alpha, *sorted(slopes) or [1])
    M = 4 * L  # y-lattice fine enough to realize every strict pattern
    samples = []
    witnesses = []
    for q in range(L):
        val, r0, r1, r2 = varpi_min(q, L, M, rates, alpha)
        samples.append((Fraction(q, L), int(val)))
        witnesses.append((q, int(val), r0, r1, r2))
    profile = StepFunction.from_samples(samples)
    cert = VarpiCertificate(L, M, tuple(witnesses))
    return profile, cert


def varpi_value(x: Fraction, y: tuple, rates, alpha) -> int:
    """Direct evaluation of the carry count at exact rational arguments."""
    total = 0
    for rate, yj in zip(rates, y):
        yj = Fraction(yj)
        total += (
            _floor_frac(rate, x)
            - (yj.numerator // yj.denominator)
            - _floor_int(rate * x - yj)
        )
    return total


def _floor_int(v: Fraction) -> int:
    return v.numerator // v.denominator


# ---------------------------------------------------------------------------
# digamma via recurrence + Bernoulli asymptotic series


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n):
        total += binomial(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def digamma(x, dps) -> BigFloat:
    """psi(x) for x > 0 to dps digits: shift x upward until the asymptotic
    series with Bernoulli coefficients certifiably meets the target."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("digamma implemented for positive arguments only")
    work = dps + 15
    # error of the truncated series ~ first omitted term; shift so that the
    # series can reach 10^-(dps+10) before its divergent tail turns around
    shift_to = max(20, int(0.45 * work) + 5)
    with mp.workdps(work):
        acc = mpf(0)
        while x < shift_to:
            acc -= 1 / to_mpf(x)
            x += 1
        xm = to_mpf(x)
        res = acc + mp.log(xm) - 1 / (2 * xm)
        target = mpf(10) ** (-(dps + 10))
        x2 = xm * xm
        powx = x2
        prev = None
        k = 1
        while True:
            term = to_mpf(bernoulli(2 * k)) / (2 * k) / powx
            res -= term
            if abs(term) < target:
                break
            if prev is not None and abs(term) > abs(prev):
                raise ArithmeticError(
                    "asymptotic digamma series diverged before reaching target; "
                    "increase working precision"
                )
            prev = term
            powx *= x2
            k += 1
            if k > 400:
                raise ArithmeticError("digamma series did not converge")
    with mp.workdps(dps):
        return BigFloat(+res, dps)


def valuation_asymptotic(profile: StepFunction, dps) -> BigFloat:
    """Stieltjes integral of the profile against d(psi): sum of value * (psi(hi)-psi(lo))."""
    for lo, _hi, _v in profile.intervals:
        if lo == 0:
            raise ValueError("profile interval touching 0 (psi is singular there)")
    with mp.workdps(dps + 10):
        total = mpf(0)
        for lo, hi, v in profile.intervals:
            total += v * (digamma(hi, dps + 10).value - digamma(lo, dps + 10).value)
    with mp.workdps(dps):
        return BigFloat(+total, dps)
