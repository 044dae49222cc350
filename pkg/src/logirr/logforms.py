"""Exact linear forms B*log(a) - A from the beta-type integral

    I(m, n0, n1; a) = int_0^1 x^n0 (1-x)^n1 / (1 - (1-a) x)^(m+1) dx,

built through the partial-fraction expansion of the associated rational
term ratio, together with exact integrality scalings and the factorial-ratio
symmetry between parameter tuples.

Everything here is exact over Fraction; the quadrature in integral_value is
the independent numeric oracle for the same quantity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, log

from . import valuation
from .exact import BigFloat, GaussianRational, binomial, lcm_upto, to_mpf
from .quadrature import integrate


@dataclass(frozen=True)
class HGParams:
    """Exponent triple and rational pole location for the basic integral."""

    m: int
    n0: int
    n1: int
    a: Fraction

    def __post_init__(self):
        if min(self.m, self.n0, self.n1) < 0:
            raise ValueError("exponents must be non-negative")
        if max(self.m, self.n0) > self.n1:
            raise ValueError("requires max(m, n0) <= n1")
        a = Fraction(self.a)
        object.__setattr__(self, "a", a)
        if not (0 < a <= 2):
            raise ValueError("a must lie in (0, 2]")

    @property
    def m_star(self) -> int:
        return min(self.m, self.n0)

    @property
    def n0_star(self) -> int:
        return max(self.m, self.n0)

    def swapped(self) -> "HGParams":
        """The tuple with the two upper series parameters exchanged."""
        return HGParams(self.n0, self.m, self.n0 + self.n1 - self.m, self.a)


@dataclass(frozen=True)
class PartialFractionExpansion:
    terms: tuple  # ((k, A_k), ...) ascending k

    def coefficient(self, k: int) -> Fraction:
        for kk, ak in self.terms:
            if kk == k:
                return ak
        return Fraction(0)


@dataclass(frozen=True)
class LogLinearForm:
    """Exact record of  value = log_coeff * log(target) + const_coeff."""

    log_coeff: object  # Fraction or GaussianRational
    const_coeff: object
    target: object

    def value(self, dps):
        with mp.workdps(dps + 10):
            if isinstance(self.log_coeff, GaussianRational):
                v = self.log_coeff.to_mpc() * log(_gr_to_mp(self.target)) \
                    + self.const_coeff.to_mpc()
            else:
                v = to_mpf(self.log_coeff) * log(to_mpf(Fraction(self.target))) \
                    + to_mpf(self.const_coeff)
        with mp.workdps(dps):
            return BigFloat(+v, dps)

    def scaled(self, c) -> "LogLinearForm":
        return LogLinearForm(self.log_coeff * c, self.const_coeff * c, self.target)

    def __add__(self, other):
        if other == 0:
            return self
        if self.target != other.target:
            raise ValueError("cannot add forms with different log targets")
        return LogLinearForm(
            self.log_coeff + other.log_coeff,
            self.const_coeff + other.const_coeff,
            self.target,
        )

    __radd__ = __add__


def _gr_to_mp(x):
    if isinstance(x, GaussianRational):
        return x.to_mpc()
    return to_mpf(Fraction(x))


def partial_fractions(params: HGParams) -> PartialFractionExpansion:
    """Coefficients A_k of the expansion of the term ratio into simple poles.

    A_k = (-1)^(m + n0 - k) C(k, m) C(n1, k - n0), k = max(m,n0) .. n0+n1.
    """
    m, n0, n1 = params.m, params.n0, params.n1
    terms = []
    for k in range(params.n0_star, n0 + n1 + 1):
        ak = Fraction((-1) ** ((m + n0 - k) % 2) * binomial(k, m) * binomial(n1, k - n0))
        terms.append((k, ak))
    return PartialFractionExpansion(tuple(terms))


def term_ratio(params: HGParams):
    """R(t) of the series expansion, as an exact (numerator, denominator) pair.

    R(t) = [(t+1)...(t+m)/m!] * n1! / [(t+n0+1)...(t+n0+n1+1)].
    """
    m, n0, n1 = params.m, params.n0, params.n1
    num = [Fraction(1)]
    for j in range(1, m + 1):
        num = _polymul(num, [Fraction(j), Fraction(1)])
    num = [c * _factorial(n1) / _factorial(m) for c in num]
    den = [Fraction(1)]
    for j in range(n0 + 1, n0 + n1 + 2):
        den = _polymul(den, [Fraction(j), Fraction(1)])
    return num, den


def _polymul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _factorial(n):
    import math

    return math.factorial(n)


def _form_components(m, n0, n1, a):
    """(log_coeff, const_coeff) from the partial-fraction formulas.

    Needs only m <= n1 (decay of the term ratio); the fuller parameter
    condition on HGParams is a convenience, not required by the expansion.
    """
    a = Fraction(a)
    if a == 1:
        raise ValueError("a = 1 degenerates (log 1 = 0 carries no information)")
    if m > n1:
        raise ValueError("expansion requires m <= n1")
    z = 1 - a  # never 0 here
    m_star = min(m, n0)
    log_coeff = Fraction(0)
    const_coeff = Fraction(0)
    for k in range(max(m, n0), n0 + n1 + 1):
        ak = Fraction((-1) ** ((m + n0 - k) % 2) * binomial(k, m) * binomial(n1, k - n0))
        log_coeff -= ak * z ** (-(k + 1))
        for l in range(1, k - m_star + 1):
            const_coeff -= ak * z ** (l - (k + 1)) / l
    return log_coeff, const_coeff


def linear_form(params: HGParams) -> LogLinearForm:
    """Exact (log_coeff, const_coeff) with I = log_coeff*log(a) + const_coeff.

    log_coeff = -sum_k A_k (1-a)^-(k+1); the constant collects the finite
    truncation sums of the log series, empty when k < m*+1.
    """
    log_coeff, const_coeff = _form_components(
        params.m, params.n0, params.n1, params.a
    )
    return LogLinearForm(log_coeff, const_coeff, params.a)


def integral_value(params: HGParams, dps) -> BigFloat:
    """Quadrature of the defining integral; the oracle for linear_form."""
    a = to_mpf(params.a, dps + 15)
    m, n0, n1 = params.m, params.n0, params.n1

    def f(x):
        return x ** n0 * (1 - x) ** n1 / (1 - (1 - a) * x) ** (m + 1)

    val = integrate(f, [0, 1], dps)
    return BigFloat(val, dps)


def inclusion_scaling(params: HGParams) -> Fraction:
    """The exact factor (1-a)^(n0+n1+1) d^(n0+n1-m*) D_(n0+n1-m*)."""
    a = params.a
    e = params.n0 + params.n1 - params.m_star
    d = a.denominator
    return (1 - a) ** (params.n0 + params.n1 + 1) * Fraction(d) ** e * lcm_upto(e)


def inclusion_check(params: HGParams, improved: bool = False):
    """Verify the integrality inclusion; returns the exact integer pair.

    Scales the exact form by (1-a)^(n0+n1+1) d^(n0+n1-m*) D_(n0+n1-m*) and,
    when improved, additionally divides by the factorial-ratio denominator.
    A violation raises with the offending prime (it would indicate a bug, not
    a failure of the underlying identity).
    """
    form = linear_form(params)
    s = inclusion_scaling(params)
    b = form.log_coeff * s
    c = form.const_coeff * s
    if improved:
        if 2 * params.m > params.n0 + params.n1:
            raise ValueError(
                "improved inclusion needs the swapped tuple valid: 2m <= n0+n1"
            )
        phi = valuation.phi_denominator(params.m, params.n0, params.n1)
        b = b / phi
        c = c / phi
    for name, x in (("log", b), ("const", c)):
        if x.denominator != 1:
            p = _smallest_prime_factor(x.denominator)
            raise ArithmeticError(
                f"inclusion violated: {name} coefficient has denominator "
                f"divisible by {p} for {params}"
            )
    return int(b), int(c)


def _smallest_prime_factor(n: int) -> int:
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def symmetry_check(params: HGParams) -> bool:
    """Exact factorial-ratio symmetry between a tuple and its swap.

    I(m,n0,n1;a) / (n0! n1!) == I(n0,m,n0+n1-m;a) / (m! (n0+n1-m)!),
    compared coefficient-by-coefficient on the exact forms.  The swapped
    tuple is expanded through the relaxed path: the identity holds even when
    the swap breaks the convenience ordering of the parameters.
    """
    import math

    m, n0, n1 = params.m, params.n0, params.n1
    f1 = linear_form(params)
    b2, c2 = _form_components(n0, m, n0 + n1 - m, params.a)
    q = Fraction(
        math.factorial(m) * math.factorial(n0 + n1 - m),
        math.factorial(n0) * math.factorial(n1),
    )
    return f1.log_coeff * q == b2 and f1.const_coeff * q == c2
