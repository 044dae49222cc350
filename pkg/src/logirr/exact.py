"""Exact arithmetic ground layer: rationals, Gaussian rationals, tracked-precision
floats, lcm/valuation utilities and prime generation.

Rationals are fractions.Fraction throughout (always reduced, positive
denominator).  GaussianRational is the exact field Q(i) used by the
simultaneous-form constructions; BigFloat carries an mpmath value together
with the decimal precision it was computed at.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, mpc

from ._kernels import sieve_flags

Rational = Fraction

DEFAULT_DPS = 60

# segmented-sieve cutoff; Miller-Rabin handles anything larger
_SIEVE_LIMIT = 10_000_000


def lcm_upto(n: int) -> int:
    """D_n = lcm(1, ..., n); empty product (n <= 1) is 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    for k in range(2, n + 1):
        out = math.lcm(out, k)
    return out


def ordp_factorial(p: int, n: int) -> int:
    """Exact p-adic valuation of n! via the floored geometric sums."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all 64-bit and beyond via full base set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    if lo > hi:
        return []
    lo = max(lo, 2)
    if hi <= _SIEVE_LIMIT:
        flags = sieve_flags(hi)
        return [int(p) for p in range(lo, hi + 1) if flags[p]]
    out = []
    if lo <= _SIEVE_LIMIT:
        out.extend(primes_in(lo, _SIEVE_LIMIT))
        lo = _SIEVE_LIMIT + 1
    out.extend(p for p in range(lo, hi + 1) if is_prime(p))
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def to_mpf(x, dps: int | None = None):
    """Exact Fraction/int -> mpf at the current (or given) precision."""
    if dps is None:
        if isinstance(x, Fraction):
            return mpf(x.numerator) / mpf(x.denominator)
        return mpf(x)
    with mp.workdps(dps):
        return to_mpf(x)


@dataclass(frozen=True)
class BigFloat:
    """A numeric result together with the decimal precision it carries."""

    value: object  # mpf or mpc
    precision: int

    def __float__(self):
        return float(self.value)

    def __complex__(self):
        return complex(self.value)

    def __str__(self):
        with mp.workdps(self.precision):
            return mp.nstr(self.value, self.precision)

    def __repr__(self):
        return f"BigFloat({self}, dps={self.precision})"


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i) with exact Fraction components."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n2 = other.norm()
        if n2 == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n2,
            (self.im * other.re - self.re * other.im) / n2,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return (GaussianRational.of(1) / self) ** (-k)
        out = GaussianRational.of(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """x * conj(x) as an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_mpc(self):
        return mpc(to_mpf(self.re), to_mpf(self.im))

    def __str__(self):
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    raise TypeError(f"cannot coerce {type(x)} to GaussianRational")
