"""Growth and decay constants: maxima of product-form objectives on real
intervals via exact critical-point isolation, binomial entropy maxima,
complex saddle points of log-derivative phases, and assembly of
irrationality-exponent bounds from named ledger contributions.

Real-axis maxima are certified: the derivative numerator is an exact rational
polynomial whose roots are isolated with Sturm sequences and refined in
mpmath.  Complex saddles come from a polynomial root finder and carry an
explicit residual certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp, mpf, mpc, log, polyroots, fabs

from . import polyroots as pr
from .exact import BigFloat, GaussianRational, to_mpf


@dataclass(frozen=True)
class ExponentProduct:
    """f(z) = constant * prod |z - r_j|^(e_j) / |z|^(z_exponent), kept as
    exponent data; log-values and the derivative numerator are exact."""

    factors: tuple  # ((root, exponent), ...) root: Fraction or GaussianRational
    z_exponent: Fraction = Fraction(0)
    constant: Fraction = Fraction(1)

    def all_factors(self):
        fs = [(_as_gauss(r), Fraction(e)) for r, e in self.factors]
        if self.z_exponent != 0:
            fs.append((GaussianRational.of(0), -Fraction(self.z_exponent)))
        return fs

    def log_abs(self, z, dps):
        """Re log f at a real or complex point (branch-free: only |z - r|)."""
        with mp.workdps(dps + 10):
            total = log(to_mpf(self.constant))
            for r, e in self.all_factors():
                total += to_mpf(e) * log(abs(z - r.to_mpc()))
            return +total

    def derivative_numerator(self):
        """Exact numerator polynomial of (log f)' = sum e_j/(z - r_j)."""
        fs = self.all_factors()
        num = [Fraction(0)]
        for j, (rj, ej) in enumerate(fs):
            term = [_gr(ej)]
            for i, (ri, _ei) in enumerate(fs):
                if i != j:
                    term = _gpolymul(term, [-_gr(0) - ri, _gr(1)])
            num = _gpolyadd(num, term)
        return num

    def scaled(self, c) -> "ExponentProduct":
        c = Fraction(c)
        return ExponentProduct(
            tuple((r, Fraction(e) * c) for r, e in self.factors),
            Fraction(self.z_exponent) * c,
            self.constant,
        )


def _as_gauss(r):
    if isinstance(r, GaussianRational):
        return r
    return GaussianRational.of(Fraction(r))


def _gr(x):
    return GaussianRational.of(Fraction(x)) if not isinstance(x, GaussianRational) else x


def _gpolymul(p, q):
    out = [GaussianRational.of(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _gpolyadd(p, q):
    n = max(len(p), len(q))
    z = GaussianRational.of(0)
    return [
        (p[i] if i < len(p) else z) + (q[i] if i < len(q) else z) for i in range(n)
    ]


def log_max_on_interval(f: ExponentProduct, interval, dps) -> BigFloat:
    """log of max |f| on the open interval, via exact critical points.

    Boundary behaviour: a root of positive exponent at an endpoint sends
    log|f| to -inf (ignored); a root of negative exponent there makes the
    sup infinite and raises.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    candidates = []
    num = f.derivative_numerator()
    if any(c.im != 0 for c in num):
        raise ValueError("real-interval maximization needs real factor roots")
    poly = [c.re for c in num]
    for root in pr.real_roots_in(poly, lo, hi, dps + 10):
        candidates.append(root)
    for endpoint in (lo, hi):
        unbounded = False
        hits_zero = False
        for r, e in f.all_factors():
            if r.im == 0 and r.re == endpoint:
                if e < 0:
                    unbounded = True
                else:
                    hits_zero = True
        if unbounded:
            raise ArithmeticError(f"|f| unbounded at endpoint {endpoint}")
        if not hits_zero:
            candidates.append(to_mpf(endpoint, dps + 10))
    if not candidates:
        raise ArithmeticError("no interior critical point and empty boundary")
    with mp.workdps(dps + 10):
        best = max(f.log_abs(x, dps) for x in candidates)
    with mp.workdps(dps):
        return BigFloat(+best, dps)


# ---------------------------------------------------------------------------
# binomial entropy maxima


@dataclass(frozen=True)
class EntropyTerm:
    """weight * (slope*y + intercept) * log(slope*y + intercept)."""

    weight: Fraction
    slope: Fraction
    intercept: Fraction


@dataclass(frozen=True)
class EntropyPattern:
    """Sum of entropy terms plus log of a rational constant; the shape taken
    by Stirling limits of binomial products."""

    terms: tuple  # EntropyTerm...
    constant: Fraction = Fraction(1)

    def log_value(self, y, dps):
        with mp.workdps(dps + 10):
            total = log(to_mpf(self.constant))
            for t in self.terms:
                arg = to_mpf(t.slope) * y + to_mpf(t.intercept)
                if arg < 0:
                    raise ArithmeticError("entropy term argument went negative")
                if arg > 0:
                    total += to_mpf(t.weight) * arg * log(arg)
            return +total


def binomial_growth_max(pattern: EntropyPattern, interval, dps) -> BigFloat:
    """log of the max of the entropy expression on the interval.

    Valid when the weighted slopes cancel (always true for ratios of
    binomials), which turns the critical equation into an exact polynomial
    identity  prod (a_i y + b_i)^(w_i a_i) = 1.
    """
    import math

    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    wa = [Fraction(t.weight) * Fraction(t.slope) for t in pattern.terms]
    if sum(wa) != 0:
        raise ValueError("weighted slopes must cancel for the polynomial route")
    den = math.lcm(*(x.denominator for x in wa)) if wa else 1
    pos = [Fraction(1)]
    negp = [Fraction(1)]
    for t, w in zip(pattern.terms, wa):
        e = int(w * den)
        lin = [Fraction(t.intercept), Fraction(t.slope)]
        if e > 0:
            pos = pr.mul(pos, pr.power(lin, e))
        elif e < 0:
            negp = pr.mul(negp, pr.power(lin, -e))
    crit = pr.add(pos, pr.neg(negp))
    candidates = list(pr.real_roots_in(crit, lo, hi, dps + 10))
    candidates += [to_mpf(lo, dps + 10), to_mpf(hi, dps + 10)]
    with mp.workdps(dps + 10):
        best = max(pattern.log_value(y, dps) for y in candidates)
    with mp.workdps(dps):
        return BigFloat(+best, dps)


def rukhadze_entropy_pattern() -> EntropyPattern:
    """Stirling limit of C(k, 7n) C(8n, k-6n) at k = y n; constant 8^8/7^7."""
    F = Fraction
    return EntropyPattern(
        terms=(
            EntropyTerm(F(1), F(1), F(0)),      # y log y
            EntropyTerm(F(-1), F(1), F(-7)),    # -(y-7) log(y-7)
            EntropyTerm(F(-1), F(1), F(-6)),    # -(y-6) log(y-6)
            EntropyTerm(F(-1), F(-1), F(14)),   # -(14-y) log(14-y)
        ),
        constant=Fraction(8 ** 8, 7 ** 7),
    )


def central_binomial_pattern() -> EntropyPattern:
    """Stirling limit of C(2n, yn): max log 4 at y = 1."""
    F = Fraction
    return EntropyPattern(
        terms=(
            EntropyTerm(F(-1), F(1), F(0)),
            EntropyTerm(F(-1), F(-1), F(2)),
        ),
        constant=Fraction(4),
    )


# ---------------------------------------------------------------------------
# complex saddles


def saddle_points(f: ExponentProduct, dps):
    """Roots of f'(z) = 0 with residual certificates.

    Returns [(root: mpc, value: Re f(root): mpf), ...].  Raises on repeated
    roots (degenerate saddle) or residuals above 10^-(dps-5).
    """
    num = f.derivative_numerator()
    while num and num[-1].is_zero():
        num = num[:-1]
    if len(num) <= 1:
        return []
    with mp.workdps(dps + 20):
        coeffs_desc = [c.to_mpc() for c in reversed(num)]
        roots = polyroots(coeffs_desc, maxsteps=300, extraprec=dps * 4)
        tol = mpf(10) ** (-(dps - 5))
        for i, r in enumerate(roots):
            for r2 in roots[i + 1 :]:
                if abs(r - r2) < mpf(10) ** (-dps // 2):
                    raise ArithmeticError(f"degenerate (repeated) saddle near {r}")
            residual = _fprime_abs(f, r, dps)
            if residual > tol:
                raise ArithmeticError(
                    f"saddle residual {residual} above tolerance at {r}"
                )
        out = []
        for r in roots:
            out.append((+mpc(r), +f.log_abs(r, dps)))
    return out


def _fprime_abs(f: ExponentProduct, z, dps):
    with mp.workdps(dps + 10):
        total = mpc(0)
        for r, e in f.all_factors():
            total += to_mpf(e) / (z - r.to_mpc())
        return fabs(total)


def vieta_root_sum(f: ExponentProduct):
    """Exact negative ratio of the two leading derivative-numerator
    coefficients (equals the sum of the saddles)."""
    num = f.derivative_numerator()
    lead = num[-1]
    sub = num[-2]
    return (GaussianRational.of(0) - sub) / lead


# ---------------------------------------------------------------------------
# bound assembly


@dataclass(frozen=True)
class LedgerTerm:
    """One named contribution to C0, C0' or C1."""

    name: str
    side: str  # 'c0' | 'c0_prime' | 'c1'
    value: object  # mpf
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    c0: BigFloat
    c1: BigFloat
    mu: BigFloat
    c0_prime: BigFloat | None = None
    terms: tuple = ()
    label: str = ""

    def as_dict(self, digits=15):
        d = {
            "label": self.label,
            "C0": mp.nstr(self.c0.value, digits),
            "C1": mp.nstr(self.c1.value, digits),
            "mu": mp.nstr(self.mu.value, digits),
            "precision": self.c0.precision,
            "ledger": [
                {
                    "name": t.name,
                    "side": t.side,
                    "value": mp.nstr(t.value, digits),
                    "note": t.note,
                }
                for t in self.terms
            ],
        }
        if self.c0_prime is not None:
            d["C0_prime"] = mp.nstr(self.c0_prime.value, digits)
        return d


class BoundAssemblyError(ArithmeticError):
    pass


def assemble_bound(terms, dps, label="") -> BoundReport:
    """Sum the ledger into (C0 [, C0'], C1) and form mu = 1 + C1/C0.

    C0 <= 0 means the construction proves nothing; a present C0' must
    strictly exceed C0 for the two-form route to apply.
    """
    with mp.workdps(dps):
        c0 = mpf(0)
        c1 = mpf(0)
        c0p = mpf(0)
        has_prime = False
        for t in terms:
            if t.side == "c0":
                c0 += t.value
            elif t.side == "c1":
                c1 += t.value
            elif t.side == "c0_prime":
                c0p += t.value
                has_prime = True
            else:
                raise ValueError(f"unknown ledger side {t.side!r}")
        if c0 <= 0:
            raise BoundAssemblyError(
                f"C0 = {mp.nstr(c0, 12)} <= 0: construction proves nothing"
            )
        if has_prime and c0 >= c0p:
            raise BoundAssemblyError(
                f"C0 = {mp.nstr(c0, 12)} >= C0' = {mp.nstr(c0p, 12)}: "
                "two-form ordering violated"
            )
        mu = 1 + c1 / c0
        return BoundReport(
            c0=BigFloat(+c0, dps),
            c1=BigFloat(+c1, dps),
            mu=BigFloat(+mu, dps),
            c0_prime=BigFloat(+c0p, dps) if has_prime else None,
            terms=tuple(terms),
            label=label,
        )
