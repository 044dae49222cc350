"""Simultaneous linear forms in two logarithms from the complex contour
integral of (z-1)^n0 (z-a1)^n1 (z-a2)^n2 / z^(m+1).

The multinomial expansion of the integrand yields, for any target endpoint in
{a1, a2}, an exact form  B*log(target) + A  whose log coefficient B is the
same for every target; that shared B is what makes the forms simultaneous.
Denominator control comes from three ingredients: the lcm of the stratum
offsets, the large-prime part of the binomial-product profile, and worst-case
point-power bookkeeping; all three are assembled into auditable bound
ledgers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, mpc, log, fabs

from . import asympt, valuation
from .asympt import BoundReport, ExponentProduct, LedgerTerm, assemble_bound
from .exact import BigFloat, GaussianRational, binomial, to_mpf
from .logforms import LogLinearForm
from .quadrature import integrate


def _as_point(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational.of(Fraction(x))


@dataclass(frozen=True)
class HataConfig:
    """Concrete instance: points (a1..ak), exponents (n0..nk) and pole order m."""

    points: tuple  # GaussianRational, distinct from 0 and 1
    exponents: tuple  # (n0, n1, ..., nk)
    m: int

    def __post_init__(self):
        pts = tuple(_as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(self.exponents) != len(pts) + 1:
            raise ValueError("need one exponent for z-1 plus one per point")
        if min(self.exponents) < 0 or self.m < 0:
            raise ValueError("exponents must be non-negative")
        for p in pts:
            if p.is_zero() or p == GaussianRational.of(1):
                raise ValueError("points must avoid 0 and 1")

    @property
    def k(self) -> int:
        return len(self.points)

    def all_points(self):
        """(a_0 = 1, a_1, ..., a_k)."""
        return (GaussianRational.of(1),) + self.points


@dataclass(frozen=True)
class HataFamily:
    """Exponent rates (per n) for a growing family of configs."""

    points: tuple
    rates: tuple  # (alpha_0, ..., alpha_k)
    alpha: int
    label: str = ""

    def at(self, n: int) -> HataConfig:
        return HataConfig(
            self.points, tuple(r * n for r in self.rates), self.alpha * n
        )

    @property
    def beta(self) -> int:
        return max(self.alpha, sum(self.rates) - self.alpha)

    def profile_applies(self) -> bool:
        # the carry-count minimization is formulated for three exponent rates
        return len(self.rates) == 3

    def k_points(self) -> int:
        return len(self.points)


def _weights(config: HataConfig):
    """Per-factor stratum weights w_j[l] = (-1)^l a_j^(n_j - l) C(n_j, l),
    returned as scaled Gaussian integers plus the common scale factor.

    Scaling by denom(a_j)^(n_j) keeps the inner accumulation on plain
    integers, which is what makes the full l-tuple sweep affordable.
    """
    weights = []
    scale = Fraction(1)
    for a_j, n_j in zip(config.all_points(), config.exponents):
        d = math.lcm(a_j.re.denominator, a_j.im.denominator)
        scale /= Fraction(d) ** n_j
        are = a_j.re * d
        aim = a_j.im * d
        row = []
        pow_re, pow_im = 1, 0  # (a_j * d)^0
        powers = [(1, 0)]
        for _ in range(n_j):
            pow_re, pow_im = (
                pow_re * int(are) - pow_im * int(aim),
                pow_re * int(aim) + pow_im * int(are),
            )
            powers.append((pow_re, pow_im))
        for l in range(n_j + 1):
            pr_, pi_ = powers[n_j - l]
            c = binomial(n_j, l) * (-1) ** l * d ** l
            row.append((c * pr_, c * pi_))
        weights.append(row)
    return weights, scale


def stratum_sums(config: HataConfig):
    """Exact sums  c_s = sum over l-tuples with |l| = s of A_l prod C(n_j, l_j),
    one per total degree s, as GaussianRationals.

    Iterates the l-tuples directly (no convolution shortcut); the k = 2 sweep
    is the costly exact loop of this module.
    """
    weights, scale = _weights(config)
    total_deg = sum(config.exponents)
    re_acc = [0] * (total_deg + 1)
    im_acc = [0] * (total_deg + 1)
    if config.k == 1:
        w0, w1 = weights
        for l0, (r0, i0) in enumerate(w0):
            for l1, (r1, i1) in enumerate(w1):
                s = l0 + l1
                re_acc[s] += r0 * r1 - i0 * i1
                im_acc[s] += r0 * i1 + i0 * r1
    elif config.k == 2:
        w0, w1, w2 = weights
        for l0, (r0, i0) in enumerate(w0):
            for l1, (r1, i1) in enumerate(w1):
                ra = r0 * r1 - i0 * i1
                ia = r0 * i1 + i0 * r1
                base = l0 + l1
                for l2, (r2, i2) in enumerate(w2):
                    s = base + l2
                    re_acc[s] += ra * r2 - ia * i2
                    im_acc[s] += ra * i2 + ia * r2
    else:
        raise ValueError("only k = 1 and k = 2 are supported")
    return [
        GaussianRational(re * scale, im * scale)
        for re, im in zip(re_acc, im_acc)
    ]


def expand_form(config: HataConfig, target) -> LogLinearForm:
    """Exact form B*log(target) + A for one target point.

    The |l| = m stratum supplies the shared log coefficient; every other
    stratum contributes (target^(s-m) - 1)/(s-m) to the constant.
    """
    target = _as_point(target)
    if target not in config.points:
        raise ValueError("target must be one of the configured points")
    sums = stratum_sums(config)
    m = config.m
    log_coeff = sums[m] if m < len(sums) else GaussianRational.of(0)
    const = GaussianRational.of(0)
    for s, c_s in enumerate(sums):
        if s == m or c_s.is_zero():
            continue
        e = s - m
        const = const + c_s * ((target ** e) - GaussianRational.of(1)) / Fraction(e)
    return LogLinearForm(log_coeff, const, target)


def form_value(config: HataConfig, target, dps, sums=None):
    """Numeric value of the form at one target from the exact stratum sums.

    Avoids assembling the exact rational constant (whose common denominator
    is enormous at large n); the stratum sums stay exact and only the final
    accumulation is floating, at the caller's precision.
    """
    target = _as_point(target)
    if sums is None:
        sums = stratum_sums(config)
    m = config.m
    with mp.workdps(dps):
        t = target.to_mpc()
        total = sums[m].to_mpc() * log(t) if m < len(sums) else mpc(0)
        for s, c_s in enumerate(sums):
            if s == m or c_s.is_zero():
                continue
            total += c_s.to_mpc() * (t ** (s - m) - 1) / (s - m)
        return +total


def contour_integral(config: HataConfig, target, dps, path=None):
    """Quadrature of the defining integral along a path from 1 to the target.

    Default path is the straight segment, with a detour through 1 + i/2 when
    the segment passes within 1e-3 of the pole at 0.  Paths through 0 are
    rejected.
    """
    target = _as_point(target)
    t = target.to_mpc()
    if path is None:
        path = [mpc(1), t]
        if _segment_distance_to_zero(mpc(1), t) < 1e-3:
            path = [mpc(1), mpc(1, 0.5), t]
    for a, b in zip(path, path[1:]):
        if _segment_distance_to_zero(mpc(a), mpc(b)) == 0:
            raise ValueError("integration path passes through 0")
    pts = [p.to_mpc() for p in config.all_points()]
    exps = list(config.exponents)
    m = config.m

    def f(z):
        out = mpc(1)
        for p, e in zip(pts, exps):
            out *= (z - p) ** e
        return out / z ** (m + 1)

    val = integrate(f, path, dps)
    with mp.workdps(dps):
        return +mpc(val)


def _segment_distance_to_zero(a, b):
    # distance from origin to segment [a, b]
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0:
        return abs(a)
    t = -(a.real * ab.real + a.imag * ab.imag) / denom
    t = max(0.0, min(1.0, float(t)))
    return abs(a + t * ab)


# ---------------------------------------------------------------------------
# denominator witnesses for the 2, 1+i configuration


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    proviso_ok: bool
    failed_proviso: str = ""
    failures: tuple = ()
    min_scaling_power: int = 0  # power of (1+i) needed globally


def _power_table(base: GaussianRational, top: int):
    out = [GaussianRational.of(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def ord_1_plus_i(x: GaussianRational) -> int:
    """Valuation at the Gaussian prime 1+i (ord of 2 is 2); huge for 0."""
    if x.is_zero():
        return 10 ** 9
    n = x.norm()
    v = 0
    num, den = n.numerator, n.denominator
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return v


def denominator_witness(config: HataConfig, target) -> WitnessReport:
    """Exact integrality of A_l * target^(|l|-m) for the points (2, 1+i).

    Verifies that every stratum weight times the target power is a Gaussian
    integer, under the provisos n1 + [n2/2] - m >= 0 and n1 + n2 - m >= 0,
    and reports the minimal global (1+i)-power rescaling otherwise.
    """
    if config.k != 2 or config.points != (
        GaussianRational.of(2),
        GaussianRational.of(1, 1),
    ):
        raise ValueError("witness identities apply to the points (2, 1+i)")
    target = _as_point(target)
    n0, n1, n2 = config.exponents
    m = config.m
    proviso_ok = True
    failed = ""
    if n1 + n2 // 2 - m < 0:
        proviso_ok = False
        failed = f"n1 + [n2/2] - m = {n1 + n2 // 2 - m} < 0"
    elif n1 + n2 - m < 0:
        proviso_ok = False
        failed = f"n1 + n2 - m = {n1 + n2 - m} < 0"
    a1 = GaussianRational.of(2)
    a2 = GaussianRational.of(1, 1)
    # power tables keep the triple sweep to one multiply per tuple
    pows1 = _power_table(a1, n1)
    pows2 = _power_table(a2, n2)
    smin, smax = -m, n0 + n1 + n2 - m
    tpow = {smin: target ** smin}
    for s in range(smin + 1, smax + 1):
        tpow[s] = tpow[s - 1] * target
    failures = []
    min_ord = 0
    for l1 in range(n1 + 1):
        for l2 in range(n2 + 1):
            w = pows1[n1 - l1] * pows2[n2 - l2]
            for l0 in range(n0 + 1):
                v = w * tpow[l0 + l1 + l2 - m]
                o = ord_1_plus_i(v)
                if o < min_ord:
                    min_ord = o
                if not v.is_gaussian_integer() and len(failures) < 5:
                    failures.append((l0, l1, l2))
    ok = proviso_ok and not failures
    return WitnessReport(
        ok=ok,
        proviso_ok=proviso_ok,
        failed_proviso=failed,
        failures=tuple(failures),
        min_scaling_power=max(0, -min_ord),
    )


# ---------------------------------------------------------------------------
# bound assembly


def point_power_rates(points, rates, alpha):
    """Worst-case per-prime denominator rates of A_l * t^(|l|-m) over the
    exponent box, by exact corner enumeration (the box objective is linear
    in each l_j so corners suffice).

    Rational primes are measured by v_p; a non-real point routes the prime 2
    through ord at (1+i) instead.  Returns {prime_label: (rate, log_base)}.
    """
    import itertools

    pts = [_as_point(p) for p in points]
    complex_case = any(p.im != 0 for p in pts)
    primes = set()
    for p in pts:
        for q in _rational_primes_of(p):
            primes.add(q)
    out = {}
    for q in sorted(primes):
        if q == 2 and complex_case:
            val = lambda x: ord_1_plus_i(x)
            label = "1+i"
            log_base = Fraction(1, 2)  # ord counts (1+i); |1+i|^2 = 2
        else:
            val = lambda x, q=q: _vq(x, q)
            label = str(q)
            log_base = Fraction(1)
        worst = Fraction(0)
        for t in pts:
            for corner in itertools.product(*[(0, r) for r in rates]):
                sigma = sum(corner) - alpha
                base = sum(
                    val(p) * (r - c)
                    for p, r, c in zip(pts, rates[1:], corner[1:])
                )
                with_pow = base + val(t) * sigma
                worst = min(worst, Fraction(with_pow), Fraction(base))
        if worst < 0:
            out[label] = (-worst, q, log_base)
    return out


def _rational_primes_of(p: GaussianRational):
    out = set()
    for x in (p.re, p.im, p.norm()):
        for n in (x.numerator, x.denominator):
            n = abs(n)
            f = 2
            while f * f <= n:
                if n % f == 0:
                    out.add(f)
                    while n % f == 0:
                        n //= f
                f += 1
            if n > 1:
                out.add(n)
    return out


def _vq(x: GaussianRational, q: int) -> int:
    if x.im != 0:
        raise ValueError("rational valuation on non-real value")
    fr = x.re
    if fr == 0:
        return 10 ** 9
    v = 0
    num, den = fr.numerator, fr.denominator
    while num % q == 0:
        num //= q
        v += 1
    while den % q == 0:
        den //= q
        v -= 1
    return v


def empirical_rates(family: HataFamily, n_probe: int, dps=30):
    """log|J(target)|/n at a probe index, one value per target (quadrature)."""
    config = family.at(n_probe)
    out = []
    # integrand magnitude ~ exp(n * max|f|); pad working digits generously
    pad = 7 * n_probe + dps
    for t in family.points:
        val = contour_integral(config, t, pad)
        with mp.workdps(dps):
            out.append(+log(fabs(val)) / n_probe)
    return out


def identify_saddles(family: HataFamily, dps, n_probe=24):
    """Match each decaying form to the saddle governing it, empirically.

    Returns (decays, coeff_value) where decays is a list of
    (description, Re f at the matched saddle).  When both target integrals
    share one leading saddle (both integration segments cross the same
    peak), the second independent form is the difference form in
    log(a2/a1), whose integral runs between the two targets and is probed
    separately.
    """
    f = phase_product(family)
    saddles = asympt.saddle_points(f, dps)
    values = [v for _, v in saddles]
    rates = empirical_rates(family, n_probe)
    chosen = []
    for r in rates:
        best = min(range(len(values)), key=lambda i: abs(values[i] - r))
        chosen.append(best)
    decays = []
    if len(set(chosen)) == len(chosen):
        for idx, t in zip(chosen, family.points):
            decays.append((f"target {t}", values[idx]))
        used = set(chosen)
    elif family.k_points() == 2:
        shared = chosen[0]
        t1, t2 = family.points
        decays.append((f"targets {t1} and {t2}, common leading saddle",
                       values[shared]))
        diff_rate = _difference_rate(family, n_probe)
        rest = [i for i in range(len(values)) if i != shared]
        best = min(rest, key=lambda i: abs(values[i] - diff_rate))
        decays.append((f"difference form log({t2}/{t1})", values[best]))
        used = {shared, best}
    else:
        raise ArithmeticError("could not separate the decaying saddles")
    remaining = [i for i in range(len(values)) if i not in used]
    coeff_value = max(values[i] for i in remaining) if remaining else max(values)
    return decays, coeff_value


def _difference_rate(family: HataFamily, n_probe: int, dps=30):
    """log||/n of the integral between the two targets (the difference form)."""
    config = family.at(n_probe)
    t1, t2 = family.points
    pts = [p.to_mpc() for p in config.all_points()]
    exps = list(config.exponents)
    m = config.m

    def f(z):
        out = mpc(1)
        for p, e in zip(pts, exps):
            out *= (z - p) ** e
        return out / z ** (m + 1)

    val = integrate(f, [t1.to_mpc(), t2.to_mpc()], 7 * n_probe + dps)
    with mp.workdps(dps):
        return +log(fabs(val)) / n_probe


def phase_product(family: HataFamily) -> ExponentProduct:
    """The exponent-rate product whose log drives the saddle analysis."""
    pts = (GaussianRational.of(1),) + tuple(_as_point(p) for p in family.points)
    return ExponentProduct(
        factors=tuple((p, Fraction(r)) for p, r in zip(pts, family.rates)),
        z_exponent=Fraction(family.alpha),
    )


def arithmetic_ledger(family: HataFamily, dps):
    """Common scaling growth terms shared by every target of the family."""
    terms = []
    beta = family.beta
    terms.append(("stratum lcm growth", mpf(beta), "lcm of 1..beta*n"))
    if family.profile_applies():
        profile, _cert = valuation.minimize_varpi(*family.rates, family.alpha)
        if not profile.is_zero():
            saving = valuation.valuation_asymptotic(profile, dps).value
            terms.append(
                ("large-prime profile saving", -saving,
                 "excluded primes via the carry-count profile")
            )
    rates_w = point_power_rates(family.points, tuple(family.rates), family.alpha)
    for label, (w, q, log_base) in sorted(rates_w.items()):
        with mp.workdps(dps):
            growth = to_mpf(Fraction(w)) * log(mpf(q)) * to_mpf(log_base)
        terms.append(
            (f"point power {label}^{w}n", growth, "worst-corner denominator clearing")
        )
    return terms


def hata_bound(family: HataFamily, dps, n_probe=24) -> BoundReport:
    """Assembled bound for the family: saddle decay/growth plus the
    arithmetic ledger, through the one- or two-form route."""
    decays, coeff_value = identify_saddles(family, dps, n_probe)
    arith = arithmetic_ledger(family, dps)
    terms = []
    with mp.workdps(dps):
        # order so that C0 (the slower decay) comes first
        order = sorted(decays, key=lambda d: -d[1])
        sides = ["c0", "c0_prime"][: len(order)]
        for side, (desc, value) in zip(sides, order):
            terms.append(
                LedgerTerm(
                    f"integral decay at saddle ({desc})",
                    side,
                    -value,
                    "Re of the phase at the matched saddle",
                )
            )
            for name, val, note in arith:
                terms.append(LedgerTerm(name, side, -val, note))
        terms.append(
            LedgerTerm(
                "coefficient growth at saddle",
                "c1",
                coeff_value,
                "Re of the phase at the coefficient saddle",
            )
        )
        for name, val, note in arith:
            terms.append(LedgerTerm(name, "c1", val, note))
    return assemble_bound(terms, dps, label=family.label)
