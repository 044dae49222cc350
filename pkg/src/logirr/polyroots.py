"""Dense polynomials over exact rationals with certified real root isolation.

Coefficients are ascending-degree lists of Fractions (or ints).  Roots are
bracketed with Sturm sequences on exact arithmetic, then polished by bisection
plus Newton steps in mpmath at the requested precision.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf

from .exact import to_mpf


def trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def degree(p):
    p = trim(p)
    return len(p) - 1 if any(c != 0 for c in p) else -1


def add(p, q):
    n = max(len(p), len(q))
    return trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    ])


def neg(p):
    return [-c for c in p]


def mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([a * c for a in p])


def power(p, e: int):
    out = [Fraction(1)]
    for _ in range(e):
        out = mul(out, p)
    return out


def derivative(p):
    if len(p) <= 1:
        return [Fraction(0)]
    return [i * c for i, c in enumerate(p)][1:]


def eval_exact(p, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


def eval_mp(p, x):
    out = mpf(0) * x
    for c in reversed(p):
        out = out * x + to_mpf(c)
    return out


def clear_denominators(p):
    """Smallest integer multiple; returns int coefficient list."""
    import math as _math

    den = 1
    for c in p:
        den = _math.lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in p]


def _polydiv_rem(p, q):
    """Remainder of exact polynomial division."""
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    dq = len(q) - 1
    while len(p) - 1 >= dq and any(c != 0 for c in p):
        if p[-1] == 0:
            p = trim(p[:-1])
            continue
        f = p[-1] / q[-1]
        shift = len(p) - len(q)
        for i, c in enumerate(q):
            p[shift + i] -= f * c
        p = trim(p[:-1])
    return p


def sturm_chain(p):
    p = [Fraction(c) for c in trim(p)]
    chain = [p, derivative(p)]
    while degree(chain[-1]) > 0:
        rem = _polydiv_rem(chain[-2], chain[-1])
        if degree(rem) < 0:
            break
        chain.append(neg(rem))
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = eval_exact(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    chain = sturm_chain(p)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def isolate_real_roots(p, lo, hi, max_depth=200):
    """Disjoint rational intervals (a, b], each holding exactly one root in (lo, hi]."""
    p = trim([Fraction(c) for c in p])
    if degree(p) <= 0:
        return []
    chain = sturm_chain(p)
    lo, hi = Fraction(lo), Fraction(hi)

    def go(a, b, va, vb, depth):
        k = va - vb
        if k == 0:
            return []
        if k == 1:
            return [(a, b)]
        if depth > max_depth:
            raise RuntimeError("root isolation depth exceeded")
        m = (a + b) / 2
        vm = _sign_changes(chain, m)
        return go(a, m, va, vm, depth + 1) + go(m, b, vm, vb, depth + 1)

    return go(lo, hi, _sign_changes(chain, lo), _sign_changes(chain, hi), 0)


def refine_root(p, bracket, dps):
    """Polish one isolated root to dps digits: short exact bisection, then
    safeguarded Newton that keeps shrinking the sign-change bracket."""
    a, b = Fraction(bracket[0]), Fraction(bracket[1])
    fa = eval_exact(p, a)
    if fa == 0:
        return to_mpf(a, dps)
    fb = eval_exact(p, b)
    if fb == 0:
        return to_mpf(b, dps)
    for _ in range(8):
        m = (a + b) / 2
        fm = eval_exact(p, m)
        if fm == 0:
            return to_mpf(m, dps)
        if (fa > 0) == (fm > 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    dp = derivative(p)
    with mp.workdps(dps + 15):
        la, lb = to_mpf(a), to_mpf(b)
        sa = 1 if fa > 0 else -1
        x = (la + lb) / 2
        tol = mpf(10) ** (-(dps + 8))
        for _ in range(20 * (dps + 20)):
            fx = eval_mp(p, x)
            if fx == 0:
                return +x
            dfx = eval_mp(dp, x)
            cand = x - fx / dfx if dfx != 0 else (la + lb) / 2
            if not (la < cand < lb):
                cand = (la + lb) / 2
            # shrink the bracket with the sign at the accepted point
            if (1 if fx > 0 else -1) == sa:
                la = x
            else:
                lb = x
            if abs(cand - x) < tol or (lb - la) < tol:
                return +cand
            x = cand
        return +x


def real_roots_in(p, lo, hi, dps):
    """All real roots of p in (lo, hi], refined to dps digits."""
    return [refine_root(p, br, dps) for br in isolate_real_roots(p, lo, hi)]
