"""Integer lattice kernels: prime sieve, periodic-profile minimization scans,
and the integer-polynomial sup-norm box search.

These are the only hot loops in the package that run on machine integers and
floats; everything exact lives elsewhere on big rationals.  Each kernel has a
numba @njit implementation and a vectorized numpy fallback computing the same
thing.  Set LOGIRR_DISABLE_NUMBA=1 to force the numpy path (the import also
falls back automatically when numba is unavailable).
"""

import os

import numpy as np

_DISABLED = os.environ.get("LOGIRR_DISABLE_NUMBA", "").strip() not in ("", "0")

if not _DISABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        _DISABLED = True

USING_NUMBA = not _DISABLED


# ---------------------------------------------------------------------------
# prime sieve

def _sieve_numpy(limit):
    flags = np.ones(limit + 1, dtype=np.bool_)
    flags[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


if USING_NUMBA:

    @njit(cache=True)
    def _sieve_numba(limit):
        flags = np.ones(limit + 1, dtype=np.bool_)
        flags[0] = False
        flags[1] = False
        p = 2
        while p * p <= limit:
            if flags[p]:
                for q in range(p * p, limit + 1, p):
                    flags[q] = False
            p += 1
        return flags


def sieve_flags(limit):
    """Boolean primality table for 0..limit."""
    if limit < 1:
        return np.zeros(max(limit + 1, 0), dtype=np.bool_)
    if USING_NUMBA:
        return _sieve_numba(limit)
    return _sieve_numpy(limit)


# ---------------------------------------------------------------------------
# minimum of the 1-periodic carry-count profile
#
# For x = q/L and y_j on the lattice (1/M)Z, M a multiple of L, the profile
#   w(x, y) = #{ j : y_j > frac(rate_j * x) }
# is minimized over (y_0, y_1) with y_2 forced by
#   y_0 + y_1 + y_2 == frac(alpha * x)  (mod 1).
# All comparisons reduce to integer arithmetic: y_j = r_j/M and
# frac(rate_j q / L) = ((rate_j * q) mod L)/L, so y_j > frac(...) iff
# r_j * L > ((rate_j * q) mod L) * M.

def _varpi_min_numpy(q, L, M, a0, a1, a2, alpha):
    f0 = (a0 * q) % L
    f1 = (a1 * q) % L
    f2 = (a2 * q) % L
    s = ((alpha * q) % L) * (M // L)
    r0 = np.arange(M, dtype=np.int64)
    c0 = (r0 * L > f0 * M).astype(np.int64)
    r1 = np.arange(M, dtype=np.int64)
    c1 = (r1 * L > f1 * M).astype(np.int64)
    r2 = (s - r0[:, None] - r1[None, :]) % M
    c2 = (r2 * L > f2 * M).astype(np.int64)
    total = c0[:, None] + c1[None, :] + c2
    idx = int(np.argmin(total))
    i, j = divmod(idx, M)
    return int(total[i, j]), int(r0[i]), int(r1[j]), int(r2[i, j])


if USING_NUMBA:

    @njit(cache=True)
    def _varpi_min_numba(q, L, M, a0, a1, a2, alpha):
        f0 = (a0 * q) % L
        f1 = (a1 * q) % L
        f2 = (a2 * q) % L
        s = ((alpha * q) % L) * (M // L)
        best = 4
        b0 = 0
        b1 = 0
        b2 = 0
        for r0 in range(M):
            c0 = 1 if r0 * L > f0 * M else 0
            if c0 >= best:
                continue
            for r1 in range(M):
                c1 = c0 + (1 if r1 * L > f1 * M else 0)
                if c1 >= best:
                    continue
                r2 = (s - r0 - r1) % M
                c2 = c1 + (1 if r2 * L > f2 * M else 0)
                if c2 < best:
                    best = c2
                    b0, b1, b2 = r0, r1, r2
                    if best == 0:
                        return best, b0, b1, b2
        return best, b0, b1, b2


def varpi_min(q, L, M, rates, alpha):
    """Minimum of the carry profile at x = q/L over the (1/M) y-lattice.

    Returns (min_value, r0, r1, r2) with the attaining witness y_j = r_j/M.
    """
    a0, a1, a2 = rates
    if USING_NUMBA:
        return _varpi_min_numba(q, L, M, a0, a1, a2, alpha)
    return _varpi_min_numpy(q, L, M, a0, a1, a2, alpha)


# ---------------------------------------------------------------------------
# sup-norm box search: breadth-first expansion over integer coefficients
#
# State: values of the partial polynomial sum_{i<level} c_i y^i at the sample
# points.  A prefix survives if |partial(y_k)| <= bound + tail(level, y_k) at
# every sample, where tail bounds the largest possible contribution of the
# still-unassigned coefficients.  Sample maxima are lower bounds on the true
# sup, so pruning against an achieved bound is sound.

def _gstar_expand_numpy(values, powers, cmax, tail, bound):
    ncand, nsamp = values.shape
    coeffs = np.arange(-cmax, cmax + 1, dtype=np.float64)
    expanded = values[:, None, :] + coeffs[None, :, None] * powers[None, None, :]
    expanded = expanded.reshape(ncand * coeffs.size, nsamp)
    keep = np.all(np.abs(expanded) <= bound + tail, axis=1)
    picked = np.repeat(np.arange(ncand, dtype=np.int64), coeffs.size)[keep]
    chosen = np.tile(np.arange(coeffs.size, dtype=np.int64), ncand)[keep]
    return expanded[keep], picked, chosen - cmax


if USING_NUMBA:

    @njit(cache=True)
    def _gstar_expand_numba(values, powers, cmax, tail, bound):
        ncand, nsamp = values.shape
        width = 2 * cmax + 1
        out = np.empty((ncand * width, nsamp), dtype=np.float64)
        picked = np.empty(ncand * width, dtype=np.int64)
        chosen = np.empty(ncand * width, dtype=np.int64)
        count = 0
        for i in range(ncand):
            for ci in range(width):
                c = ci - cmax
                ok = True
                for k in range(nsamp):
                    v = values[i, k] + c * powers[k]
                    if abs(v) > bound + tail[k]:
                        ok = False
                        break
                if ok:
                    for k in range(nsamp):
                        out[count, k] = values[i, k] + c * powers[k]
                    picked[count] = i
                    chosen[count] = c
                    count += 1
        return out[:count], picked[:count], chosen[:count]


def gstar_expand(values, powers, cmax, tail, bound):
    """One coefficient level of the box search; returns survivors."""
    if USING_NUMBA:
        return _gstar_expand_numba(values, powers, cmax, tail, bound)
    return _gstar_expand_numpy(values, powers, cmax, tail, bound)
