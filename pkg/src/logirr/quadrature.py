"""Adaptive high-precision quadrature used as the independent numeric oracle.

Wraps mpmath's tanh-sinh integrator with explicit error control: the degree
escalates (node count doubling per step) until the reported error meets the
target, and failure to converge raises instead of returning a silently
truncated value.  The hard cap corresponds to about 2**20 nodes.
"""

from __future__ import annotations

from mpmath import mp, mpf

_MAX_DEGREE = 20  # tanh-sinh level; nodes ~ 2**degree


class QuadratureError(RuntimeError):
    """Requested precision was not reached within the node budget."""


def integrate(f, points, dps, target_exp=None):
    """Integrate f along the piecewise-linear path through `points`.

    Runs at elevated working precision and verifies the integrator's own
    error estimate against 10**target_exp (default: full dps minus a small
    guard).  Returns an mpf/mpc at dps digits.
    """
    if target_exp is None:
        target_exp = -(dps - 5)
    last_err = None
    for extra in (10, 30, 80):
        with mp.workdps(dps + extra):
            val, err = mp.quad(f, points, error=True, maxdegree=_MAX_DEGREE)
            if err <= mpf(10) ** target_exp:
                with mp.workdps(dps):
                    return +val
            last_err = err
    raise QuadratureError(
        f"quadrature stalled at error {last_err} (target 1e{target_exp})"
    )
