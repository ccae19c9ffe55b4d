"""Panel quadrature and tail extrapolation for oscillatory integrands.

Integrands of the form |f(x)|**(2p) * x**s, with f having simple zeros at
the panel ends, behave like (x - a)**(2p) (b - x)**(2p) on each panel.
Gauss-Jacobi rules with those exponents absorb the endpoint behaviour, so
the remaining factor is analytic and the rule converges geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .errors import ToleranceError

__all__ = ["QuadratureResult", "jacobi_rule", "panel_integrals", "richardson_tail"]


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of a certified quadrature."""

    value: float
    abs_error_estimate: float
    panels_used: int
    certified: bool

    def __post_init__(self):
        if self.abs_error_estimate < 0:
            raise ValueError("error estimate must be non-negative")


@lru_cache(maxsize=256)
def jacobi_rule(m, right_exp, left_exp):
    """Nodes on [-1, 1] and weights divided by the Jacobi weight.

    Returns ``(u, w)`` such that ``sum(w * g(u))`` approximates the plain
    integral of ``g`` over [-1, 1] when g ~ (1-u)**right_exp (1+u)**left_exp
    times an analytic factor.
    """
    u, w = roots_jacobi(m, right_exp, left_exp)
    w = w / ((1.0 - u) ** right_exp * (1.0 + u) ** left_exp)
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def panel_integrals(log_integrand, a, b, right_exp, left_exp, m):
    """Integrals of exp(log_integrand(x)) over each panel [a_i, b_i].

    ``log_integrand`` receives a 2-D array of abscissae (panels x nodes)
    and returns the log of the (positive) integrand; -inf marks zeros.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    u, w = jacobi_rule(m, float(right_exp), float(left_exp))
    half = 0.5 * (b - a)
    x = 0.5 * (a + b)[:, None] + half[:, None] * u[None, :]
    with np.errstate(under="ignore"):
        vals = np.exp(log_integrand(x))
    return half * (vals @ w)


def richardson_tail(scales, partial_sums, leading, terms=6):
    """Extrapolate partial sums S(T) = S_inf + T**leading * (c0 + c1/T + ...).

    ``scales`` are increasing T values with ``leading < 0``.  The last
    ``terms + 1`` points spread over the second half of the data fit the
    model exactly; the limit and an error estimate from a coarser fit
    (one term fewer and a shallower depth) are returned.
    """
    scales = np.asarray(scales, dtype=float)
    sums = np.asarray(partial_sums, dtype=float)
    if len(scales) < 2 * terms + 4:
        raise ToleranceError("too few panels for tail extrapolation")

    def fit(last, k):
        idx = np.unique(np.linspace(last // 2, last - 1, k + 1).round().astype(int))
        t = scales[idx] / scales[last - 1]
        cols = [np.ones_like(t)] + [t ** (leading - j) for j in range(k)]
        coef = np.linalg.solve(np.column_stack(cols), sums[idx])
        return coef[0]

    full = len(scales)
    best = fit(full, terms)
    alt = [fit(full, terms - 1), fit((3 * full) // 4, terms), fit((3 * full) // 4, terms - 1)]
    err = max(abs(best - v) for v in alt)
    return best, err
