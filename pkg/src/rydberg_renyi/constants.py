"""The three leading-order constants of the Laguerre L_p-norm asymptotics.

* cosine regime: C(beta, p), a closed gamma-function expression;
* Bessel regime: C_B(alpha, beta, p) = 2 int_0^inf t^(2 beta + 1) |J_alpha(2t)|^(2p) dt;
* Airy regime:   C_A(p) = int_R [2 pi 2^(-1/3) Ai(-t 2^(-2/3))^2]^p dt.

The two improper integrals are summed panel by panel between consecutive
zeros of the oscillating factor.  The slowly converging tail is removed by
Richardson extrapolation in the panel endpoint, with the known leading
power; two truncation depths must agree before a value is returned.
"""

from __future__ import annotations

import math
import threading

import numpy as np

from .errors import DivergenceError, PoleError, ToleranceError
from .quadrature import panel_integrals, richardson_tail
from .special import Accuracy, airy_ai, airy_ai_zeros, bessel_j, bessel_j_zeros, log_gamma

__all__ = [
    "ConstantRequest",
    "cosine_constant",
    "bessel_constant",
    "bessel_moment",
    "airy_constant",
    "airy_moment",
    "clear_cache",
]

DEFAULT_ACCURACY = Accuracy()

_PANEL_NODES = 24
_BESSEL_PANELS = 240
_AIRY_PANELS = 240

_cache: dict = {}
_cache_lock = threading.Lock()


class ConstantRequest:
    """Parameters of a regime-constant evaluation (alpha, beta, p, accuracy)."""

    __slots__ = ("alpha", "beta", "p", "accuracy")

    def __init__(self, alpha=None, beta=None, p=None, accuracy=DEFAULT_ACCURACY):
        if p is not None and not p > 0:
            raise DivergenceError(f"p must be positive, got {p}")
        if alpha is not None and alpha < -0.5:
            raise DivergenceError(f"alpha must be >= -1/2, got {alpha}")
        self.alpha = alpha
        self.beta = beta
        self.p = p
        self.accuracy = accuracy

    def __repr__(self):
        return f"ConstantRequest(alpha={self.alpha}, beta={self.beta}, p={self.p})"


def clear_cache():
    with _cache_lock:
        _cache.clear()


def _cached(key, compute):
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    value = compute()
    with _cache_lock:
        _cache.setdefault(key, value)
    return value


def cosine_constant(beta, p):
    """C(beta, p) = 2^(beta+1) pi^-(p+1/2) G(beta+1-p/2) G(1-p/2) G(p+1/2) / (G(beta+2-p) G(1+p)).

    Raises
    ------
    PoleError
        When beta + 1 - p/2 <= 0 (cosine-Bessel transition and beyond) or
        1 - p/2 <= 0 (cosine-Airy transition and beyond).
    """
    if not p > 0:
        raise PoleError(f"p must be positive, got {p}", factor="p")
    a1 = beta + 1.0 - 0.5 * p
    a2 = 1.0 - 0.5 * p
    if a1 <= 0:
        raise PoleError(f"gamma factor beta+1-p/2 = {a1:.6g} <= 0", factor="beta+1-p/2")
    if a2 <= 0:
        raise PoleError(f"gamma factor 1-p/2 = {a2:.6g} <= 0", factor="1-p/2")
    # beta + 2 - p = a1 + a2 > 0, so every gamma argument is positive
    log_c = (
        (beta + 1.0) * math.log(2.0)
        - (p + 0.5) * math.log(math.pi)
        + log_gamma(a1)
        + log_gamma(a2)
        + log_gamma(p + 0.5)
        - log_gamma(beta + 2.0 - p)
        - log_gamma(1.0 + p)
    )
    return math.exp(log_c)


# --------------------------------------------------------------------------
# Bessel moment


def _check_bessel(alpha, beta, p):
    if not p > 0:
        raise DivergenceError(f"p must be positive, got {p}")
    if alpha < -0.5:
        raise DivergenceError(f"alpha must be >= -1/2, got {alpha}")
    origin = 2.0 * p * alpha + 2.0 * beta + 1.0
    if not origin > -1.0:
        raise DivergenceError(
            f"integral diverges at 0: 2 p alpha + 2 beta + 1 = {origin:.6g} must exceed -1"
        )
    tail = 2.0 * beta + 1.0 - p
    if not tail < -1.0:
        raise DivergenceError(f"integral diverges at infinity: 2 beta + 1 - p = {tail:.6g} must be < -1")


def bessel_moment(alpha, exponent, p, accuracy=DEFAULT_ACCURACY, scale=1.0, panels=_BESSEL_PANELS):
    """int_0^inf t^exponent |J_alpha(scale t)|^(2p) dt, panelled at the zeros of J_alpha(scale t).

    Returns ``(value, error_estimate)``.
    """
    zeros = bessel_j_zeros(alpha, panels) / scale

    def log_g(t):
        with np.errstate(divide="ignore"):
            return exponent * np.log(t) + 2.0 * p * np.log(np.abs(bessel_j(alpha, scale * t.ravel()))).reshape(
                t.shape
            )

    first = panel_integrals(log_g, 0.0, zeros[0], 2.0 * p, exponent + 2.0 * p * alpha, _PANEL_NODES)
    rest = panel_integrals(log_g, zeros[:-1], zeros[1:], 2.0 * p, 2.0 * p, _PANEL_NODES)
    pieces = np.concatenate((first, rest))
    sums = np.cumsum(pieces)
    # tail of t^e |J|^{2p} ~ t^{e - p}: partial sums approach the limit like T^{e + 1 - p}
    leading = exponent + 1.0 - p
    value, err = richardson_tail(zeros, sums, leading)
    # quadrature error: re-run the shortest and longest panels with more nodes
    check = panel_integrals(log_g, zeros[-2:-1], zeros[-1:], 2.0 * p, 2.0 * p, _PANEL_NODES + 8)[0]
    check0 = panel_integrals(log_g, 0.0, zeros[0], 2.0 * p, exponent + 2.0 * p * alpha, _PANEL_NODES + 8)[0]
    err += abs(check - pieces[-1]) * panels + abs(check0 - pieces[0])
    return value, err


def bessel_constant(alpha, beta, p, acc: Accuracy = DEFAULT_ACCURACY):
    """C_B(alpha, beta, p) = 2 int_0^inf t^(2 beta + 1) |J_alpha(2t)|^(2p) dt.

    Raises
    ------
    DivergenceError
        Unless 2 p alpha + 2 beta + 1 > -1 and 2 beta + 1 - p < -1.
    ToleranceError
        If the tail extrapolation cannot meet ``acc``.
    """
    alpha, beta, p = float(alpha), float(beta), float(p)
    _check_bessel(alpha, beta, p)

    def compute():
        value, err = bessel_moment(alpha, 2.0 * beta + 1.0, p, acc, scale=2.0)
        value *= 2.0
        err *= 2.0
        if value == 0.0 and err == 0.0:
            raise ToleranceError(
                f"C_B({alpha}, {beta}, {p}) underflows double precision", estimate=value, error=err
            )
        if not (value > 0 and err <= acc.target(value)):
            raise ToleranceError(
                f"C_B({alpha}, {beta}, {p}) not certified: estimate {value:.6g} +- {err:.2g}",
                estimate=value,
                error=err,
            )
        return value

    return _cached(("bessel", alpha, beta, p, acc), compute)


# --------------------------------------------------------------------------
# Airy moment


def airy_moment(p, accuracy=DEFAULT_ACCURACY, panels=_AIRY_PANELS):
    """int_R |Ai(u)|^(2p) du for p > 2, returned as ``(value, error_estimate)``."""
    if not p > 2:
        raise DivergenceError(f"Airy moment requires p > 2, got p = {p}")

    def log_g(u):
        with np.errstate(divide="ignore"):
            return 2.0 * p * np.log(np.abs(airy_ai(u.ravel()))).reshape(u.shape)

    # decaying side: Ai(u)^{2p} < 1e-300 well before u = 40 for p > 2
    edges = np.linspace(0.0, 40.0, 81)
    right = panel_integrals(log_g, edges[:-1], edges[1:], 0.0, 0.0, _PANEL_NODES).sum()
    right_check = panel_integrals(log_g, edges[:-1], edges[1:], 0.0, 0.0, _PANEL_NODES + 8).sum()

    zeros = airy_ai_zeros(panels)  # negative, decreasing
    first = panel_integrals(log_g, zeros[0], 0.0, 0.0, 2.0 * p, _PANEL_NODES)
    rest = panel_integrals(log_g, zeros[1:], zeros[:-1], 2.0 * p, 2.0 * p, _PANEL_NODES)
    pieces = np.concatenate((first, rest))
    sums = np.cumsum(pieces)
    # in zeta = 2/3 |u|^{3/2} the panel sums approach the limit like zeta^{(2-p)/3}
    zeta = 2.0 / 3.0 * np.abs(zeros) ** 1.5
    left, err = richardson_tail(zeta, sums, (2.0 - p) / 3.0)
    check = panel_integrals(log_g, zeros[-1:], zeros[-2:-1], 2.0 * p, 2.0 * p, _PANEL_NODES + 8)[0]
    err += abs(check - pieces[-1]) * panels + abs(right_check - right)
    return left + right, err


def airy_constant(p, acc: Accuracy = DEFAULT_ACCURACY):
    """C_A(p) = int_R [2 pi 2^(-1/3) Ai^2(-t 2^(-2/3))]^p dt, finite for p > 2.

    With u = t 2^(-2/3) this is 2^(2/3) (2^(2/3) pi)^p int_R |Ai(u)|^(2p) du.
    """
    p = float(p)
    if not p > 2:
        raise DivergenceError(f"C_A(p) requires p > 2, got p = {p}")

    def compute():
        moment, err = airy_moment(p, acc)
        factor = 2.0 ** (2.0 / 3.0) * (2.0 ** (2.0 / 3.0) * math.pi) ** p
        value, err = factor * moment, factor * err
        if not (value > 0 and err <= acc.target(value)):
            raise ToleranceError(
                f"C_A({p}) not certified: estimate {value:.6g} +- {err:.2g}", estimate=value, error=err
            )
        return value

    return _cached(("airy", p, acc), compute)
