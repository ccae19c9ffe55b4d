"""Weighted orthonormal Laguerre functions and their large-degree models.

The central object is

    f_n(x) = sqrt(x**alpha * exp(-x)) * L_n^(alpha)(x) / ||L_n^(alpha)||,

which is O(n**-1/4) in the bulk even when L_n itself overflows.  It is
evaluated exactly by the three-term recurrence for orthonormal Laguerre
polynomials, with the weight carried in log space.  Four asymptotic models
cover the zones of the half line:

=============  =======================================  ==================
zone           range                                     model
=============  =======================================  ==================
Bessel         0 < x <= 4N n**(-1/3)                     Hilb (Bessel J)
oscillatory    up to (4 - eps) n                         Plancherel-Rotach
Airy           soft edge, x = 4n+2a+2 - 2(2n/3)^(1/3) t  Airy A(t)
growing        beyond x(t = -t_max)                      exponential decay
=============  =======================================  ==================

with N = n + (alpha + 1)/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError
from .special import airy_A, bessel_j, log_gamma

__all__ = [
    "LaguerreParams",
    "WeightedValue",
    "Region",
    "ZoneConfig",
    "DEFAULT_ZONES",
    "weighted",
    "orthonormal_weighted",
    "log_norm",
    "region",
    "edge_variable",
    "hilb_eval",
    "hilb_error_bound",
    "pr_growing_log_abs",
    "pr_phase",
    "pr_oscillatory_eval",
    "pr_airy_eval",
    "pr_growing_eval",
    "locate_zeros",
]

_RESCALE = 1e280
_MIN_ASYMPTOTIC_DEGREE = 50


@dataclass(frozen=True)
class LaguerreParams:
    """Degree ``n`` and weight parameter ``alpha`` of L_n^(alpha)."""

    n: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"degree must be a non-negative integer, got {self.n!r}")
        if not self.alpha > -1:
            raise DomainError(f"alpha must exceed -1, got {self.alpha!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def big_N(self):
        return self.n + 0.5 * (self.alpha + 1.0)


@dataclass(frozen=True)
class WeightedValue:
    """A weighted orthonormal value stored as ``value * exp(log_scale)``."""

    value: np.ndarray | float
    log_scale: np.ndarray | float = 0.0

    @property
    def total(self):
        return self.value * np.exp(self.log_scale)


class Region(enum.Enum):
    BESSEL = "BesselZone"
    OSCILLATORY = "OscillatoryZone"
    AIRY = "AiryZone"
    GROWING = "GrowingZone"


@dataclass(frozen=True)
class ZoneConfig:
    """Tunable zone boundaries of the asymptotic models.

    ``eps`` sets the upper end (4 - eps) n of the oscillatory zone,
    ``t_max`` the half width of the Airy zone in the edge variable t,
    ``theta`` the start 4n + n**(1/3 + theta) of the growing zone.
    ``hilb_c`` and ``hilb_C`` are the constants of the two-branch Hilb
    error bound.
    """

    eps: float = 0.05
    t_max: float = 12.0
    theta: float = 0.1
    hilb_c: float = 1.0
    hilb_C: float = 1.0
    log_scaling: bool = True

    def __post_init__(self):
        if not 0 < self.eps < 4:
            raise DomainError("eps must lie in (0, 4)")
        if not self.t_max > 0:
            raise DomainError("t_max must be positive")
        if not self.theta > 0:
            raise DomainError("theta must be positive")
        if not (self.hilb_c > 0 and self.hilb_C > 0):
            raise DomainError("Hilb constants must be positive")


DEFAULT_ZONES = ZoneConfig()


def log_norm(n, alpha):
    """log ||L_n^(alpha)|| = 0.5 * log(Gamma(n + alpha + 1) / n!)."""
    return 0.5 * (log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0))


def _weighted_scaled(n, alpha, x, log_scaling=True):
    """Recurrence core: returns (value, log_scale) arrays for x > 0."""
    x = np.asarray(x, dtype=float)
    # f_0 = sqrt(x^a e^-x / Gamma(a+1)) is carried entirely in log_scale
    log_scale = 0.5 * (alpha * np.log(x) - x - log_gamma(alpha + 1.0))
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        # sqrt((k+1)(k+a+1)) y_{k+1} = (2k+a+1-x) y_k - sqrt(k(k+a)) y_{k-1}
        nxt = ((2 * k + alpha + 1.0 - x) * cur - math.sqrt(k * (k + alpha)) * prev) / math.sqrt(
            (k + 1) * (k + alpha + 1.0)
        )
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE
        if big.any():
            if not log_scaling:
                raise OverflowError("orthonormal recurrence overflowed with log scaling disabled")
            s = np.where(big, np.abs(cur), 1.0)
            cur = cur / s
            prev = prev / s
            log_scale = log_scale + np.log(s)
    return cur, log_scale


def weighted(n, alpha, x, log_scaling=True):
    """Array version of :func:`orthonormal_weighted` returning plain floats.

    Values that underflow (far beyond the soft edge) come back as 0.
    """
    value, log_scale = _weighted_scaled(int(n), float(alpha), x, log_scaling)
    with np.errstate(over="ignore", under="ignore"):
        return value * np.exp(log_scale)


def orthonormal_weighted(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES) -> WeightedValue:
    """sqrt(x^alpha e^-x) L_n^(alpha)(x) / ||L_n^(alpha)|| at x > 0.

    The result carries ``log_scale = 0`` wherever the value is representable;
    elsewhere the exponent stays in ``log_scale``.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0):
        raise DomainError("orthonormal_weighted requires x > 0")
    value, log_scale = _weighted_scaled(params.n, params.alpha, xa, zones.log_scaling)
    with np.errstate(divide="ignore"):
        total_log = np.log(np.abs(value)) + log_scale
    representable = total_log > -700.0
    folded = np.where(representable, value * np.exp(np.where(representable, log_scale, 0.0)), value)
    log_scale = np.where(representable, 0.0, log_scale)
    if np.ndim(x) == 0:
        return WeightedValue(float(folded), float(log_scale))
    return WeightedValue(folded, log_scale)


# --------------------------------------------------------------------------
# zones


def edge_variable(params: LaguerreParams, x):
    """Soft-edge variable t defined by x = 4n + 2 alpha + 2 - 2 (2n/3)^(1/3) t."""
    n, a = params.n, params.alpha
    return (4 * n + 2 * a + 2 - np.asarray(x, dtype=float)) / (2.0 * (2.0 * n / 3.0) ** (1.0 / 3.0))


def _x_of_t(params, t):
    n, a = params.n, params.alpha
    return 4 * n + 2 * a + 2 - 2.0 * (2.0 * n / 3.0) ** (1.0 / 3.0) * t


def _zone_edges(params, zones):
    n = max(params.n, 1)
    four_n = 4.0 * params.big_N
    bessel_hi = four_n * n ** (-1.0 / 3.0)
    osc_hi = (4.0 - zones.eps) * n
    airy_hi = _x_of_t(params, -zones.t_max)
    return bessel_hi, osc_hi, airy_hi


def region(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES) -> Region:
    """Zone of the half line that owns abscissa ``x``."""
    if not x > 0:
        raise DomainError("region requires x > 0")
    bessel_hi, osc_hi, airy_hi = _zone_edges(params, zones)
    if x <= bessel_hi:
        return Region.BESSEL
    if x <= osc_hi:
        return Region.OSCILLATORY
    if x <= airy_hi:
        return Region.AIRY
    return Region.GROWING


def _require_degree(params):
    if params.n < _MIN_ASYMPTOTIC_DEGREE:
        raise DomainError(f"asymptotic models need n >= {_MIN_ASYMPTOTIC_DEGREE}, got n = {params.n}")


# --------------------------------------------------------------------------
# asymptotic models


def hilb_eval(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """Bessel-zone model of the weighted orthonormal function.

    Uses ``N**(-alpha/2) (n+alpha)!/n! J_alpha(2 sqrt(N x))`` divided by
    the norm ||L_n^(alpha)||.
    """
    _require_degree(params)
    xa = np.asarray(x, dtype=float)
    bessel_hi, _, _ = _zone_edges(params, zones)
    if np.any(xa <= 0) or np.any(xa > bessel_hi):
        raise DomainError(f"hilb_eval is defined on (0, {bessel_hi:.6g}]")
    n, a, big_n = params.n, params.alpha, params.big_N
    log_ratio = log_gamma(n + a + 1.0) - log_gamma(n + 1.0)
    coef = math.exp(log_ratio - log_norm(n, a) - 0.5 * a * math.log(big_n))
    return coef * bessel_j(a, 2.0 * np.sqrt(big_n * xa))


def hilb_error_bound(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """Two-branch Hilb remainder bound divided by the norm (unit constants)."""
    n, a = params.n, params.alpha
    xa = np.asarray(x, dtype=float)
    near = xa < zones.hilb_c / n
    raw = np.where(
        near,
        xa ** (0.5 * a + 2.0) * float(n) ** a,
        xa ** 1.25 * float(n) ** (0.5 * a - 0.75),
    )
    return raw * math.exp(-log_norm(n, a))


def pr_phase(params: LaguerreParams, x):
    """Plancherel-Rotach phase 1/2 sqrt(x(4N-x)) - 2N arccos sqrt(x/4N) + 3 pi/4."""
    four_n = 4.0 * params.big_N
    xa = np.asarray(x, dtype=float)
    return (
        0.5 * np.sqrt(xa * (four_n - xa))
        - 0.5 * four_n * np.arccos(np.sqrt(xa / four_n))
        + 0.75 * math.pi
    )


def pr_oscillatory_eval(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """Oscillatory-zone model of the *squared* weighted orthonormal function.

    ``2 sin(phase)**2 / (pi sqrt(x (4N - x)))``, non-negative.
    """
    _require_degree(params)
    xa = np.asarray(x, dtype=float)
    _, osc_hi, _ = _zone_edges(params, zones)
    if np.any(xa <= 0) or np.any(xa > osc_hi):
        raise DomainError(f"pr_oscillatory_eval is defined on (0, {osc_hi:.6g}]")
    four_n = 4.0 * params.big_N
    return 2.0 * np.sin(pr_phase(params, xa)) ** 2 / (math.pi * np.sqrt(xa * (four_n - xa)))


def pr_airy_eval(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """Soft-edge model of the weighted orthonormal function.

    ``x**(alpha/2) / ||L|| * (-1)**n / pi * 2**(-alpha-1/3) 3**(1/3) n**(-1/3) A(t)``
    """
    _require_degree(params)
    t = edge_variable(params, x)
    # zone edges computed from t_max round-trip to within a few ulps
    if np.any(np.abs(t) > zones.t_max * (1.0 + 1e-12)):
        raise DomainError(f"pr_airy_eval requires |t| <= {zones.t_max}")
    n, a = params.n, params.alpha
    xa = np.asarray(x, dtype=float)
    sign = -1.0 if n % 2 else 1.0
    log_pref = (
        0.5 * a * np.log(xa)
        - log_norm(n, a)
        - math.log(math.pi)
        - (a + 1.0 / 3.0) * math.log(2.0)
        + math.log(3.0) / 3.0
        - math.log(n) / 3.0
    )
    return sign * np.exp(log_pref) * airy_A(t)


def pr_growing_eval(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """Beyond-edge model of the weighted orthonormal function (exponentially small).

    Parametrises x = (4n + 2 alpha + 2) cosh(phi)**2.
    """
    _require_degree(params)
    n, a = params.n, params.alpha
    xa = np.asarray(x, dtype=float)
    start = 4.0 * n + n ** (1.0 / 3.0 + zones.theta)
    if np.any(xa < start):
        raise DomainError(f"pr_growing_eval is defined on [{start:.6g}, inf)")
    phi = np.arccosh(np.sqrt(xa / (4.0 * params.big_N)))
    sign = -1.0 if n % 2 else 1.0
    log_val = (
        0.5 * a * np.log(xa)
        - log_norm(n, a)
        - math.log(2.0)
        - 0.5 * np.log(math.pi * np.sinh(phi))
        - (0.5 * a + 0.25) * np.log(xa)
        + (0.5 * a - 0.25) * math.log(n)
        + params.big_N * (2.0 * phi - np.sinh(2.0 * phi))
    )
    with np.errstate(under="ignore"):
        return sign * np.exp(log_val)


def pr_growing_log_abs(params: LaguerreParams, x, zones: ZoneConfig = DEFAULT_ZONES):
    """log |pr_growing_eval| without underflow."""
    n, a = params.n, params.alpha
    xa = np.asarray(x, dtype=float)
    phi = np.arccosh(np.sqrt(xa / (4.0 * params.big_N)))
    return (
        -log_norm(n, a)
        - math.log(2.0)
        - 0.5 * np.log(math.pi * np.sinh(phi))
        - 0.25 * np.log(xa)
        + (0.5 * a - 0.25) * math.log(n)
        + params.big_N * (2.0 * phi - np.sinh(2.0 * phi))
    )


# --------------------------------------------------------------------------
# zeros


def _phase_seeds(params):
    # zeros sit near phase = k pi, k = 1-n .. 0; the phase increases on (0, 4N)
    n = params.n
    four_n = 4.0 * params.big_N
    targets = math.pi * np.arange(1 - n, 1, dtype=float)
    lo = np.zeros(n)
    hi = np.full(n, four_n)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        below = pr_phase(params, mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def _jacobi_seeds(params):
    k = np.arange(params.n, dtype=float)
    diag = 2.0 * k + params.alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + params.alpha))
    return eigh_tridiagonal(diag, off, eigvals_only=True)


def _brackets(seeds, upper):
    mids = 0.5 * (seeds[:-1] + seeds[1:])
    left = np.concatenate(([0.0], mids))
    right = np.concatenate((mids, [upper]))
    return left, right


def locate_zeros(params: LaguerreParams):
    """All n zeros of L_n^(alpha), increasing, refined to near machine precision.

    Seeds invert the Plancherel-Rotach phase at multiples of pi; each zero
    is bracketed between midpoints of neighbouring seeds and refined by a
    vectorised bisection on the recurrence.  If any bracket fails to show a
    sign change (small n, large alpha) the seeds are replaced by eigenvalues
    of the Jacobi matrix.
    """
    n, a = params.n, params.alpha
    if n < 1:
        return np.array([])
    upper = 4.0 * params.big_N + 4.0 * (2.0 * n) ** (1.0 / 3.0) + 10.0
    for seeds in (_phase_seeds(params), _jacobi_seeds(params)):
        left, right = _brackets(np.sort(seeds), upper)
        left = np.maximum(left, 1e-300)
        sl = np.signbit(_weighted_scaled(n, a, left)[0])
        sr = np.signbit(_weighted_scaled(n, a, right)[0])
        if np.all(sl != sr):
            break
    else:  # pragma: no cover - Jacobi eigenvalues always interlace
        raise RuntimeError("zero bracketing failed")
    for _ in range(200):
        mid = 0.5 * (left + right)
        if np.all(right - left <= 4e-16 * mid):
            break
        sm = np.signbit(_weighted_scaled(n, a, mid)[0])
        same = sm == sl
        left = np.where(same, mid, left)
        right = np.where(same, right, mid)
    return 0.5 * (left + right)
