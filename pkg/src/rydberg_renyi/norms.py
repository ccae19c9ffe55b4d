"""Weighted L_p-norms of orthonormal Laguerre polynomials.

    N_{n,l}(D, p) = int_0^inf ([L^_n^(alpha)(x)]^2 x^alpha e^-x)^p x^beta dx,
    alpha = l + D/2 - 1,  beta = (p - 1)(1 - D/2).

:func:`norm_exact` integrates this numerically for any degree, panel by
panel between the zeros of L_n^(alpha); :func:`norm_asymptotic` returns the
leading large-n term selected by :func:`classify`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .constants import airy_constant, bessel_constant, cosine_constant
from .errors import DomainError, ToleranceError
from .laguerre import LaguerreParams, _weighted_scaled, locate_zeros, pr_growing_log_abs
from .quadrature import QuadratureResult, panel_integrals
from .special import Accuracy, log_gamma

__all__ = [
    "NormSpec",
    "Branch",
    "Caveat",
    "Regime",
    "AsymptoticNorm",
    "make_spec",
    "classify",
    "norm_asymptotic",
    "norm_exact",
    "norm_n0_closed_form",
    "ConvergenceRow",
    "convergence_report",
]

DEFAULT_ACCURACY = Accuracy()
_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class NormSpec:
    """Parameters of one norm integral; alpha and beta follow from (l, D, p)."""

    n: int
    l: int
    D: float
    p: float
    alpha: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", self.l + 0.5 * self.D - 1.0)
        object.__setattr__(self, "beta", (self.p - 1.0) * (1.0 - 0.5 * self.D) + 0.0)  # no -0.0

    @property
    def origin_exponent(self):
        """Power of x at the origin, p alpha + beta = p l + D/2 - 1."""
        return self.p * self.alpha + self.beta


def make_spec(n, l, D, p) -> NormSpec:
    """Validated :class:`NormSpec`.

    Raises
    ------
    DomainError
        For negative or non-integer quantum numbers, D < 0, p <= 0, D = 1
        with l > 0, or a non-integrable origin (p alpha + beta <= -1).
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if int(l) != l or l < 0:
        raise DomainError(f"l must be a non-negative integer, got {l!r}")
    if not D >= 0:
        raise DomainError(f"D must be non-negative, got {D!r}")
    if not p > 0:
        raise DomainError(f"p must be positive, got {p!r}")
    if D == 1 and l != 0:
        raise DomainError("D = 1 admits only l = 0")
    spec = NormSpec(int(n), int(l), float(D), float(p))
    if not spec.alpha > -1:
        raise DomainError(f"alpha = l + D/2 - 1 = {spec.alpha} must exceed -1")
    if not spec.origin_exponent > -1:
        raise DomainError(f"p alpha + beta = {spec.origin_exponent} must exceed -1")
    return spec


# --------------------------------------------------------------------------
# regimes


class Branch(enum.Enum):
    COSINE = "Cosine"
    COSINE_BESSEL = "CosineBesselTransition"
    BESSEL = "Bessel"
    COSINE_AIRY = "CosineAiryTransition"
    DUAL_TRANSITION = "CosineBesselAiryTransition"
    AIRY = "Airy"
    AIRY_BESSEL_TIE = "AiryBesselTie"


class Caveat(enum.Enum):
    RELATIVE_ONE_TERM = "RelativeOneTerm"
    LOG_WITH_UNKNOWN_O1 = "LogWithUnknownO1"


@dataclass(frozen=True)
class Regime:
    """Selected asymptotic branch with the shape of its power law.

    The model is ``coefficient * (base * n)**exponent``, times ``ln n``
    when ``has_log``.
    """

    branch: Branch
    p_star: float
    p_tilde: float | None
    exponent: float
    base: int
    has_log: bool


def _p_star(D):
    return D / (D - 1.0) if D > 2 else 2.0


def _p_tilde(D):
    return (3.0 * D - 2.0) / (3.0 * D - 4.0) if 4.0 / 3.0 < D < 2.0 else None


def _same(a, b):
    return abs(a - b) <= _BOUNDARY_TOL * max(1.0, abs(a), abs(b))


def _clean(x):
    return 0.0 if abs(x) < 1e-12 else x


def classify(spec: NormSpec) -> Regime:
    """Asymptotic branch of N_{n,l}(D, p) as n -> infinity."""
    D, p, beta = spec.D, spec.p, spec.beta
    p_star = _p_star(D)
    p_tilde = _p_tilde(D)
    cosine = Regime(Branch.COSINE, p_star, p_tilde, _clean((1.0 - p) * D / 2.0), 2, False)

    if D > 2 and not _same(D, 2.0):
        if _same(p, p_star):
            return Regime(Branch.COSINE_BESSEL, p_star, None, -p / 2.0, 1, True)
        if p < p_star:
            return cosine
        return Regime(Branch.BESSEL, p_star, None, _clean((p - 1.0) * D / 2.0 - p), 1, False)

    if _same(D, 2.0):
        if _same(p, 2.0):
            return Regime(Branch.DUAL_TRANSITION, 2.0, None, -1.0, 1, True)
        if p < 2.0:
            return Regime(Branch.COSINE, 2.0, None, _clean(1.0 - p), 2, False)
        return Regime(Branch.BESSEL, 2.0, None, -1.0, 1, False)

    # 0 <= D < 2
    if _same(p, 2.0):
        return Regime(Branch.COSINE_AIRY, 2.0, p_tilde, _clean(beta - 1.0), 4, True)
    if p < 2.0:
        return cosine
    airy = Regime(Branch.AIRY, 2.0, p_tilde, _clean((1.0 - 2.0 * p) / 3.0 + beta), 4, False)
    if p_tilde is None:
        return airy
    if _same(p, p_tilde):
        return Regime(Branch.AIRY_BESSEL_TIE, 2.0, p_tilde, _clean(-beta - 1.0), 1, False)
    if p < p_tilde:
        return airy
    return Regime(Branch.BESSEL, 2.0, p_tilde, _clean(-beta - 1.0), 1, False)


@dataclass(frozen=True)
class AsymptoticNorm:
    """Leading large-n term of the norm.

    For log branches the theorem only fixes ``coefficient * base_n**exponent
    * (ln n + O(1))``; :meth:`model` drops the unknown O(1), so it is not a
    (1 + o(1)) approximation there.
    """

    regime: Regime
    coefficient: float
    caveat: Caveat

    @property
    def exponent(self):
        return self.regime.exponent

    @property
    def has_log(self):
        return self.regime.has_log

    def power_law(self, n):
        """coefficient * (base n)**exponent, without the log factor."""
        return self.coefficient * (self.regime.base * n) ** self.regime.exponent

    def model(self, n):
        value = self.power_law(n)
        if self.regime.has_log:
            value *= math.log(n)
        return value


def norm_asymptotic(spec: NormSpec, acc: Accuracy = DEFAULT_ACCURACY) -> AsymptoticNorm:
    """Leading-order model of N_{n,l}(D, p); the regime constants are computed here."""
    regime = classify(spec)
    a, b, p = spec.alpha, spec.beta, spec.p
    branch = regime.branch
    if branch is Branch.COSINE:
        coef = cosine_constant(b, p)
    elif branch is Branch.COSINE_BESSEL:
        coef = 2.0 * math.exp(log_gamma(p + 0.5) - log_gamma(p + 1.0)) / math.pi ** (p + 0.5)
    elif branch in (Branch.COSINE_AIRY, Branch.DUAL_TRANSITION):
        coef = 1.0 / math.pi ** 2
    elif branch is Branch.BESSEL:
        coef = bessel_constant(a, b, p, acc)
    elif branch is Branch.AIRY:
        coef = airy_constant(p, acc) / math.pi ** p
    else:
        coef = airy_constant(p, acc) / math.pi ** p * 4.0 ** ((1.0 - 2.0 * p) / 3.0 + b) + bessel_constant(
            a, b, p, acc
        )
    caveat = Caveat.LOG_WITH_UNKNOWN_O1 if regime.has_log else Caveat.RELATIVE_ONE_TERM
    return AsymptoticNorm(regime, coef, caveat)


# --------------------------------------------------------------------------
# exact quadrature


def norm_n0_closed_form(spec: NormSpec):
    """N for n = 0: Gamma(s+1) p^-(s+1) Gamma(alpha+1)^-p with s = p alpha + beta."""
    s = spec.origin_exponent
    return math.exp(log_gamma(s + 1.0) - (s + 1.0) * math.log(spec.p) - spec.p * log_gamma(spec.alpha + 1.0))


_NODES = 20
_NODES_CHECK = 28


def _integrate(spec, zeros, nodes):
    n, a, b, p = spec.n, spec.alpha, spec.beta, spec.p
    s0 = spec.origin_exponent
    two_p = 2.0 * p

    def log_g(x):
        value, log_scale = _weighted_scaled(n, a, x.ravel())
        with np.errstate(divide="ignore"):
            out = two_p * (np.log(np.abs(value)) + log_scale) + b * np.log(x.ravel())
        return out.reshape(x.shape)

    pieces = []
    if n == 0:
        # x^{s0} e^{-p x}: first panel reaches past the maximum at s0/p
        start = max(1.0, 2.0 * max(s0, 0.0) / p)
        pieces.append(panel_integrals(log_g, 0.0, start, 0.0, s0, nodes))
        step = max(1.0, math.sqrt(max(s0, 0.0) + 1.0) / p)
    else:
        pieces.append(panel_integrals(log_g, 0.0, zeros[0], two_p, s0, nodes))
        if n > 1:
            pieces.append(panel_integrals(log_g, zeros[:-1], zeros[1:], two_p, two_p, nodes))
        spacing = zeros[-1] - zeros[-2] if n > 1 else zeros[0]
        step = max(1.0, spacing)
        start = zeros[-1] + step
        pieces.append(panel_integrals(log_g, zeros[-1], start, 0.0, two_p, nodes))
    body = float(sum(np.sum(piece) for piece in pieces))
    panels = sum(len(piece) for piece in pieces)

    # continue past the soft edge until the integrand is negligible
    x = start
    last = []
    edge = 4.0 * (n + 0.5 * (a + 1.0))
    while True:
        block = x + step * np.arange(9)
        contrib = panel_integrals(log_g, block[:-1], block[1:], 0.0, 0.0, nodes)
        body += float(contrib.sum())
        panels += len(contrib)
        last = contrib
        x = block[-1]
        step *= 1.5
        if x > edge and contrib[-1] <= 1e-18 * body and contrib[-1] <= contrib[-2]:
            break
        if panels > 200000:  # pragma: no cover - integrand always decays
            raise ToleranceError("tail continuation did not terminate")
    return body, panels, x, last


def _tail_bound(spec, x_end, last):
    """Bound on the integral beyond ``x_end``.

    A geometric bound from the last continuation panels (their ratio is
    already far below 1) and, for n >= 50, the beyond-edge model integrated
    over a generous range.
    """
    c1, c2 = float(last[-2]), float(last[-1])
    ratio = c2 / c1 if c1 > 0 else 0.0
    bound = c2 * ratio / (1.0 - ratio) if ratio < 1.0 else c2
    if spec.n >= 50:
        params = LaguerreParams(spec.n, spec.alpha)
        xs = x_end + np.linspace(0.0, 10.0 * x_end, 4001)
        logs = 2.0 * spec.p * pr_growing_log_abs(params, xs) + spec.beta * np.log(xs)
        with np.errstate(under="ignore"):
            model_tail = float(np.trapezoid(np.exp(logs), xs))
        bound = max(bound, model_tail)
    return bound


def norm_exact(spec: NormSpec, acc: Accuracy = DEFAULT_ACCURACY) -> QuadratureResult:
    """Certified quadrature of N_{n,l}(D, p).

    Panels run between consecutive zeros of L_n^(alpha) with Gauss-Jacobi
    rules matched to the endpoint behaviour (|x - z|^(2p) at zeros,
    x^(p alpha + beta) at the origin), then continue beyond the soft edge
    until the integrand is negligible.  The error estimate combines a
    second rule with more nodes and a bound on the truncated tail.

    Raises
    ------
    ToleranceError
        If the error estimate exceeds ``acc``.
    """
    params = LaguerreParams(spec.n, spec.alpha)
    zeros = locate_zeros(params)
    value, panels, x_end, last = _integrate(spec, zeros, _NODES)
    check, _, _, _ = _integrate(spec, zeros, _NODES_CHECK)
    err = abs(check - value) + _tail_bound(spec, x_end, last)
    certified = err <= acc.target(check)
    if not certified:
        raise ToleranceError(
            f"norm quadrature not certified: {check:.12g} +- {err:.2g}", estimate=check, error=err
        )
    return QuadratureResult(value=check, abs_error_estimate=err, panels_used=panels, certified=True)


# --------------------------------------------------------------------------
# convergence report


@dataclass(frozen=True)
class ConvergenceRow:
    """One degree of an exact-versus-asymptotic comparison.

    ``ratio`` is exact / model for (1 + o(1)) branches.  For log branches it
    holds the compensated residual exact / power_law - ln n, which the
    theory only says stays bounded.
    """

    n: int
    exact: float
    model: float
    ratio: float


def convergence_report(l, D, p, n_grid, acc: Accuracy = DEFAULT_ACCURACY):
    """Exact norm against the leading asymptotic term over ascending degrees."""
    grid = list(n_grid)
    if grid != sorted(grid):
        raise DomainError("n_grid must be ascending")
    asym = norm_asymptotic(make_spec(max(grid[0], 2), l, D, p), acc)
    rows = []
    for n in grid:
        exact = norm_exact(make_spec(n, l, D, p), acc).value
        model = asym.model(n)
        if asym.has_log:
            ratio = exact / asym.power_law(n) - math.log(n)
        else:
            ratio = exact / model
        rows.append(ConvergenceRow(n, exact, model, ratio))
    return rows
