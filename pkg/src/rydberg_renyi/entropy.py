"""Entropic moments, Rényi entropies and disequilibrium of oscillator states.

For the D-dimensional isotropic oscillator with strength lambda, the
p-th entropic moment of the position density reduces to a Laguerre norm:

    W_p = 2**(p-1) * lambda**(D (p-1) / 2) * N_{n,l}(D, p)
    R_p = ln(W_p) / (1 - p),     N_p = exp(R_p),     disequilibrium = W_2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .laguerre import weighted
from .norms import Caveat, make_spec, norm_asymptotic, norm_exact
from .special import Accuracy

__all__ = [
    "OscillatorState",
    "Quantity",
    "Method",
    "EntropyResult",
    "AUTO_EXACT_MAX_N",
    "energy",
    "radial_density",
    "log_norm_value",
    "entropic_moment",
    "renyi_entropy",
    "renyi_power",
    "disequilibrium",
]

DEFAULT_ACCURACY = Accuracy()
# Method.AUTO integrates exactly up to this degree
AUTO_EXACT_MAX_N = 200


@dataclass(frozen=True)
class OscillatorState:
    """Stationary state (n, l) of the D-dimensional oscillator with strength ``lam``."""

    n: int
    l: int
    D: float
    lam: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n!r}")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"l must be a non-negative integer, got {self.l!r}")
        if not self.D >= 1:
            raise DomainError(f"D must be at least 1, got {self.D!r}")
        if self.D == 1 and self.l != 0:
            raise DomainError("D = 1 admits only l = 0")
        if not self.lam > 0:
            raise DomainError(f"lambda must be positive, got {self.lam!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "D", float(self.D))
        object.__setattr__(self, "lam", float(self.lam))

    @property
    def alpha(self):
        return self.l + 0.5 * self.D - 1.0


class Quantity(enum.Enum):
    WP = "Wp"
    RENYI = "Renyi"
    POWER = "Power"
    DISEQUILIBRIUM = "Disequilibrium"


class Method(enum.Enum):
    EXACT = "Exact"
    ASYMPTOTIC = "Asymptotic"
    AUTO = "Auto"

    def resolve(self, n):
        if self is Method.AUTO:
            return Method.EXACT if n <= AUTO_EXACT_MAX_N else Method.ASYMPTOTIC
        return self


@dataclass(frozen=True)
class EntropyResult:
    """A computed information measure; ``caveat`` is None for exact values."""

    quantity: Quantity
    value: float
    method: Method
    caveat: Caveat | None


def energy(state: OscillatorState) -> float:
    """E = lambda (2n + l + D/2)."""
    return state.lam * (2 * state.n + state.l + 0.5 * state.D)


def radial_density(state: OscillatorState, r):
    """rho(r) = 2 lambda^(D/2) x^(1-D/2) x^alpha e^-x [L^_n^(alpha)(x)]^2 with x = lambda r^2.

    Normalised so that int_0^inf rho(r) r^(D-1) dr = 1.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("radial_density requires r > 0")
    x = state.lam * r * r
    f = weighted(state.n, state.alpha, x)
    out = 2.0 * state.lam ** (0.5 * state.D) * x ** (1.0 - 0.5 * state.D) * f * f
    return float(out) if out.ndim == 0 else out


def log_norm_value(state: OscillatorState, p, method=Method.AUTO, acc: Accuracy = DEFAULT_ACCURACY):
    """(ln N_{n,l}(D, p), resolved method, caveat)."""
    method = Method(method).resolve(state.n)
    spec = make_spec(state.n, state.l, state.D, p)
    if method is Method.EXACT:
        return math.log(norm_exact(spec, acc).value), method, None
    if state.n < 2:
        raise DomainError("the asymptotic evaluation needs n >= 2")
    asym = norm_asymptotic(spec, acc)
    return math.log(asym.model(state.n)), method, asym.caveat


def _log_moment(state, p, method, acc):
    log_n, method, caveat = log_norm_value(state, p, method, acc)
    log_w = (p - 1.0) * (math.log(2.0) + 0.5 * state.D * math.log(state.lam)) + log_n
    return log_w, method, caveat


def _check_order(p):
    if not p > 0:
        raise DomainError(f"p must be positive, got {p!r}")


def _check_renyi_order(p):
    _check_order(p)
    if p == 1:
        raise DomainError("Rényi quantities need p != 1")


def entropic_moment(state: OscillatorState, p, method=Method.AUTO, acc: Accuracy = DEFAULT_ACCURACY):
    """W_p = int rho^p d^D r = 2^(p-1) lambda^(D(p-1)/2) N_{n,l}(D, p)."""
    _check_order(p)
    log_w, method, caveat = _log_moment(state, float(p), method, acc)
    return EntropyResult(Quantity.WP, math.exp(log_w), method, caveat)


def renyi_entropy(state: OscillatorState, p, method=Method.AUTO, acc: Accuracy = DEFAULT_ACCURACY):
    """R_p = ln(W_p) / (1 - p)."""
    _check_renyi_order(p)
    log_w, method, caveat = _log_moment(state, float(p), method, acc)
    return EntropyResult(Quantity.RENYI, log_w / (1.0 - p), method, caveat)


def renyi_power(state: OscillatorState, p, method=Method.AUTO, acc: Accuracy = DEFAULT_ACCURACY):
    """N_p = exp(R_p) = (1/2) lambda^(-D/2) N_{n,l}(D, p)^(1/(1-p))."""
    res = renyi_entropy(state, p, method, acc)
    return EntropyResult(Quantity.POWER, math.exp(res.value), res.method, res.caveat)


def disequilibrium(state: OscillatorState, method=Method.AUTO, acc: Accuracy = DEFAULT_ACCURACY):
    """Average density W_2, the inverse of the second-order entropy power."""
    res = entropic_moment(state, 2.0, method, acc)
    return EntropyResult(Quantity.DISEQUILIBRIUM, res.value, res.method, res.caveat)
