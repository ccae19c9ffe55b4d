"""Laguerre L_p-norms and Rényi entropies of Rydberg states of the D-dimensional oscillator."""

from .constants import airy_constant, bessel_constant, cosine_constant
from .entropy import (
    EntropyResult,
    Method,
    OscillatorState,
    Quantity,
    disequilibrium,
    energy,
    entropic_moment,
    radial_density,
    renyi_entropy,
    renyi_power,
)
from .errors import DivergenceError, DomainError, PoleError, RydbergRenyiError, ToleranceError
from .laguerre import LaguerreParams, ZoneConfig, locate_zeros, orthonormal_weighted
from .norms import (
    AsymptoticNorm,
    Branch,
    Caveat,
    NormSpec,
    Regime,
    classify,
    convergence_report,
    make_spec,
    norm_asymptotic,
    norm_exact,
)
from .special import Accuracy, airy_A, airy_ai, bessel_j, log_gamma

__version__ = "0.1.0"

__all__ = [
    "Accuracy",
    "AsymptoticNorm",
    "Branch",
    "Caveat",
    "DivergenceError",
    "DomainError",
    "EntropyResult",
    "LaguerreParams",
    "Method",
    "NormSpec",
    "OscillatorState",
    "PoleError",
    "Quantity",
    "Regime",
    "RydbergRenyiError",
    "ToleranceError",
    "ZoneConfig",
    "airy_A",
    "airy_ai",
    "airy_constant",
    "bessel_constant",
    "bessel_j",
    "classify",
    "convergence_report",
    "cosine_constant",
    "disequilibrium",
    "energy",
    "entropic_moment",
    "locate_zeros",
    "log_gamma",
    "make_spec",
    "norm_asymptotic",
    "norm_exact",
    "orthonormal_weighted",
    "radial_density",
    "renyi_entropy",
    "renyi_power",
]
