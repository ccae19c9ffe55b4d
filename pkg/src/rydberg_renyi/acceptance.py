"""The thirteen acceptance checks, shared by ``rydberg-renyi verify`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raises for a
numerical miss.  Library exceptions inside a check count as a failure and
are reported in ``detail``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .constants import bessel_constant, cosine_constant
from .entropy import Method, OscillatorState, disequilibrium, radial_density, renyi_power
from .errors import RydbergRenyiError
from .laguerre import (
    DEFAULT_ZONES,
    LaguerreParams,
    Region,
    ZoneConfig,
    _zone_edges,
    edge_variable,
    hilb_error_bound,
    hilb_eval,
    locate_zeros,
    pr_airy_eval,
    pr_growing_log_abs,
    pr_oscillatory_eval,
    region,
    weighted,
)
from .norms import classify, make_spec, norm_exact, norm_n0_closed_form
from .special import Accuracy, airy_ai_zeros, log_gamma

__all__ = ["CheckResult", "CHECKS", "run_checks", "format_table"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  [{self.number:2d}] {self.name}: {self.detail} ({self.seconds:.2f} s)"


def _normalization(fast, acc, zones):
    degrees = (0, 1, 5, 20, 100) if fast else (0, 1, 5, 20, 100, 500)
    worst = 0.0
    for n in degrees:
        for l in (0, 1, 3):
            for D in (2, 3, 4, 6):
                value = norm_exact(make_spec(n, l, D, 1.0), acc).value
                worst = max(worst, abs(value - 1.0))
    return worst <= 1e-8, f"max |N - 1| = {worst:.2e} over n in {degrees}"


def _n0_closed_form(fast, acc, zones):
    worst = 0.0
    for l in (0, 1, 2):
        for D in (2, 3, 5):
            for p in (0.5, 1.5, 2.0, 3.0):
                spec = make_spec(0, l, D, p)
                ref = norm_n0_closed_form(spec)
                worst = max(worst, abs(norm_exact(spec, acc).value / ref - 1.0))
    return worst <= 1e-10, f"max relative error {worst:.2e}"


def _cosine_anchor(fast, acc, zones):
    err = abs(cosine_constant(0.0, 1.0) - 1.0)
    return err <= 1e-12, f"|C(0,1) - 1| = {err:.1e}"


def _d4_constancy(fast, acc, zones):
    value = 2.0 * bessel_constant(1.0, -1.0, 2.0, acc)
    exponent = classify(make_spec(50, 0, 4, 2.0)).exponent
    ok = abs(value - 0.4053) <= 5e-4 and exponent == 0.0
    return ok, f"2 C_B(1,-1,2) = {value:.6f}, exponent = {exponent!r}"


def _bessel_convergence(fast, acc, zones):
    errors = []
    for n in (50, 100, 200, 500):
        value = norm_exact(make_spec(n, 0, 3, 2.0), acc).value
        errors.append(abs(math.pi * math.sqrt(n) * value - 1.0))
    decreasing = all(b < a for a, b in zip(errors, errors[1:]))
    ok = errors[-1] <= 0.05 and decreasing
    return ok, "|pi sqrt(n) N - 1| = " + ", ".join(f"{e:.2e}" for e in errors)


def _cosine_convergence(fast, acc, zones):
    n, p = 500, 0.5
    spec = make_spec(n, 0, 3, p)
    model = cosine_constant(spec.beta, p) * (2.0 * n) ** ((1.0 - p) * 1.5)
    dev = abs(norm_exact(spec, acc).value / model - 1.0)
    return dev <= 0.03, f"|N / model - 1| = {dev:.4f} at n = 500"


def _log_boundedness(fast, acc, zones):
    p = 1.5
    scale = math.pi ** (p + 0.5) * math.exp(log_gamma(p + 1.0) - log_gamma(p + 0.5)) / 2.0
    residuals = []
    for n in (100, 400, 1600):
        value = norm_exact(make_spec(n, 0, 3, p), acc).value
        residuals.append(value * scale * n ** (p / 2.0) - math.log(n))
    spread = max(residuals) - min(residuals)
    return spread <= 1.0, "residuals " + ", ".join(f"{r:.4f}" for r in residuals) + f", spread {spread:.4f}"


def _fig5_argmax(fast, acc, zones):
    dims = list(range(2, 31))
    values = [disequilibrium(OscillatorState(50, 0, D), Method.ASYMPTOTIC, acc).value for D in dims]
    best = dims[int(np.argmax(values))]
    return best == 12, f"argmax D = {best}"


def _fig1_monotone(fast, acc, zones):
    orders = (0.5, 0.8, 1.2, 1.5, 2.0, 3.0, 5.0)
    parts = []
    ok = True
    for D in (2, 4):
        vals = [renyi_power(OscillatorState(50, 0, D), p, Method.EXACT, acc).value for p in orders]
        mono = all(b < a for a, b in zip(vals, vals[1:]))
        ok &= mono
        parts.append(f"D={D} {'decreasing' if mono else 'not monotone'}")
    return ok, ", ".join(parts)


def _fig23_trend(fast, acc, zones):
    degrees = range(10, 101)
    d2 = [disequilibrium(OscillatorState(n, 0, 2), Method.ASYMPTOTIC, acc).value for n in degrees]
    d6 = [disequilibrium(OscillatorState(n, 0, 6), Method.ASYMPTOTIC, acc).value for n in degrees]
    dec = all(b < a for a, b in zip(d2, d2[1:]))
    inc = all(b > a for a, b in zip(d6, d6[1:]))
    return dec and inc, f"D=2 decreasing: {dec}, D=6 increasing: {inc}"


def _fig4_trend(fast, acc, zones):
    vals = [disequilibrium(OscillatorState(50, l, 4), Method.AUTO, acc).value for l in range(11)]
    dec = all(b < a for a, b in zip(vals, vals[1:]))
    return dec, f"l = 0..10 decreasing: {dec}"


def _model_consistency(fast, acc, zones: ZoneConfig):
    """Models against the recurrence at n = 500, alpha = 1/2, each over its own zone."""
    params = LaguerreParams(500, 0.5)
    n, a = params.n, params.alpha
    bessel_hi, osc_hi, airy_hi = _zone_edges(params, zones)
    notes = []
    ok = True

    # Hilb: within its remainder bound across the zone, ratio ~ 1 at x = 1/n
    xs = np.geomspace(1e-4, bessel_hi, 200)
    exact = weighted(n, a, xs)
    inside = bool(np.all(np.abs(hilb_eval(params, xs, zones) - exact) <= hilb_error_bound(params, xs, zones)))
    ratio = float(hilb_eval(params, 1.0 / n, zones) / weighted(n, a, 1.0 / n))
    ok &= inside and abs(ratio - 1.0) < 1e-3
    notes.append(f"Hilb bound {'ok' if inside else 'violated'}, ratio {ratio:.7f}")

    # oscillatory: pointwise away from zeros, near x = 1000 and mid-zone
    worst = 0.0
    for centre in (1000.0, 0.5 * (bessel_hi + osc_hi)):
        xs = np.linspace(centre - 5.0, centre + 5.0, 2001)
        model = pr_oscillatory_eval(params, xs, zones)
        envelope = 2.0 / (math.pi * np.sqrt(xs * (4.0 * params.big_N - xs)))
        away = model >= 0.5 * envelope
        rel = np.abs(model - weighted(n, a, xs) ** 2)[away] / model[away]
        worst = max(worst, float(rel.max()))
    ok &= worst < 0.02
    notes.append(f"oscillatory rel err {worst:.2e}")

    # Airy: zone [osc_hi, airy_hi] plus |t| <= 5, relative to the local maximum
    try:
        xs = np.linspace(osc_hi, airy_hi, 4001)
        model = pr_airy_eval(params, xs, zones)
        zone_err = float(np.max(np.abs(model - weighted(n, a, xs))) / np.max(np.abs(model)))
        ts = np.linspace(-5.0, 5.0, 2001)
        xt = 4 * n + 2 * a + 2 - 2.0 * (2.0 * n / 3.0) ** (1.0 / 3.0) * ts
        model_t = pr_airy_eval(params, xt, zones)
        core_err = float(np.max(np.abs(model_t - weighted(n, a, xt))) / np.max(np.abs(model_t)))
        # the largest zero of L_n sits at the first zero of A(t)
        t0 = -airy_ai_zeros(1)[0] * 3.0 ** (1.0 / 3.0)
        x0 = 4 * n + 2 * a + 2 - 2.0 * (2.0 * n / 3.0) ** (1.0 / 3.0) * t0
        shift = abs(locate_zeros(params)[-1] - x0)
        tol_shift = 0.5 * n ** (-1.0 / 3.0) * (2.0 * n / 3.0) ** (1.0 / 3.0)
        airy_ok = zone_err < 0.05 and core_err < 0.05 and shift <= tol_shift
        notes.append(f"Airy err {core_err:.2e} (|t|<=5), {zone_err:.2e} (zone), zero shift {shift:.3f}")
    except RydbergRenyiError as exc:
        airy_ok = False
        t_start = float(edge_variable(params, osc_hi))
        notes.append(f"Airy zone starts at t = {t_start:.2f} beyond t_max = {zones.t_max}: {exc}")
    ok &= airy_ok

    # growing: log-matching where the zone starts
    x_g = 4.0 * n + n ** (1.0 / 3.0 + zones.theta)
    log_model = float(pr_growing_log_abs(params, x_g, zones))
    log_exact = math.log(abs(float(weighted(n, a, x_g))))
    match = log_model / log_exact
    ok &= abs(match - 1.0) < 0.1
    notes.append(f"growing log ratio {match:.3f}")

    # every sampled abscissa lands in exactly one zone, in order
    probes = np.linspace(0.5, airy_hi + 50.0, 400)
    order = [list(Region).index(region(params, x, zones)) for x in probes]
    ok &= all(b >= a for a, b in zip(order, order[1:]))
    return ok, "; ".join(notes)


def _density_normalization(fast, acc, zones):
    worst = 0.0
    for n, l, D in ((0, 0, 3), (5, 1, 3), (20, 0, 2), (100, 0, 6)):
        state = OscillatorState(n, l, D)
        # split at the classical turning radius so quad sees the oscillations
        r_edge = math.sqrt(4.0 * n + 2.0 * l + D + 10.0)
        total = 0.0
        for lo, hi in ((0.0, r_edge), (r_edge, np.inf)):
            total += quad(
                lambda r: radial_density(state, r) * r ** (D - 1), lo, hi, limit=1000, epsabs=1e-14, epsrel=1e-13
            )[0]
        worst = max(worst, abs(total - 1.0))
    return worst <= 1e-8, f"max |int rho r^(D-1) dr - 1| = {worst:.2e}"


# (number, name, function, needs the n = 500 cases)
CHECKS = [
    (1, "normalization oracle", _normalization, False),
    (2, "n = 0 closed form", _n0_closed_form, False),
    (3, "cosine constant C(0,1) = 1", _cosine_anchor, False),
    (4, "D = 4 constancy 0.4053", _d4_constancy, False),
    (5, "Bessel-branch convergence (D=3, p=2)", _bessel_convergence, True),
    (6, "cosine-branch convergence (D=3, p=1/2)", _cosine_convergence, True),
    (7, "log-regime boundedness (D=3, p=3/2)", _log_boundedness, True),
    (8, "figure 5 argmax at D = 12", _fig5_argmax, False),
    (9, "figure 1 monotone in p", _fig1_monotone, False),
    (10, "figures 2/3 trends in n", _fig23_trend, False),
    (11, "figure 4 decreasing in l", _fig4_trend, False),
    (12, "asymptotic models vs recurrence (n=500)", _model_consistency, True),
    (13, "radial density normalization", _density_normalization, False),
]


def run_checks(fast=False, acc: Accuracy = Accuracy(), zones: ZoneConfig = DEFAULT_ZONES, only=None):
    """Run the selected checks; ``fast`` skips those that need n = 500."""
    results = []
    for number, name, func, heavy in CHECKS:
        if only is not None and number not in only:
            continue
        if fast and heavy:
            continue
        start = time.perf_counter()
        try:
            passed, detail = func(fast, acc, zones)
        except RydbergRenyiError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(number, name, bool(passed), detail, time.perf_counter() - start))
    return results


def format_table(results):
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
