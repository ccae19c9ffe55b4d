"""Gauss-Jacobi panels and the tail extrapolator."""

import math

import numpy as np
import pytest
import scipy.special as sc

from rydberg_renyi.errors import ToleranceError
from rydberg_renyi.quadrature import QuadratureResult, jacobi_rule, panel_integrals, richardson_tail


def test_jacobi_rule_integrates_endpoint_powers():
    # int_{-1}^{1} (1-u)^a (1+u)^b du = 2^(a+b+1) B(a+1, b+1)
    a, b = 3.4, -0.45
    u, w = jacobi_rule(12, a, b)
    approx = np.sum(w * (1 - u) ** a * (1 + u) ** b)
    assert approx == pytest.approx(2 ** (a + b + 1) * sc.beta(a + 1, b + 1), rel=1e-13)


def test_panel_integrals_of_sine_powers():
    # sin(x)^4 between its zeros: 3 pi / 8 per panel
    edges = np.arange(0, 6) * math.pi
    log_g = lambda x: 4 * np.log(np.abs(np.sin(x)))  # noqa: E731
    vals = panel_integrals(log_g, edges[:-1], edges[1:], 4.0, 4.0, 16)
    assert np.allclose(vals, 3 * math.pi / 8, rtol=1e-13)


def test_richardson_recovers_limit():
    T = np.linspace(10, 400, 80)
    S = 2.5 + T**-1.5 * (0.7 - 3.0 / T + 5.0 / T**2)
    limit, err = richardson_tail(T, S, -1.5)
    assert abs(limit - 2.5) < 1e-12 and err < 1e-10


def test_richardson_needs_points():
    with pytest.raises(ToleranceError):
        richardson_tail([1.0, 2.0, 3.0], [1.0, 1.5, 1.7], -1.0)


def test_result_rejects_negative_error():
    with pytest.raises(ValueError):
        QuadratureResult(1.0, -1e-3, 3, True)
