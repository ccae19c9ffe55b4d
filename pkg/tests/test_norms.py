"""Exact and asymptotic Laguerre L_p-norms and the regime classifier."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from rydberg_renyi.errors import DomainError, ToleranceError
from rydberg_renyi.norms import (
    Branch,
    Caveat,
    NormSpec,
    classify,
    convergence_report,
    make_spec,
    norm_asymptotic,
    norm_exact,
    norm_n0_closed_form,
)
from rydberg_renyi.special import Accuracy


def mp_norm(n, l, D, p):
    """Extended-precision oracle: mpmath quad split at the polynomial's zeros."""
    with mp.workdps(30):
        a = mp.mpf(l) + mp.mpf(D) / 2 - 1
        b = (mp.mpf(p) - 1) * (1 - mp.mpf(D) / 2)
        nrm = mp.gamma(n + a + 1) / mp.factorial(n)
        f = lambda x: (mp.laguerre(n, a, x) ** 2 * x**a * mp.e ** (-x) / nrm) ** p * x**b  # noqa: E731
        coeffs = [mp.binomial(n + a, n - k) * (-1) ** k / mp.factorial(k) for k in range(n, -1, -1)]
        zeros = sorted(mp.re(z) for z in mp.polyroots(coeffs, maxsteps=200, extraprec=200)) if n else []
        return float(mp.quad(f, [0] + zeros + [4 * n + 40, mp.inf]))


# --- specs ----------------------------------------------------------------------


def test_make_spec_parameters():
    s = make_spec(50, 0, 3, 2)
    assert (s.alpha, s.beta) == (0.5, -0.5)
    s = make_spec(7, 0, 2, 3.3)
    assert (s.alpha, s.beta) == (0.0, 0.0)
    s = make_spec(0, 2, 4, 3)
    assert (s.alpha, s.beta) == (3.0, -2.0)


@pytest.mark.parametrize("args", [(-1, 0, 3, 2), (1.5, 0, 3, 2), (1, -1, 3, 2), (1, 0, -1, 2), (1, 0, 3, 0), (1, 1, 1, 2)])
def test_make_spec_rejects(args):
    with pytest.raises(DomainError):
        make_spec(*args)


def test_make_spec_origin_guard():
    with pytest.raises(DomainError):
        make_spec(3, 0, 0.0, 2.0)  # alpha = -1


# --- classifier -----------------------------------------------------------------


@pytest.mark.parametrize(
    "D, p, branch, exponent, base, log",
    [
        (3, 2, Branch.BESSEL, -0.5, 1, False),
        (3, 0.5, Branch.COSINE, 0.75, 2, False),
        (3, 1.5, Branch.COSINE_BESSEL, -0.75, 1, True),
        (2, 2, Branch.DUAL_TRANSITION, -1.0, 1, True),
        (2, 1.5, Branch.COSINE, -0.5, 2, False),
        (2, 3, Branch.BESSEL, -1.0, 1, False),
        (1, 3, Branch.AIRY, -2 / 3, 4, False),
        (1.5, 5, Branch.AIRY_BESSEL_TIE, None, 1, False),
        (1.5, 2, Branch.COSINE_AIRY, -0.75, 4, True),
        (1.5, 7, Branch.BESSEL, None, 1, False),
        (1.5, 3, Branch.AIRY, None, 4, False),
    ],
)
def test_classify_table(D, p, branch, exponent, base, log):
    r = classify(make_spec(10, 0, D, p))
    assert r.branch is branch and r.base == base and r.has_log is log
    if exponent is not None:
        assert r.exponent == pytest.approx(exponent, abs=1e-14)


def test_classify_thresholds():
    r = classify(make_spec(10, 0, 4, 2))
    assert r.p_star == pytest.approx(4 / 3) and r.p_tilde is None
    assert classify(make_spec(10, 0, 1.5, 3)).p_tilde == pytest.approx(5.0)
    assert classify(make_spec(10, 0, 1.0, 3)).p_tilde is None
    assert classify(make_spec(10, 0, 1.2, 3)).p_star == 2.0


@given(st.floats(min_value=2.05, max_value=30.0))
def test_exponent_continuous_at_p_star(D):
    p_star = D / (D - 1)
    left = (1 - p_star) * D / 2
    right = (p_star - 1) * D / 2 - p_star
    assert left == pytest.approx(right, abs=1e-12)
    assert classify(make_spec(5, 0, D, p_star)).exponent == pytest.approx(left, abs=1e-12)
    below = classify(make_spec(5, 0, D, p_star - 1e-7)).exponent
    above = classify(make_spec(5, 0, D, p_star + 1e-7)).exponent
    assert abs(below - left) < 1e-5 and abs(above - left) < 1e-5


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 5.0])
def test_constancy_locus(p):
    D = 2 * p / (p - 1)
    r = classify(make_spec(5, 0, D, p))
    assert r.branch is Branch.BESSEL and r.exponent == 0.0


# --- asymptotic -------------------------------------------------------------------


def test_asymptotic_d3_bessel_line():
    a = norm_asymptotic(make_spec(100, 0, 3, 2))
    assert a.model(400) == pytest.approx(400**-0.5 / math.pi, rel=1e-10)
    assert a.caveat is Caveat.RELATIVE_ONE_TERM


def test_asymptotic_d4_constant():
    a = norm_asymptotic(make_spec(100, 0, 4, 2))
    assert a.model(10) == a.model(1000) == pytest.approx(0.20265, abs=5e-5)


def test_asymptotic_p1_is_one():
    for l in (0, 2):
        assert norm_asymptotic(make_spec(30, l, 2, 1.0)).model(30) == pytest.approx(1.0, abs=1e-14)


def test_log_caveat_and_coefficients():
    a = norm_asymptotic(make_spec(100, 0, 3, 1.5))
    assert a.caveat is Caveat.LOG_WITH_UNKNOWN_O1
    p = 1.5
    coef = 2 * math.gamma(p + 0.5) / (math.pi ** (p + 0.5) * math.gamma(p + 1))
    assert a.coefficient == pytest.approx(coef, rel=1e-13)
    assert a.model(100) == pytest.approx(coef * 100**-0.75 * math.log(100), rel=1e-13)
    for D in (2, 1.5):
        assert norm_asymptotic(make_spec(100, 0, D, 2)).coefficient == pytest.approx(1 / math.pi**2, rel=1e-14)


def test_tie_coefficient_is_sum():
    from rydberg_renyi.constants import airy_constant, bessel_constant

    s = make_spec(100, 0, 1.5, 5.0)
    a = norm_asymptotic(s)
    airy = airy_constant(5.0) / math.pi**5 * 4.0 ** ((1 - 10) / 3 + s.beta)
    assert a.coefficient == pytest.approx(airy + bessel_constant(s.alpha, s.beta, 5.0), rel=1e-13)


# --- exact ---------------------------------------------------------------------------


def test_exact_ground_state():
    assert norm_exact(make_spec(0, 0, 3, 2)).value == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-12)


@given(st.integers(0, 4), st.sampled_from([1.0, 2.0, 3.0, 5.0, 7.5]), st.floats(min_value=0.2, max_value=6.0))
def test_exact_n0_closed_form(l, D, p):
    assume(not (D == 1.0 and l > 0))
    s = make_spec(0, l, D, p)
    assert norm_exact(s).value == pytest.approx(norm_n0_closed_form(s), rel=1e-10)


@pytest.mark.parametrize("n, l, D", [(7, 1, 3), (40, 0, 2), (150, 3, 6), (300, 0, 1)])
def test_exact_normalization(n, l, D):
    r = norm_exact(make_spec(n, l, D, 1.0))
    assert r.value == pytest.approx(1.0, abs=1e-10)
    assert r.certified and 0 <= r.abs_error_estimate < 1e-10


@pytest.mark.parametrize(
    "args", [(10, 0, 3, 3), (10, 2, 3, 2), (8, 1, 7, 1.7), (12, 0, 1, 4), (6, 0, 1.5, 2.5), (9, 3, 2, 0.5), (10, 0, 3, 0.3)]
)
def test_exact_against_mpmath(args):
    assert norm_exact(make_spec(*args)).value == pytest.approx(mp_norm(*args), rel=1e-12)


def test_exact_singular_origin():
    # p alpha + beta = -0.45: the integrand is unbounded at x = 0
    s = make_spec(6, 0, 1.0, 0.1)
    assert s.origin_exponent < 0
    assert norm_exact(s).value == pytest.approx(mp_norm(6, 0, 1.0, 0.1), rel=1e-10)


def test_exact_bessel_convergence_at_500():
    assert abs(math.pi * math.sqrt(500) * norm_exact(make_spec(500, 0, 3, 2)).value - 1) < 0.05


def test_exact_uncertifiable_request():
    with pytest.raises(ToleranceError):
        norm_exact(make_spec(20, 0, 3, 2), Accuracy(abs_tol=1e-30, rel_tol=1e-30))


def test_exact_depends_only_on_alpha_beta():
    # (l=1, D=2) and (l=0, D=4) share alpha = 1, beta = 0 at p = 1
    a, b = make_spec(25, 1, 2, 1.0), make_spec(25, 0, 4, 1.0)
    assert (a.alpha, a.beta) == (b.alpha, b.beta)
    assert norm_exact(a).value == norm_exact(b).value


@given(st.integers(1, 60), st.integers(0, 3), st.sampled_from([2.0, 3.0, 4.0]), st.floats(min_value=0.3, max_value=4.0))
def test_exact_positive(n, l, D, p):
    assert norm_exact(make_spec(n, l, D, p)).value > 0


def test_exact_p_below_one_exceeds_one():
    # Jensen-type check: for p < 1 and beta = 0 the norm exceeds the p = 1 value
    assert norm_exact(make_spec(30, 0, 2, 0.5)).value > 1


# --- convergence report -----------------------------------------------------------------


def test_report_bessel_branch():
    rows = convergence_report(0, 3, 2.0, [50, 100, 200, 500])
    devs = [abs(r.ratio - 1) for r in rows]
    assert devs[-1] < 0.05 and devs == sorted(devs, reverse=True)


def test_report_normalization_branch():
    for r in convergence_report(0, 2, 1.0, [5, 17, 60]):
        assert r.ratio == pytest.approx(1.0, abs=1e-8)


@pytest.mark.slow
def test_report_log_branch():
    rows = convergence_report(0, 3, 1.5, [100, 400, 1600])
    res = np.array([r.ratio for r in rows])
    assert res.max() - res.min() < abs(res.mean())


def test_report_requires_ascending_grid():
    with pytest.raises(DomainError):
        convergence_report(0, 3, 2.0, [100, 50])


def test_normspec_direct_construction():
    s = NormSpec(4, 1, 3.0, 2.0)
    assert s.alpha == 1.5 and s.beta == -0.5 and s.origin_exponent == 2.5
