import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import FILM_INTEGRAL_MPMATH, exponential_cutoff_plate_bracket, film_integral_fixed_grid
from vacuum_pressure.errors import BracketError, DomainError, NumericalError
from vacuum_pressure.numerics import (
    Bracket,
    QuadratureResult,
    central_difference,
    find_root_bracketed,
    integrate_finite,
    integrate_semi_infinite,
    sum_minus_integral,
)


def film(x):
    u = math.exp(-x)
    return x * (2 - math.sqrt(1 - u) - math.sqrt(1 + u))


# ---- integrate_finite


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (lambda x: x**3, 0.0, 1.0, 0.25),
        (math.sin, 0.0, math.pi, 2.0),
    ],
)
def test_integrate_finite_examples(f, a, b, exact):
    r = integrate_finite(f, a, b, rel_tol=1e-12)
    assert r.value == pytest.approx(exact, rel=1e-12)
    assert r.error_estimate >= 0
    assert r.evaluations > 0


def test_integrate_finite_sqrt_endpoint():
    # int_0^1 sqrt(x) dx = 2/3
    r = integrate_finite(math.sqrt, 0.0, 1.0, rel_tol=1e-13, sqrt_endpoint=True)
    assert r.value == pytest.approx(2 / 3, rel=1e-13)


def test_integrate_finite_empty_and_reversed():
    assert integrate_finite(math.exp, 1.0, 1.0).value == 0.0
    with pytest.raises(DomainError):
        integrate_finite(math.exp, 1.0, 0.0)
    with pytest.raises(DomainError):
        integrate_finite(math.exp, 0.0, 1.0, rel_tol=0)


def test_integrate_finite_nonfinite_raises():
    with pytest.raises(NumericalError):
        integrate_finite(lambda x: math.inf, 0.0, 1.0)


def test_quadrature_result_invariants():
    with pytest.raises(ValueError):
        QuadratureResult(1.0, -1.0, 3)
    with pytest.raises(ValueError):
        QuadratureResult(1.0, 0.0, 0)


# ---- integrate_semi_infinite


@pytest.mark.parametrize(
    "f, exact",
    [
        (lambda x: math.exp(-x), 1.0),
        (lambda x: x**3 * math.exp(-x), 6.0),
    ],
)
def test_semi_infinite_examples(f, exact):
    r = integrate_semi_infinite(f, decay_scale=1.0, rel_tol=1e-12)
    assert r.value == pytest.approx(exact, rel=1e-11)
    assert abs(r.value - exact) <= r.error_estimate + 1e-12


def test_semi_infinite_film_integral_against_oracles():
    r = integrate_semi_infinite(film, 1.0, rel_tol=1e-12, sqrt_endpoint=True)
    assert film_integral_fixed_grid() == pytest.approx(FILM_INTEGRAL_MPMATH, rel=1e-11)
    assert r.value == pytest.approx(FILM_INTEGRAL_MPMATH, rel=1e-11)
    # 2 sqrt2 pi * 0.0078, two significant figures
    assert round(r.value / (2 * math.sqrt(2) * math.pi), 4) == 0.0078
    assert r.value == pytest.approx(0.069, abs=5e-4)


def test_semi_infinite_non_decaying_raises():
    with pytest.raises(NumericalError):
        integrate_semi_infinite(lambda x: 1.0, 1.0)


@settings(max_examples=30, deadline=None)
@given(st.floats(1.0, 10.0))
def test_semi_infinite_split(T):
    f = lambda x: math.exp(-x)  # noqa: E731
    whole = integrate_semi_infinite(f, 1.0, rel_tol=1e-12)
    head = integrate_finite(f, 0.0, T, rel_tol=1e-12)
    tail = integrate_semi_infinite(f, 1.0, rel_tol=1e-12, a=T)
    tol = whole.error_estimate + head.error_estimate + tail.error_estimate + 1e-14
    assert abs(whole.value - head.value - tail.value) <= tol


CORPUS = [
    (lambda x: x**3, 0.0, 1.0, 0.25),
    (math.sin, 0.0, math.pi, 2.0),
    (lambda x: math.exp(-x) * math.cos(3 * x), 0.0, 5.0,
     (1 - math.exp(-5) * (math.cos(15) - 3 * math.sin(15))) / 10),
]


@pytest.mark.parametrize("f, a, b, exact", CORPUS)
def test_halving_tolerance_never_worse(f, a, b, exact):
    errors = [abs(integrate_finite(f, a, b, rel_tol=tol).value - exact)
              for tol in (1e-4, 5e-5, 2.5e-5, 1.25e-5, 6.25e-6)]
    for coarse, fine in zip(errors, errors[1:]):
        assert fine <= coarse + 1e-16


def test_halving_tolerance_film_integral():
    errors = [abs(integrate_semi_infinite(film, 1.0, rel_tol=t, sqrt_endpoint=True).value
                  - FILM_INTEGRAL_MPMATH) for t in (1e-6, 5e-7, 2.5e-7, 1.25e-7)]
    for coarse, fine in zip(errors, errors[1:]):
        assert fine <= coarse + 1e-16


# ---- sum_minus_integral


def test_sum_minus_integral_b4_term():
    assert sum_minus_integral([0.0, 6.0]) == pytest.approx(1 / 120, rel=1e-15)


def test_sum_minus_integral_b2_term():
    assert sum_minus_integral([1.0, 0.0]) == pytest.approx(-1 / 12, rel=1e-15)


def test_sum_minus_integral_b6_term():
    assert sum_minus_integral([0.0, 0.0, 1.0]) == pytest.approx(-1 / 30240, rel=1e-14)


def test_sum_minus_integral_plate_mode_function():
    # g(n) = (pi^2/4) * 2 int_n^inf t^2 dt: g'(0) = 0, g'''(0) = -pi^2
    assert sum_minus_integral([0.0, -math.pi**2]) == pytest.approx(-math.pi**2 / 720, rel=1e-15)


def test_sum_minus_integral_needs_two_orders():
    with pytest.raises(DomainError):
        sum_minus_integral([0.0])


@pytest.mark.parametrize("beta", [0.1, 0.05])
def test_sum_minus_integral_against_direct_sum(beta):
    direct = exponential_cutoff_plate_bracket(beta)
    assert sum_minus_integral([0.0, -4.0]) == pytest.approx(direct, rel=1e-2)
    # keeping the B6 term with F^(5)(0) = -24 beta^2 tightens it
    assert sum_minus_integral([0.0, -4.0, -24 * beta**2]) == pytest.approx(direct, rel=1e-5)


# ---- find_root_bracketed


def test_root_examples():
    assert find_root_bracketed(lambda x: x * x - 4, Bracket(0, 10), 1e-14) == pytest.approx(2, abs=1e-13)
    assert find_root_bracketed(math.cos, Bracket(1, 2), 1e-14) == pytest.approx(math.pi / 2, abs=1e-13)


def test_root_endpoint_is_root():
    assert find_root_bracketed(lambda x: x, Bracket(0, 1)) == 0


def test_root_no_sign_change():
    with pytest.raises(BracketError):
        find_root_bracketed(lambda x: x * x + 1, Bracket(-1, 1))


def test_bracket_order():
    with pytest.raises(BracketError):
        Bracket(2.0, 1.0)


# ---- central_difference


def test_central_difference_quadratic_exact():
    assert central_difference(lambda x: x * x, 3.0, 0.5) == 6.0


def test_central_difference_cubic():
    h = 1e-4
    assert central_difference(lambda x: x**3, 1.0, h) == pytest.approx(3 + h * h, rel=1e-9)


def test_central_difference_bad_step():
    with pytest.raises(DomainError):
        central_difference(math.sin, 0.0, 0.0)
