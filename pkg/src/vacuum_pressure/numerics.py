"""
Numerical kernel: quadrature, Euler-Maclaurin sum-minus-integral,
bracketed root finding and central differences.

Quadrature is QUADPACK's adaptive Gauss-Kronrod bisection (via
``scipy.integrate.quad``) wrapped so that every call returns a value, a
non-negative error estimate and an evaluation count, and raises
``NumericalError`` instead of warning on non-convergence.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

from scipy import integrate, optimize
from scipy.special import bernoulli, factorial

from .errors import BracketError, DomainError, NumericalError

RealFunction = Callable[[float], float]

# QUADPACK refuses epsrel below 50 * machine epsilon when epsabs == 0.
_MIN_REL_TOL = 50 * 2.220446049250313e-16
_QUAD_LIMIT = 500


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not self.error_estimate >= 0:
            raise ValueError("error_estimate must be >= 0")
        if self.evaluations <= 0:
            raise ValueError("evaluations must be > 0")


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise BracketError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")


class _Counted:
    """Wraps an integrand and counts calls."""

    def __init__(self, f: RealFunction):
        self.f = f
        self.calls = 0

    def __call__(self, x: float) -> float:
        self.calls += 1
        return self.f(x)


def _quad(f: RealFunction, a: float, b: float, rel_tol: float, abs_tol: float):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(
            f, a, b, epsabs=abs_tol, epsrel=max(rel_tol, _MIN_REL_TOL),
            limit=_QUAD_LIMIT, full_output=1,
        )
    value, err = out[0], out[1]
    ier = 0 if len(out) == 3 else out[3]
    if not math.isfinite(value):
        raise NumericalError(f"integrand produced non-finite value on [{a}, {b}]", value)
    tol = max(max(rel_tol, _MIN_REL_TOL) * abs(value), abs_tol)
    if ier and isinstance(ier, str) and err > tol:
        raise NumericalError(f"quadrature did not converge on [{a}, {b}]: {ier}", value)
    return value, abs(err)


def integrate_finite(
    f: RealFunction,
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    sqrt_endpoint: bool = False,
    first_panel: float | None = None,
) -> QuadratureResult:
    """
    Integrate ``f`` over ``[a, b]``.

    Parameters
    ----------
    f : callable
        Scalar integrand, finite on ``[a, b]``.
    a, b : float
        Limits, ``a <= b``.
    rel_tol : float
        Relative tolerance (clamped below at 50 machine epsilons).
    abs_tol : float
        Absolute floor for the tolerance.
    sqrt_endpoint : bool
        If True, ``f`` is assumed to behave like ``sqrt(x - a)`` near ``a``.
        The first panel ``[a, a + first_panel]`` is then integrated in
        ``u = sqrt(x - a)``, which makes the integrand smooth again.
    first_panel : float, optional
        Width of the substituted panel; defaults to ``(b - a) / 8``.

    Returns
    -------
    QuadratureResult
    """
    if not rel_tol > 0:
        raise DomainError("rel_tol must be > 0")
    if not a <= b:
        raise DomainError(f"integrate_finite requires a <= b, got [{a}, {b}]")
    g = _Counted(f)
    if a == b:
        g(a)
        return QuadratureResult(0.0, 0.0, g.calls)

    total, err = 0.0, 0.0
    start = a
    if sqrt_endpoint:
        width = min(first_panel if first_panel else (b - a) / 8, b - a)
        u_max = math.sqrt(width)
        v, e = _quad(lambda u: 2.0 * u * g(a + u * u), 0.0, u_max, rel_tol, abs_tol)
        total, err = total + v, err + e
        start = a + width
    if start < b:
        v, e = _quad(g, start, b, rel_tol, abs_tol)
        total, err = total + v, err + e
    return QuadratureResult(total, err, max(g.calls, 1))


def integrate_semi_infinite(
    f: RealFunction,
    decay_scale: float,
    rel_tol: float = 1e-10,
    a: float = 0.0,
    sqrt_endpoint: bool = False,
) -> QuadratureResult:
    """
    Integrate an exponentially decaying ``f`` over ``[a, inf)``.

    The range is truncated at ``T >= a + 40 * decay_scale``, extended by
    doubling until ``|f(T)| < 1e-16 * peak``. The neglected tail is bounded
    by ``|f(T)| * decay_scale`` and added to the error estimate.
    """
    if not decay_scale > 0:
        raise DomainError("decay_scale must be > 0")
    g = _Counted(f)
    span = 40.0 * decay_scale
    samples = [abs(g(a + span * (i + 0.5) / 200)) for i in range(200)]
    peak = max(samples)
    T = a + span
    tail = abs(g(T))
    for _ in range(60):
        if tail < 1e-16 * peak or tail == 0.0:
            break
        span *= 2
        T = a + span
        tail = abs(g(T))
    else:
        raise NumericalError("integrand does not decay; cannot truncate semi-infinite range")

    inner = integrate_finite(
        g, a, T, rel_tol=rel_tol, sqrt_endpoint=sqrt_endpoint,
        first_panel=decay_scale if sqrt_endpoint else None,
    )
    return QuadratureResult(inner.value, inner.error_estimate + tail * decay_scale, g.calls)


def sum_minus_integral(derivatives_at_zero: Sequence[float]) -> float:
    r"""
    Euler-Maclaurin value of :math:`\sum_{(0)}^\infty g(n) - \int_0^\infty g(n)\,dn`.

    The ``n = 0`` term of the sum carries weight 1/2. For ``g`` and all its
    derivatives vanishing at infinity only the boundary terms at 0 survive::

        -g'(0)/12 + g'''(0)/720 - g^(5)(0)/30240 + ...

    Parameters
    ----------
    derivatives_at_zero : sequence of float
        Odd-order derivatives ``[g'(0), g'''(0), g^(5)(0), ...]``; at least
        the first two are required.
    """
    derivs = [float(d) for d in derivatives_at_zero]
    if len(derivs) < 2:
        raise DomainError("sum_minus_integral needs g'(0) and g'''(0) at minimum")
    B = bernoulli(2 * len(derivs))
    return -sum(B[2 * k] / factorial(2 * k, exact=True) * d
                for k, d in enumerate(derivs, start=1))


def find_root_bracketed(f: RealFunction, bracket: Bracket, tol: float = 1e-12) -> float:
    """Root of ``f`` inside ``bracket`` by Brent's method (200-iteration cap)."""
    f_lo, f_hi = f(bracket.lo), f(bracket.hi)
    if f_lo == 0.0:
        return bracket.lo
    if f_hi == 0.0:
        return bracket.hi
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise BracketError(
            f"no sign change on [{bracket.lo}, {bracket.hi}]: f = {f_lo}, {f_hi}"
        )
    try:
        return optimize.brentq(f, bracket.lo, bracket.hi, xtol=tol, maxiter=200)
    except RuntimeError as exc:
        raise NumericalError(str(exc)) from exc


def central_difference(f: RealFunction, x: float, h: float) -> float:
    if not h > 0:
        raise DomainError("step h must be > 0")
    return (f(x + h) - f(x - h)) / (2.0 * h)
