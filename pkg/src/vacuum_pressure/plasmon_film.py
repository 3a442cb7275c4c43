"""
Surface plasmons on a thin free-electron film and the zero-point squeeze
pressure they exert.

A Drude film of thickness ``d`` in vacuum, treated in the electrostatic
(non-retarded) limit, carries two plasmon branches per in-plane wave
vector ``k``::

    omega_even(k) = (omega_p / sqrt 2) sqrt(1 - exp(-k d))
    omega_odd(k)  = (omega_p / sqrt 2) sqrt(1 + exp(-k d))

Both tend to ``omega_p / sqrt 2`` for ``k d >> 1``. Subtracting that
d-independent limit from each branch leaves a convergent zero-point
energy ``-K_E hbar omega_p / d^2`` per unit area; its derivative gives a
positive (compressive) pressure ``K_P hbar omega_p / d^3``, ``K_P = 2 K_E``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .numerics import central_difference, integrate_semi_infinite
from .units import BOHR_PRESSURE, C, HBAR, require_nonnegative, require_positive

QUASISTATIONARY_LIMIT = 0.2  # d < 0.2 c/omega_p
GUARD_POLARITON = "not_quasistationary_polariton_coupling_neglected"


@dataclass(frozen=True)
class FilmConfig:
    d: float
    omega_p: float

    def __post_init__(self):
        require_positive("d", self.d)
        require_positive("omega_p", self.omega_p)

    @property
    def quasistationary(self) -> bool:
        return self.d < QUASISTATIONARY_LIMIT * C / self.omega_p

    @property
    def guards(self) -> tuple[str, ...]:
        return () if self.quasistationary else (GUARD_POLARITON,)


@dataclass(frozen=True)
class PlasmonBranches:
    omega_even: float
    omega_odd: float


def plasmon_dispersion(k, film: FilmConfig):
    """
    Even (lower) and odd (upper) branch frequencies at wave number ``k``.

    ``k`` may be a scalar or an array; arrays return a pair of arrays.
    """
    if np.ndim(k) == 0:
        require_nonnegative("k", k)
    elif np.any(np.asarray(k) < 0):
        raise DomainError("k must be >= 0")
    split = np.exp(-np.asarray(k, dtype=float) * film.d)
    half = film.omega_p / math.sqrt(2.0)
    even = half * np.sqrt(1.0 - split)
    odd = half * np.sqrt(1.0 + split)
    if np.ndim(k) == 0:
        return PlasmonBranches(float(even), float(odd))
    return PlasmonBranches(even, odd)


def film_integrand(x: float) -> float:
    """``x (2 - sqrt(1 - e^-x) - sqrt(1 + e^-x))``, positive on (0, inf)."""
    u = math.exp(-x)
    a, b = math.sqrt(1.0 - u), math.sqrt(1.0 + u)
    # 2 - a - b rationalized twice; free of cancellation for small u
    return x * 2.0 * u * u / ((1.0 + a) * (1.0 + b) * (a + b))


@lru_cache(maxsize=16)
def _raw_integral(rel_tol: float) -> tuple[float, float]:
    r = integrate_semi_infinite(film_integrand, decay_scale=1.0, rel_tol=rel_tol,
                                sqrt_endpoint=True)
    return r.value, r.error_estimate


def dimensionless_film_coefficient(rel_tol: float = 1e-10) -> float:
    """``K_P = (1 / (2 sqrt2 pi)) int_0^inf x (2 - sqrt(1-e^-x) - sqrt(1+e^-x)) dx`` ~ 0.0078."""
    if not rel_tol > 0:
        raise DomainError("rel_tol must be > 0")
    value, _ = _raw_integral(float(rel_tol))
    return value / (2.0 * math.sqrt(2.0) * math.pi)


def film_coefficient_error(rel_tol: float = 1e-10) -> float:
    _, err = _raw_integral(float(rel_tol))
    return err / (2.0 * math.sqrt(2.0) * math.pi)


def film_energy_per_area(film: FilmConfig, rel_tol: float = 1e-12) -> float:
    """
    Subtracted plasmon zero-point energy per unit area, J/m^2 (negative).

    ``(hbar / 4 pi) int k dk [omega_even + omega_odd - sqrt2 omega_p]``,
    integrated in ``k`` at the given thickness. Equals
    ``-K_E hbar omega_p / d^2`` with ``K_E = K_P / 2``.
    """
    d = film.d
    r = integrate_semi_infinite(
        lambda k: k * film_integrand(k * d) / (k * d) if k > 0 else 0.0,
        decay_scale=1.0 / d, rel_tol=rel_tol, sqrt_endpoint=True,
    )
    # omega_even + omega_odd - sqrt2 omega_p = -(omega_p / sqrt2) * film_integrand(kd) / (kd)
    return -HBAR * film.omega_p / (4.0 * math.pi * math.sqrt(2.0)) * r.value


def film_pressure(film: FilmConfig, rel_tol: float = 1e-12) -> float:
    """Squeeze pressure on the film, Pa, positive (compressive)."""
    return dimensionless_film_coefficient(rel_tol) * HBAR * film.omega_p / film.d**3


def film_pressure_numeric(film: FilmConfig, h: float, rel_tol: float = 1e-12) -> float:
    """
    Squeeze pressure from a central difference of the film energy.

    Thinning the film lowers its energy, so the compressive pressure is
    ``+dE/dd``.
    """
    if not 0 < h <= film.d / 10:
        raise DomainError(f"step h must satisfy 0 < h <= d/10, got h={h}, d={film.d}")

    def energy(d: float) -> float:
        return film_energy_per_area(FilmConfig(d, film.omega_p), rel_tol)

    return central_difference(energy, film.d, h)


def fermi_pressure_scale() -> float:
    """Atomic (Bohr/Fermi) pressure scale used as a comparator only."""
    return BOHR_PRESSURE
