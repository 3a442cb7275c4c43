"""
Parallel-plate Casimir pressure.

Sign convention: positive pressure means repulsion between the plates.

The regularized energy per unit area is computed with the transverse
wave-vector integral done analytically. In units ``t = d omega / (pi c)``
each gap mode index ``n`` then contributes::

    E/L^2 = (hbar c pi^2 / (4 d^3)) * [sum_(0) F(n) - int_0^inf F(n) dn],
    F(n)  = 2 int_n^inf t^2 w(t) dt

(``sum_(0)`` halves the ``n = 0`` term). Euler-Maclaurin with
``F'(0) = 0``, ``F'''(0) = -4`` gives ``-pi^2 hbar c / (720 d^3)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from .bulk_pressure import pressure_continuum
from .dielectric import CutoffSpec, DielectricModel, Exponential, Sharp, Vacuum
from .errors import DomainError
from .numerics import Bracket, find_root_bracketed, sum_minus_integral
from .units import C, HBAR, require_positive

Regime = Literal["retarded", "quasistationary", "crossover"]

QUASISTATIONARY_BELOW = 0.2  # d < 0.2 c/omega_p
RETARDED_ABOVE = 5.0  # d > 5 c/omega_p
ASYMPTOTIC_MIN = 10.0  # d omega_c / c needed for the cutoff-independent limit

GUARD_QUASISTATIONARY = "quasistationary_regime_lifshitz_form_not_modelled"
GUARD_CROSSOVER = "retardation_crossover_regime"
GUARD_PREASYMPTOTIC = "cutoff_too_low_for_asymptotic_limit"
GUARD_NONSMOOTH = "cutoff_not_smooth_euler_maclaurin_remainder_uncontrolled"
APPROX_VACUUM_CASIMIR = "P_c(eps) approximated by the ideal vacuum Casimir pressure"

_GL_ORDER = 32


@dataclass(frozen=True)
class PlateConfiguration:
    """Two ideal plates a distance ``d`` apart; ``inner`` fills the gap."""

    d: float
    inner: DielectricModel = field(default_factory=Vacuum)
    outer: DielectricModel = field(default_factory=Vacuum)
    wall_omega_p: float = 1.0
    cutoff: CutoffSpec | None = None

    def __post_init__(self):
        require_positive("d", self.d)
        require_positive("wall_omega_p", self.wall_omega_p)

    @property
    def effective_cutoff(self) -> CutoffSpec:
        return self.cutoff if self.cutoff is not None else Sharp(self.wall_omega_p)


@dataclass(frozen=True)
class ForceResult:
    pressure: float
    regime: Regime
    guards: tuple[str, ...] = ()
    error_estimate: float = 0.0
    provenance: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class EnergyResult:
    """Energy per unit area, J/m^2."""

    energy: float
    error_estimate: float = 0.0
    guards: tuple[str, ...] = ()
    provenance: dict = field(default_factory=dict, compare=False)


def regime_of(d: float, omega_p: float) -> Regime:
    scale = C / require_positive("omega_p", omega_p)
    d = require_positive("d", d)
    if d < QUASISTATIONARY_BELOW * scale:
        return "quasistationary"
    if d > RETARDED_ABOVE * scale:
        return "retarded"
    return "crossover"


def _regime_guards(regime: Regime) -> tuple[str, ...]:
    return {
        "quasistationary": (GUARD_QUASISTATIONARY,),
        "crossover": (GUARD_CROSSOVER,),
        "retarded": (),
    }[regime]


def ideal_casimir_pressure(d: float) -> float:
    """``-hbar c pi^2 / (240 d^4)`` in Pa (attractive)."""
    d = require_positive("d", d)
    return -HBAR * C * math.pi**2 / (240.0 * d**4)


def casimir_energy_limit(d: float) -> float:
    """Cutoff-independent regularized energy per area via Euler-Maclaurin."""
    d = require_positive("d", d)
    # F'(0) = 0, F'''(0) = -4 for F(n) = 2 int_n^inf t^2 dt
    bracket = sum_minus_integral([0.0, -4.0])
    return HBAR * C * math.pi**2 / (4.0 * d**3) * bracket


def _segment_sum(t_weight, n_segments: int, splits: list[float], order: int) -> float:
    """
    ``sum_(0) F(n) - int F`` with the sum regrouped by unit segment.

    The piece ``S_j = 2 int_j^{j+1} t^2 w`` enters ``F(0) .. F(j)``, so the
    halved sum equals ``sum_j (j + 1/2) S_j`` and the difference is
    ``sum_j 2 int_j^{j+1} t^2 w(t) (j + 1/2 - t) dt``. Grouping per segment
    keeps the two O(t_c^4) totals from cancelling in floating point.
    """
    x, wts = np.polynomial.legendre.leggauss(order)
    edges = np.union1d(np.arange(n_segments + 1, dtype=float),
                       [s for s in splits if 0 < s < n_segments])
    lo, hi = edges[:-1], edges[1:]
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    t = mid[:, None] + half[:, None] * x[None, :]
    j = np.floor(mid)[:, None]
    f = 2.0 * t**2 * t_weight(t) * (j + 0.5 - t)
    per_piece = half * (f @ wts)
    return math.fsum(per_piece)


def casimir_energy_regularized(
    d: float, cutoff: CutoffSpec, gl_order: int = _GL_ORDER
) -> EnergyResult:
    """
    Plate zero-point energy per area minus the same with the mode sum
    replaced by an integral (the plates "at infinity"), evaluated directly
    with the given cutoff weight.

    Needs a smooth cutoff (``Exponential``) for the subtraction to approach
    ``-pi^2 hbar c / (720 d^3)``; other cutoffs are computed but guarded.
    """
    d = require_positive("d", d)
    alpha = math.pi * C / d  # omega per unit t
    t_c = cutoff.omega_c / alpha
    n_segments = int(math.ceil(cutoff.support_end / alpha)) + 1
    splits = [t_c] if not isinstance(cutoff, Exponential) else []

    w = np.vectorize(cutoff.weight, otypes=[float])

    def t_weight(t):
        return w(alpha * t)

    bracket = _segment_sum(t_weight, n_segments, splits, gl_order)
    coarse = _segment_sum(t_weight, n_segments, splits, gl_order // 2)
    scale = HBAR * C * math.pi**2 / (4.0 * d**3)

    guards: list[str] = []
    if d * cutoff.omega_c / C < ASYMPTOTIC_MIN:
        guards.append(GUARD_PREASYMPTOTIC)
    if not isinstance(cutoff, Exponential):
        guards.append(GUARD_NONSMOOTH)
    roundoff = 64 * np.finfo(float).eps * n_segments * max(t_c, 1.0) ** 2
    return EnergyResult(
        scale * bracket,
        scale * (abs(bracket - coarse) + roundoff),
        tuple(guards),
        {"route": "direct_sum_minus_integral", "cutoff": cutoff.label(),
         "d_omega_c_over_c": d * cutoff.omega_c / C},
    )


def _media_pressure(config: PlateConfiguration) -> tuple[float, float]:
    """Bulk pressure of the gap medium minus that of the outside medium."""
    if config.inner == config.outer:
        return 0.0, 0.0
    cutoff = config.effective_cutoff
    p_in = pressure_continuum(config.inner, cutoff)
    p_out = pressure_continuum(config.outer, cutoff)
    return p_in.pressure - p_out.pressure, p_in.error_estimate + p_out.error_estimate


def net_pressure_asymmetric(config: PlateConfiguration) -> ForceResult:
    """
    Net pressure on the plates when the gap and outside media differ::

        P_net = P_c + P0(inner) - P0(outer)

    Casimir's subtraction removes the outside radiation pressure, so with a
    dielectric gap and vacuum outside the dielectric's excess bulk pressure
    pushes the plates apart. ``P_c`` is taken as the ideal vacuum Casimir
    pressure (recorded in the provenance).
    """
    media, media_err = _media_pressure(config)
    p_c = ideal_casimir_pressure(config.d)
    regime = regime_of(config.d, config.wall_omega_p)
    return ForceResult(
        p_c + media,
        regime,
        _regime_guards(regime),
        media_err,
        {
            "casimir_term": p_c,
            "media_term": media,
            "inner": config.inner.label(),
            "outer": config.outer.label(),
            "cutoff": config.effective_cutoff.label(),
            "approximations": [APPROX_VACUUM_CASIMIR],
        },
    )


def find_sign_crossover(config: PlateConfiguration, bracket: Bracket) -> float:
    """Gap ``d*`` where the net plate pressure changes sign."""
    if bracket.lo <= 0:
        raise DomainError("distance bracket must be positive")
    media, _ = _media_pressure(config)

    def net(d: float) -> float:
        return ideal_casimir_pressure(d) + media

    return find_root_bracketed(net, bracket, tol=1e-15 * bracket.hi)


def with_gap(config: PlateConfiguration, d: float) -> PlateConfiguration:
    return replace(config, d=d)
