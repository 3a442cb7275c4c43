"""
Zero-point radiation pressure of bulk electromagnetic modes on a wall.

Routes
------
pressure_discrete_box       momentum flux summed over the standing waves of a box
pressure_continuum          the same after the angular integration, as a frequency integral
pressure_closed_form        sharp-cutoff result hbar omega_p^4 / (24 pi^2 cbar^3)
pressure_excess             dielectric minus vacuum pressure
pressure_naive_thermodynamic  -dE/dV of the cutoff spectrum; negative and NOT valid
                              for an open spectrum, kept for comparison only
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dielectric import (
    CutoffSpec,
    DielectricModel,
    EffectiveSpeed,
    Sharp,
    Vacuum,
    check_transparent,
    effective_inverse_c_cubed,
    spectral_moment,
)
from .errors import DomainError, NumericalError
from .units import C, HBAR, require_nonnegative, require_positive

GUARD_NO_MODES = "no_modes_below_cutoff"
GUARD_CLOSED_SYSTEM_ONLY = "invalid_for_open_spectrum"
GUARD_SOFT_CUTOFF = "closed_form_assumes_sharp_cutoff"


@dataclass(frozen=True)
class BoxGeometry:
    Lx: float
    Ly: float
    Lz: float

    def __post_init__(self):
        for name in ("Lx", "Ly", "Lz"):
            require_positive(name, getattr(self, name))

    @property
    def volume(self) -> float:
        return self.Lx * self.Ly * self.Lz


@dataclass(frozen=True)
class PressureResult:
    """Signed pressure in Pa with error estimate, guard flags and provenance."""

    pressure: float
    error_estimate: float = 0.0
    guards: tuple[str, ...] = ()
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.error_estimate >= 0:
            raise ValueError("error_estimate must be >= 0")


def _prefactor() -> float:
    return HBAR / (6.0 * math.pi**2 * C**3)


def pressure_continuum(
    model: DielectricModel, cutoff: CutoffSpec, rel_tol: float = 1e-12
) -> PressureResult:
    """
    ``P0 = hbar / (6 pi^2 c^3) * int w(omega) omega^3 eps(omega)^(3/2) d omega``.

    Raises DomainError if eps < 0 under the cutoff.
    """
    moment = spectral_moment(model, cutoff, rel_tol)
    scale = _prefactor() * cutoff.omega_c**4
    return PressureResult(
        scale * moment.value,
        scale * moment.error_estimate,
        provenance={"route": "continuum", "model": model.label(), "cutoff": cutoff.label()},
    )


def pressure_closed_form(omega_p: float, effective: EffectiveSpeed) -> PressureResult:
    """``hbar omega_p^4 / (24 pi^2) * (1 / cbar^3)`` for a sharp cutoff at ``omega_p``."""
    if not effective.valid:
        raise DomainError(f"invalid effective speed: {effective.reason}")
    omega_p = require_nonnegative("omega_p", omega_p)
    k = HBAR * omega_p**4 / (24.0 * math.pi**2)
    return PressureResult(
        k * effective.inv_c_bar_cubed,
        k * effective.error_estimate,
        provenance={"route": "closed_form", "omega_p": omega_p},
    )


def pressure_excess(
    model: DielectricModel, cutoff: CutoffSpec, rel_tol: float = 1e-12
) -> PressureResult:
    """
    Excess of the dielectric's bulk pressure over vacuum under the same cutoff.

    Uses ``hbar * M / (6 pi^2) * (1/cbar^3 - 1/c^3)`` where ``M`` is the
    cutoff-weighted ``int omega^3``; for a sharp cutoff ``M = omega_c^4 / 4``
    and this is the familiar ``hbar omega_p^4 / (24 pi^2)`` prefactor.
    """
    eff = effective_inverse_c_cubed(model, cutoff, rel_tol)
    if not eff.valid:
        raise DomainError(eff.reason)
    moment = spectral_moment(Vacuum(), cutoff, rel_tol)
    k = HBAR * moment.value * cutoff.omega_c**4 / (6.0 * math.pi**2)
    guards = () if isinstance(cutoff, Sharp) else (GUARD_SOFT_CUTOFF,)
    return PressureResult(
        k * (eff.inv_c_bar_cubed - 1.0 / C**3),
        k * eff.error_estimate,
        guards,
        provenance={
            "route": "excess",
            "model": model.label(),
            "cutoff": cutoff.label(),
            "eps_bar": eff.eps_bar,
        },
    )


def pressure_naive_thermodynamic(omega_p: float) -> PressureResult:
    """
    ``-dE0/dV`` with ``E0 = V int^{omega_p} (omega^2 / (pi^2 c^3)) (hbar omega / 2)``.

    Evaluates to ``-hbar omega_p^4 / (8 pi^2 c^3)``, minus three times the
    radiation pressure. The relation holds only for a closed system; here the
    spectrum exchanges modes with the continuum above the cutoff when the
    volume changes, so the result always carries a guard.
    """
    omega_p = require_nonnegative("omega_p", omega_p)
    value = -HBAR * omega_p**4 / (8.0 * math.pi**2 * C**3)
    return PressureResult(
        value, 0.0, (GUARD_CLOSED_SYSTEM_ONLY,),
        provenance={"route": "naive_thermodynamic", "omega_p": omega_p},
    )


def _mode_frequencies(
    k: np.ndarray, model: DielectricModel, rel_tol: float = 1e-12, max_iter: int = 200
) -> np.ndarray:
    """Solve ``omega = c k / sqrt(eps(omega))`` by fixed-point iteration."""
    if isinstance(model, Vacuum):
        return C * k
    eps = np.vectorize(model.epsilon, otypes=[float])
    omega = C * k
    for _ in range(max_iter):
        e = eps(omega)
        if np.any(e <= 0):
            raise DomainError(f"{model.label()} is opaque at a mode frequency")
        new = C * k / np.sqrt(e)
        if np.all(np.abs(new - omega) <= rel_tol * np.abs(new)):
            return new
        omega = new
    raise NumericalError("mode-frequency fixed point did not converge")


def pressure_discrete_box(
    box: BoxGeometry,
    model: DielectricModel,
    cutoff: CutoffSpec,
    surface_modes: bool = True,
) -> PressureResult:
    """
    Zero-point momentum flux on the z-walls of a reflecting box::

        P0 = (hbar / V) * sum_k w(omega) c(k) k_z^2 / k,   k_i = n_i pi / L_i

    The factor 1/2 of the zero-point energy and the two transverse
    polarizations cancel, so each wave vector carries weight (number of
    polarizations) / 2: 1 when all ``n_i >= 1`` and 1/2 when exactly one
    ``n_i`` is zero (a single polarization survives). Setting
    ``surface_modes=False`` keeps only ``n_i >= 1``; that undercounts by
    O(c / (L omega_c)).
    """
    check_transparent(model, cutoff)
    k_max = _max_wavenumber(model, cutoff)
    start = 0 if surface_modes else 1
    axes = [
        np.arange(start, int(math.floor(k_max * L / math.pi)) + 1, dtype=float) * math.pi / L
        for L in (box.Lx, box.Ly, box.Lz)
    ]
    kx, ky = np.meshgrid(axes[0], axes[1], indexing="ij")
    kx, ky = kx[..., None], ky[..., None]
    kz = axes[2][None, None, :]
    k = np.sqrt(kx**2 + ky**2 + kz**2)
    zeros = (kx == 0).astype(int) + (ky == 0) + (kz == 0)
    multiplicity = np.select([zeros == 0, zeros == 1], [1.0, 0.5], 0.0)
    live = (multiplicity > 0) & (k <= k_max)

    provenance = {
        "route": "discrete_box",
        "model": model.label(),
        "cutoff": cutoff.label(),
        "surface_modes": surface_modes,
    }
    k_live = k[live]
    if k_live.size == 0:
        return PressureResult(0.0, 0.0, (GUARD_NO_MODES,), provenance)

    omega = _mode_frequencies(k_live, model)
    weight = np.vectorize(cutoff.weight, otypes=[float])(omega)
    if not np.any(weight > 0):
        return PressureResult(0.0, 0.0, (GUARD_NO_MODES,), provenance)
    phase_speed = omega / k_live
    kz_live = np.broadcast_to(kz, k.shape)[live]
    terms = multiplicity[live] * weight * phase_speed * kz_live**2 / k_live
    # sort for an order-independent (bit-reproducible) reduction
    total = math.fsum(np.sort(terms))
    provenance["modes"] = int(k_live.size)
    return PressureResult(HBAR * total / box.volume, 0.0, (), provenance)


def _max_wavenumber(model: DielectricModel, cutoff: CutoffSpec) -> float:
    """Largest k that can map to a frequency with nonzero cutoff weight."""
    grid = np.linspace(0.0, cutoff.support_end, 2049)[1:]
    n_max = max(math.sqrt(model.epsilon(w)) for w in grid)
    return cutoff.support_end * n_max / C
