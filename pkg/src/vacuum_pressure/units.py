"""
Physical constants and the handful of unit conversions the package needs.

All public functions elsewhere take SI inputs. Electron-volt entry points
convert here, at the boundary.

Constant values are CODATA 2018 (exact SI definitions for c and eV).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import DomainError

# Semantic aliases. They document intent only; values are plain floats.
AngularFrequency = float  # rad/s
PhotonEnergy = float  # eV
Length = float  # m
Pressure = float  # Pa
EnergyPerArea = float  # J/m^2

ANGSTROM = 1e-10
PA_PER_N_PER_CM2 = 1e4


@dataclass(frozen=True)
class PhysicalConstants:
    """
    Constants used throughout the package.

    Attributes
    ----------
    hbar : float
        Reduced Planck constant, J s.
    c : float
        Speed of light in vacuum, m/s.
    eV : float
        Joules per electron-volt.
    bohr_pressure : float
        Atomic pressure scale 10 eV per cubic angstrom, Pa.
    """

    hbar: float = 1.054571817e-34
    c: float = 2.99792458e8
    eV: float = 1.602176634e-19
    bohr_pressure: float = 10 * 1.602176634e-19 / ANGSTROM**3

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value > 0:
                raise DomainError(f"constant {name} must be positive, got {value}")

    @property
    def hbar_c(self) -> float:
        return self.hbar * self.c

    def as_table(self) -> dict[str, dict[str, float | str]]:
        units = {"hbar": "J s", "c": "m/s", "eV": "J", "bohr_pressure": "Pa"}
        return {k: {"value": v, "unit": units[k]} for k, v in asdict(self).items()}


CONSTANTS = PhysicalConstants()
HBAR = CONSTANTS.hbar
C = CONSTANTS.c
EV = CONSTANTS.eV
BOHR_PRESSURE = CONSTANTS.bohr_pressure


def ev_to_angular_frequency(e: PhotonEnergy) -> AngularFrequency:
    """Angular frequency omega with hbar*omega = e (e in eV)."""
    e = float(e)
    if not e >= 0 or math.isinf(e):
        raise DomainError(f"photon energy must be finite and >= 0 eV, got {e}")
    return e * EV / HBAR


def angular_frequency_to_ev(omega: AngularFrequency) -> PhotonEnergy:
    omega = float(omega)
    if not omega >= 0:
        raise DomainError(f"angular frequency must be >= 0, got {omega}")
    return omega * HBAR / EV


def pascal_to_newton_per_cm2(p: Pressure) -> float:
    return p / PA_PER_N_PER_CM2


def newton_per_cm2_to_pascal(p: float) -> Pressure:
    return p * PA_PER_N_PER_CM2


def require_nonnegative(name: str, value: float) -> float:
    """Validate a physical magnitude; returns it as float."""
    value = float(value)
    if not value >= 0 or math.isinf(value):
        raise DomainError(f"{name} must be finite and >= 0, got {value}")
    return value


def require_positive(name: str, value: float) -> float:
    value = float(value)
    if not value > 0 or math.isinf(value):
        raise DomainError(f"{name} must be finite and > 0, got {value}")
    return value
