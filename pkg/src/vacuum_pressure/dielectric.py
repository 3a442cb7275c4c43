"""
Dielectric response models, spectral cutoff weights, and the
omega^3-weighted effective light speed of a medium.

Models and cutoffs are immutable values. ``epsilon_at`` and
``cutoff_weight`` are the functional entry points; each class also
exposes the same behaviour as a method.
"""

from __future__ import annotations

import bisect
import csv
import io
import math
import os
from dataclasses import dataclass, field
from typing import Iterable, TextIO, Union

from .errors import DomainError, TableParseError
from .numerics import QuadratureResult, integrate_finite
from .units import C, require_positive

# ---------------------------------------------------------------------------
# permittivity models


@dataclass(frozen=True)
class Vacuum:
    def epsilon(self, omega: float) -> float:
        return 1.0

    def breakpoints(self) -> tuple[float, ...]:
        return ()

    def min_epsilon(self, omega_max: float) -> float:
        return 1.0

    def label(self) -> str:
        return "vacuum"


@dataclass(frozen=True)
class Constant:
    eps: float

    def __post_init__(self):
        require_positive("eps", self.eps)

    def epsilon(self, omega: float) -> float:
        return self.eps

    def breakpoints(self) -> tuple[float, ...]:
        return ()

    def min_epsilon(self, omega_max: float) -> float:
        return self.eps

    def label(self) -> str:
        return f"const:{self.eps!r}"


@dataclass(frozen=True)
class Step:
    """``eps_low`` below ``fraction * omega_p``, vacuum above."""

    eps_low: float
    fraction: float
    omega_p: float

    def __post_init__(self):
        require_positive("eps_low", self.eps_low)
        require_positive("omega_p", self.omega_p)
        if not 0 < self.fraction < 1:
            raise DomainError(f"step fraction must lie in (0, 1), got {self.fraction}")

    @property
    def edge(self) -> float:
        return self.fraction * self.omega_p

    def epsilon(self, omega: float) -> float:
        return self.eps_low if omega < self.edge else 1.0

    def breakpoints(self) -> tuple[float, ...]:
        return (self.edge,)

    def min_epsilon(self, omega_max: float) -> float:
        return min(self.eps_low, 1.0) if omega_max > self.edge else self.eps_low

    def label(self) -> str:
        return f"step:{self.eps_low!r},{self.fraction!r}"


@dataclass(frozen=True)
class DrudePlasma:
    """Collisionless free-electron metal, eps = 1 - omega_p^2 / omega^2."""

    omega_p: float

    def __post_init__(self):
        require_positive("omega_p", self.omega_p)

    def epsilon(self, omega: float) -> float:
        if omega == 0:
            raise DomainError("Drude permittivity is singular at omega = 0")
        return 1.0 - (self.omega_p / omega) ** 2

    def breakpoints(self) -> tuple[float, ...]:
        return (self.omega_p,)

    def min_epsilon(self, omega_max: float) -> float:
        return -math.inf

    def label(self) -> str:
        return f"drude:{self.omega_p!r}rad/s"


@dataclass(frozen=True)
class Tabulated:
    """Piecewise-linear eps(omega), clamped to the end values outside the table."""

    omegas: tuple[float, ...]
    values: tuple[float, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.omegas) != len(self.values) or len(self.omegas) < 2:
            raise DomainError("tabulated model needs >= 2 (omega, eps) pairs")
        if any(b <= a for a, b in zip(self.omegas, self.omegas[1:])):
            raise DomainError("tabulated frequencies must be strictly increasing")
        if not all(math.isfinite(v) for v in self.values + self.omegas):
            raise DomainError("tabulated entries must be finite")

    def epsilon(self, omega: float) -> float:
        xs, ys = self.omegas, self.values
        if omega <= xs[0]:
            return ys[0]
        if omega >= xs[-1]:
            return ys[-1]
        i = bisect.bisect_right(xs, omega) - 1
        t = (omega - xs[i]) / (xs[i + 1] - xs[i])
        return ys[i] + t * (ys[i + 1] - ys[i])

    def breakpoints(self) -> tuple[float, ...]:
        return self.omegas

    def min_epsilon(self, omega_max: float) -> float:
        i = bisect.bisect_right(self.omegas, omega_max)
        # nodes up to omega_max plus the interpolated value at omega_max
        return min(list(self.values[: max(i, 1)]) + [self.epsilon(omega_max)])

    def label(self) -> str:
        return f"table:{self.source}" if self.source else "table"


DielectricModel = Union[Vacuum, Constant, Step, DrudePlasma, Tabulated]


def epsilon_at(model: DielectricModel, omega: float) -> float:
    return model.epsilon(omega)


# ---------------------------------------------------------------------------
# cutoffs


@dataclass(frozen=True)
class Sharp:
    omega_c: float

    def __post_init__(self):
        require_positive("omega_c", self.omega_c)

    def weight(self, omega: float) -> float:
        return 1.0 if omega <= self.omega_c else 0.0

    @property
    def support_end(self) -> float:
        return self.omega_c

    @property
    def tail_scale(self) -> float:
        return 0.0

    def label(self) -> str:
        return f"sharp({self.omega_c!r})"


@dataclass(frozen=True)
class SmoothExponential:
    """Unit weight up to ``omega_c``, Gaussian roll-off of ``width`` above it."""

    omega_c: float
    width: float

    def __post_init__(self):
        require_positive("omega_c", self.omega_c)
        require_positive("width", self.width)

    def weight(self, omega: float) -> float:
        excess = max(0.0, omega - self.omega_c)
        return math.exp(-((excess / self.width) ** 2))

    @property
    def support_end(self) -> float:
        # exp(-40) ~ 4e-18
        return self.omega_c + math.sqrt(40.0) * self.width

    @property
    def tail_scale(self) -> float:
        return self.width / (2 * math.sqrt(40.0))

    def label(self) -> str:
        return f"smooth({self.omega_c!r},{self.width!r})"


@dataclass(frozen=True)
class Exponential:
    """``exp(-omega / omega_c)``: infinitely differentiable, Casimir's own choice.

    Needed wherever a mode sum is regularized by comparing it with an
    integral: the Euler-Maclaurin remainder only vanishes for a smooth weight.
    """

    omega_c: float

    def __post_init__(self):
        require_positive("omega_c", self.omega_c)

    def weight(self, omega: float) -> float:
        return math.exp(-omega / self.omega_c)

    @property
    def support_end(self) -> float:
        return 60.0 * self.omega_c

    @property
    def tail_scale(self) -> float:
        return self.omega_c

    def label(self) -> str:
        return f"exponential({self.omega_c!r})"


CutoffSpec = Union[Sharp, SmoothExponential, Exponential]


def cutoff_weight(spec: CutoffSpec, omega: float) -> float:
    if not omega >= 0:
        raise DomainError(f"omega must be >= 0, got {omega}")
    return spec.weight(omega)


# ---------------------------------------------------------------------------
# spectral averages


def check_transparent(model: DielectricModel, cutoff: CutoffSpec) -> None:
    """Raise DomainError if eps < 0 anywhere the cutoff weight is nonzero."""
    lowest = model.min_epsilon(cutoff.support_end)
    if lowest < 0:
        raise DomainError(
            f"{model.label()} has eps < 0 below the cutoff; eps^(3/2) is not real "
            "(the medium must be transparent under the cutoff)"
        )


def spectral_moment(
    model: DielectricModel, cutoff: CutoffSpec, rel_tol: float = 1e-12
) -> QuadratureResult:
    """
    ``int w(omega) omega^3 eps(omega)^(3/2) d omega`` in units of ``omega_c^4``.

    Integrated piecewise between the discontinuities of the model and the
    cutoff, in the scaled variable ``x = omega / omega_c``.
    """
    check_transparent(model, cutoff)
    wc = cutoff.omega_c
    end = cutoff.support_end / wc
    cuts = {0.0, end, 1.0}
    cuts.update(b / wc for b in model.breakpoints())
    nodes = sorted(x for x in cuts if 0.0 <= x <= end)

    def integrand(x: float) -> float:
        omega = x * wc
        return cutoff.weight(omega) * x**3 * model.epsilon(omega) ** 1.5

    value, err, evals = 0.0, 0.0, 0
    for lo, hi in zip(nodes, nodes[1:]):
        # keep inside each piece so discontinuous models see one branch only
        pad = 1e-15 * (hi - lo)
        # the whole moment is O(1) in x units; tiny pieces need an absolute floor
        r = integrate_finite(integrand, lo + pad, hi - pad, rel_tol=rel_tol,
                             abs_tol=1e-3 * rel_tol)
        value += r.value
        err += r.error_estimate
        evals += r.evaluations
    if cutoff.tail_scale:
        err += abs(integrand(end)) * cutoff.tail_scale / wc
    return QuadratureResult(value, err, max(evals, 1))


@dataclass(frozen=True)
class EffectiveSpeed:
    """
    ``1 / cbar^3``: the omega^3 eps^(3/2) weighted average of ``1 / c(omega)^3``.

    ``eps_bar`` follows from ``cbar = c / sqrt(eps_bar)``.
    """

    inv_c_bar_cubed: float
    valid: bool
    error_estimate: float = 0.0
    reason: str = ""

    def __post_init__(self):
        if self.valid and not self.inv_c_bar_cubed > 0:
            raise ValueError("valid effective speed requires inv_c_bar_cubed > 0")

    @property
    def c_bar(self) -> float:
        return self.inv_c_bar_cubed ** (-1.0 / 3.0)

    @property
    def eps_bar(self) -> float:
        return (self.inv_c_bar_cubed * C**3) ** (2.0 / 3.0)


def effective_inverse_c_cubed(
    model: DielectricModel, cutoff: CutoffSpec, rel_tol: float = 1e-12
) -> EffectiveSpeed:
    """
    Ratio of the cutoff-weighted integrals of ``omega^3 eps^(3/2)`` and
    ``omega^3``, divided by ``c^3``.

    Returns an invalid ``EffectiveSpeed`` (with ``reason``) if the medium is
    opaque (eps < 0) somewhere under the cutoff.
    """
    try:
        num = spectral_moment(model, cutoff, rel_tol)
    except DomainError as exc:
        return EffectiveSpeed(math.nan, False, math.nan, str(exc))
    den = spectral_moment(Vacuum(), cutoff, rel_tol)
    ratio = num.value / den.value
    err = abs(ratio) * (num.error_estimate / abs(num.value) + den.error_estimate / den.value)
    return EffectiveSpeed(ratio / C**3, True, err / C**3)


# ---------------------------------------------------------------------------
# tabulated input


def _parse_rows(lines: Iterable[str], source: str) -> Tabulated:
    omegas: list[float] = []
    values: list[float] = []
    seen_data = False
    for lineno, row in enumerate(csv.reader(lines), start=1):
        if not row or not "".join(row).strip():
            continue
        if row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise TableParseError(f"expected 2 columns, got {len(row)}", lineno)
        try:
            omega, eps = float(row[0]), float(row[1])
        except ValueError:
            if not seen_data and not omegas:
                seen_data = True  # header row
                continue
            raise TableParseError(f"non-numeric entry {row!r}", lineno) from None
        seen_data = True
        if not (math.isfinite(omega) and math.isfinite(eps)):
            raise TableParseError("entries must be finite", lineno)
        if omega < 0:
            raise TableParseError(f"negative frequency {omega}", lineno)
        if omegas and omega <= omegas[-1]:
            raise TableParseError(
                f"frequencies must be strictly increasing ({omega} after {omegas[-1]})", lineno
            )
        omegas.append(omega)
        values.append(eps)
    if len(omegas) < 2:
        raise TableParseError(f"need at least 2 data rows, found {len(omegas)}")
    return Tabulated(tuple(omegas), tuple(values), source=source)


def load_tabulated_model(source: str | os.PathLike | TextIO) -> Tabulated:
    """
    Read ``omega_rad_per_s,epsilon`` rows from a CSV path or text stream.

    An optional header row and ``#`` comment lines are skipped.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="", encoding="utf-8") as fh:
            return _parse_rows(fh, os.fspath(source))
    if isinstance(source, io.TextIOBase) or hasattr(source, "read"):
        return _parse_rows(source, getattr(source, "name", ""))
    raise TypeError(f"cannot read table from {type(source).__name__}")
