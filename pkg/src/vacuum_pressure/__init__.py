"""Zero-point electromagnetic radiation pressures.

Bulk cutoff-regularized vacuum pressure and its dielectric excess,
parallel-plate Casimir pressure with asymmetric media, and the
surface-plasmon squeeze pressure on thin metallic films.
"""

from .bulk_pressure import (
    BoxGeometry,
    PressureResult,
    pressure_closed_form,
    pressure_continuum,
    pressure_discrete_box,
    pressure_excess,
    pressure_naive_thermodynamic,
)
from .dielectric import (
    Constant,
    DrudePlasma,
    EffectiveSpeed,
    Exponential,
    Sharp,
    SmoothExponential,
    Step,
    Tabulated,
    Vacuum,
    cutoff_weight,
    effective_inverse_c_cubed,
    epsilon_at,
    load_tabulated_model,
)
from .errors import BracketError, DomainError, NumericalError, TableParseError
from .plasmon_film import (
    FilmConfig,
    PlasmonBranches,
    dimensionless_film_coefficient,
    film_energy_per_area,
    film_pressure,
    film_pressure_numeric,
    plasmon_dispersion,
)
from .plate_forces import (
    ForceResult,
    PlateConfiguration,
    casimir_energy_limit,
    casimir_energy_regularized,
    find_sign_crossover,
    ideal_casimir_pressure,
    net_pressure_asymmetric,
    regime_of,
)
from .units import CONSTANTS, PhysicalConstants, ev_to_angular_frequency, pascal_to_newton_per_cm2

__version__ = "0.1.0"
