"""Van der Waals interaction of two harmonic atoms: London (R**-6) and
Casimir-Polder (R**-7) regimes, each reachable by more than one route."""
from .units import DimlessPoint, ModelParams, from_dimensionless, polarizability, to_dimensionless
from .specfun import (
    QuadratureError,
    QuadratureResult,
    QuadratureSpec,
    aux_f,
    aux_g,
    cosine_integral,
    integrate,
    integrate_semi_infinite,
    sine_integral,
)
from .instantaneous import (
    ComplexEnergy,
    exact_energy_normal_modes,
    exact_energy_spectral,
    london_energy,
    london_series_coefficients,
    thresholds,
)
from .kato import FockSpace, FockOperator, build_coupled_pair, kato_energy_coefficient, verify_fourth_order_subtraction
from .retarded import (
    SpectralTensor3,
    asymptote_casimir_polder,
    asymptote_london,
    crossover_curve,
    e4_energy_closed,
    e4_energy_reduced,
    e4_energy_static_replacement,
    e4_energy_tensor,
    field_correlator,
    retarded_energy,
)

__version__ = "0.1.0"
