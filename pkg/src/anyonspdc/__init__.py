"""Anyonic exchange statistics from pump-shaped transverse SPDC.

The pipeline runs pump profile -> phase-matching function -> joint spectral
amplitude -> Hong-Ou-Mandel curve -> diagnostics.  All quantities are SI.
"""

from .analysis import (
    StatisticsReport,
    curve_correlation,
    curve_overlap,
    estimate_alpha,
    exchange_orientation,
    point_symmetry_residual,
    zero_delay_probability,
)
from .device import REFERENCE_DEVICE, DeviceParams, beta_from_waist, k_deg, pump_bandwidth
from .errors import (
    AnyonSPDCError,
    ClampWarning,
    ConfigError,
    DomainError,
    GridError,
    IllPosedError,
    NumericalQualityError,
    PairingError,
    PreconditionError,
    SamplingError,
    SupportWarning,
    WindowError,
)
from .grids import DelayGrid, FrequencyGrid, SpatialGrid
from .hom import (
    ExchangePhaseFunction,
    HomCurve,
    anyon_to_boson_map,
    hom_curve_1d,
    hom_curve_2d_anyons,
    hom_curve_2d_bosons,
)
from .jsa import (
    JointSpectralAmplitude,
    PumpSpectrum,
    build_jsa,
    factorization_ratio,
    jsa_exchange_residual,
    jsi,
)
from .phase_matching import (
    PhaseMatching,
    analytic_anyon_pm,
    conjugation_symmetry_residual,
    exchange_phase_residual,
    l2_overlap,
    pm_from_pump,
)
from .pump import PumpProfile, custom_pump, gaussian_step_pump, ideal_anyon_pump

__version__ = "0.1.0"
