"""Physical parameters of the transverse-pump AlGaAs source.

Everything is SI internally: meters, seconds, radians.  The group velocity
of the down-converted modes is not a measured quantity here; the default
``DEFAULT_GROUP_INDEX = 3.5`` is an AlGaAs-scale assumption, so any result
quoted on an absolute delay or frequency axis depends on it.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.constants import c as SPEED_OF_LIGHT

from .errors import DomainError

DEFAULT_GROUP_INDEX = 3.5


@dataclass(frozen=True)
class DeviceParams:
    """Source and pump geometry.

    Parameters
    ----------
    waveguide_length : float
        Length ``L`` of the ridge along z [m].
    group_velocity : float
        Harmonic mean of the signal and idler group velocities [m/s].
    pump_wavelength : float
        Pump central wavelength [m].
    incidence_angle : float
        Pump incidence angle giving frequency-degenerate pairs [rad].
    pump_pulse_duration : float
        Intensity FWHM of the pump pulse [s].
    speed_of_light : float
        Vacuum speed of light [m/s].
    """

    waveguide_length: float = 1.9e-3
    group_velocity: float = SPEED_OF_LIGHT / DEFAULT_GROUP_INDEX
    pump_wavelength: float = 773e-9
    incidence_angle: float = float(np.deg2rad(0.5))
    pump_pulse_duration: float = 4.5e-12
    speed_of_light: float = field(default=SPEED_OF_LIGHT)

    def __post_init__(self):
        if not self.waveguide_length > 0:
            raise DomainError(f"waveguide_length must be > 0, got {self.waveguide_length}")
        if not 0 < self.group_velocity < self.speed_of_light:
            raise DomainError(
                f"group_velocity must lie in (0, c), got {self.group_velocity}"
            )
        if not self.pump_wavelength > 0:
            raise DomainError(f"pump_wavelength must be > 0, got {self.pump_wavelength}")
        if not 0 <= self.incidence_angle <= np.pi / 2:
            raise DomainError(
                f"incidence_angle must lie in [0, pi/2] rad, got {self.incidence_angle}"
            )
        if not self.pump_pulse_duration > 0:
            raise DomainError(
                f"pump_pulse_duration must be > 0, got {self.pump_pulse_duration}"
            )

    @classmethod
    def from_degrees(cls, incidence_angle_deg, **kwargs):
        return cls(incidence_angle=float(np.deg2rad(incidence_angle_deg)), **kwargs)

    @property
    def pump_omega(self):
        """Pump central angular frequency [rad/s]."""
        return 2 * np.pi * self.speed_of_light / self.pump_wavelength

    @property
    def group_index(self):
        return self.speed_of_light / self.group_velocity


def k_deg(params):
    """Longitudinal pump wavenumber ``omega_p sin(theta) / c`` [rad/m]."""
    return params.pump_omega * np.sin(params.incidence_angle) / params.speed_of_light


def beta_from_waist(params, waist):
    """Phase-matching width ``v_g / w_z`` [rad/s] for a Gaussian pump of waist ``waist``."""
    if not waist > 0:
        raise DomainError(f"waist must be > 0, got {waist}")
    return params.group_velocity / waist


def pump_bandwidth(params):
    """Intensity-spectrum rms width of a transform-limited Gaussian pump [rad/s].

    The pulse duration is read as an intensity FWHM; the rms widths of the
    temporal and spectral intensities then satisfy ``sigma_t * sigma_w = 1/2``.
    """
    sigma_t = params.pump_pulse_duration / (2 * np.sqrt(2 * np.log(2)))
    return 1.0 / (2 * sigma_t)


REFERENCE_DEVICE = DeviceParams()
