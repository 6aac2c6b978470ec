"""Spatial pump amplitude profiles along the waveguide.

A :class:`PumpProfile` holds samples of the pump amplitude on a
:class:`~anyonspdc.grids.SpatialGrid`.  The physical pump impinging at the
degeneracy angle carries a fast tilt ``exp(i k_deg z)``.  Profiles may store
that tilt explicitly (``carrier_wavenumber == k_deg``) or leave it implicit
(``carrier_wavenumber == 0``, the default), in which case ``amplitude`` is the
slowly varying envelope.  Both describe the same field; the phase-matching
integral demodulates either form exactly.

Gaussian waist convention
-------------------------
A Gaussian pump of waist ``w`` is ``exp(-(z - z0)**2 / (2 w**2))`` in
amplitude, i.e. ``w`` is the rms width of the intensity times sqrt(2).  With
this choice the phase-matching function of an untruncated, flat-phase
Gaussian is ``exp(-omega**2 / (2 beta**2))`` with ``beta = v_g / w`` exactly.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .device import k_deg
from .errors import DomainError, SamplingError, SupportWarning, WindowError
from .grids import SpatialGrid

# Fraction of pump power allowed beyond +-L/2 before warning.
SUPPORT_TOL = 1e-3
# Fraction of pump power allowed outside the sampled window.
WINDOW_TOL = 1e-2


@dataclass(frozen=True, eq=False)
class PumpProfile:
    grid: SpatialGrid
    amplitude: np.ndarray
    carrier_wavenumber: float = 0.0

    def __post_init__(self):
        a = np.array(self.amplitude, dtype=complex)
        if a.shape != (self.grid.size,):
            raise DomainError(
                f"amplitude has shape {a.shape}, grid has {self.grid.size} samples"
            )
        if not np.all(np.isfinite(a)):
            raise DomainError("pump amplitude must be finite")
        a.flags.writeable = False
        object.__setattr__(self, "amplitude", a)

    @property
    def z(self):
        return self.grid.z

    @property
    def envelope(self):
        """Amplitude with any explicit carrier removed."""
        if self.carrier_wavenumber == 0:
            return self.amplitude
        return self.amplitude * np.exp(-1j * self.carrier_wavenumber * self.z)

    @property
    def modulus(self):
        return np.abs(self.amplitude)

    @property
    def phase(self):
        return np.angle(self.amplitude)

    def reflected(self):
        """Mirror the envelope about z = 0, keeping the carrier."""
        self.grid.require_symmetric("pump reflection")
        env = self.envelope[::-1]
        if self.carrier_wavenumber:
            env = env * np.exp(1j * self.carrier_wavenumber * self.z)
        return PumpProfile(self.grid, env, self.carrier_wavenumber)

    def translated(self, steps):
        """Shift the stored samples by an integer number of grid steps, zero-filled."""
        n = int(steps)
        amp = np.zeros_like(self.amplitude)
        if n >= 0:
            amp[n:] = self.amplitude[: self.grid.size - n]
        else:
            amp[:n] = self.amplitude[-n:]
        return PumpProfile(self.grid, amp, self.carrier_wavenumber)


def _peak_normalized(grid, amplitude, carrier_wavenumber=0.0):
    peak = np.max(np.abs(amplitude))
    if not peak > 0:
        raise DomainError("pump amplitude is identically zero")
    return PumpProfile(grid, amplitude / peak, carrier_wavenumber)


def step_factor(z, step_position, step_phase):
    """``exp(i step_phase H(z - step_position))`` with ``H(0) = 1/2``.

    A sample sitting on the step gets the mean of both sides, which is what
    the trapezoid rule needs to integrate the discontinuity exactly for
    piecewise-linear integrands.
    """
    jump = np.exp(1j * step_phase)
    out = np.where(z > step_position, jump, 1.0 + 0j)
    dz = (z[-1] - z[0]) / (len(z) - 1)
    on_step = np.abs(z - step_position) <= 1e-9 * dz
    out[on_step] = 0.5 * (1.0 + jump)
    return out


def gaussian_step_pump(grid, waist, center_shift=0.0, step_position=0.0, step_phase=0.0):
    """Shifted Gaussian with a phase step, as written by a phase-only SLM.

    Parameters
    ----------
    grid : SpatialGrid
    waist : float
        Gaussian waist ``w`` [m]; see the module docstring for the convention.
    center_shift : float
        Position of the intensity maximum [m].
    step_position : float
        Location of the phase discontinuity [m]; must lie inside the grid.
    step_phase : float
        Phase added for ``z > step_position`` [rad].
    """
    if not waist > 0:
        raise DomainError(f"waist must be > 0, got {waist}")
    z = grid.z
    if not z[0] <= step_position <= z[-1]:
        raise DomainError(
            f"step_position {step_position} outside grid [{z[0]}, {z[-1]}]"
        )
    amp = np.exp(-((z - center_shift) ** 2) / (2 * waist**2)) * step_factor(
        z, step_position, step_phase
    )
    return _peak_normalized(grid, amp)


def custom_pump(grid, modulus, phase, carrier_wavenumber=0.0):
    modulus = np.asarray(modulus, dtype=float)
    phase = np.asarray(phase, dtype=float)
    if modulus.shape != (grid.size,) or phase.shape != (grid.size,):
        raise DomainError(
            f"modulus {modulus.shape} and phase {phase.shape} must both match "
            f"the grid ({grid.size},)"
        )
    if np.any(modulus < 0):
        raise DomainError("pump modulus must be non-negative")
    if not (np.all(np.isfinite(modulus)) and np.all(np.isfinite(phase))):
        raise DomainError("pump modulus and phase must be finite")
    return _peak_normalized(grid, modulus * np.exp(1j * phase), carrier_wavenumber)


def _inverse_transform(grid, spectrum, group_velocity, padding):
    """Inverse of the phase-matching transform by a padded DFT.

    Samples ``spectrum(omega)`` on ``padding * n`` frequencies spanning the
    Nyquist band of the spatial grid and returns
    ``a(z) = 1/(2 pi v) * int d omega  phi(omega) exp(i omega z / v)``
    on the full padded period, together with the matching positions.
    """
    n = grid.size
    dz = grid.step
    m = int(padding) * n
    d_omega = 2 * np.pi * group_velocity / (m * dz)
    omega = (np.arange(m) - m // 2) * d_omega
    z0 = grid.z[0]
    b = spectrum(omega) * np.exp(1j * omega * z0 / group_velocity)
    idx = np.arange(m)
    a = (
        d_omega
        / (2 * np.pi * group_velocity)
        * np.exp(-2j * np.pi * (m // 2) * idx / m)
        * m
        * np.fft.ifft(b)
    )
    # sample idx sits at z0 + idx*dz; the tail of the period wraps below z0
    wrap = idx >= n + (m - n) // 2
    z_full = z0 + np.where(wrap, idx - m, idx) * dz
    return z_full, a


def ideal_anyon_pump(
    grid,
    alpha,
    beta,
    params,
    padding=8,
    carrier=True,
    swap_sectors=False,
):
    """Pump profile whose phase-matching function is the ideal anyonic one.

    Inverts the phase-matching transform of
    :func:`~anyonspdc.phase_matching.analytic_anyon_pm` on ``grid``.

    Parameters
    ----------
    grid : SpatialGrid
    alpha : float
        Exchange parameter in [0, 1].
    beta : float
        Phase-matching width [rad/s].
    params : DeviceParams
    padding : int
        The frequency sampling covers ``padding`` times the spatial window,
        which pushes periodic images of the pump tails away from the grid.
    carrier : bool
        Multiply by ``exp(i k_deg z)`` so the profile is the physical field.
    swap_sectors : bool
        Use the mirrored sector assignment of the anyonic phase.

    Raises
    ------
    SamplingError
        The grid cannot resolve the carrier (``dz > pi / (5 k_deg)``) or the
        phase-matching band.
    WindowError
        More than 1% of the pump power falls outside the grid.

    Warns
    -----
    SupportWarning
        More than ``SUPPORT_TOL`` of the pump power lies beyond the waveguide
        ends, where the phase-matching integral truncates it.
    """
    from .phase_matching import anyon_pm_values, check_alpha

    check_alpha(alpha)
    if not beta > 0:
        raise DomainError(f"beta must be > 0, got {beta}")
    if int(padding) < 1:
        raise DomainError(f"padding must be >= 1, got {padding}")
    v = params.group_velocity
    dz = grid.step
    k = k_deg(params) if carrier else 0.0
    if k > 0 and dz > np.pi / (5 * k):
        raise SamplingError(
            f"grid step {dz:.3g} m cannot resolve the k_deg carrier; "
            f"need dz <= {np.pi / (5 * k):.3g} m"
        )
    nyquist = np.pi * v / dz
    if nyquist < 8 * beta:
        raise SamplingError(
            f"grid step {dz:.3g} m is too coarse for beta = {beta:.3g} rad/s; "
            f"need dz <= {np.pi * v / (8 * beta):.3g} m"
        )

    z_full, a_full = _inverse_transform(
        grid,
        lambda w: anyon_pm_values(w, alpha, beta, swap_sectors),
        v,
        padding,
    )
    power = np.abs(a_full) ** 2
    total = power.sum()
    half = params.waveguide_length / 2
    outside_grid = power[(z_full < grid.z[0]) | (z_full > grid.z[-1])].sum() / total
    if outside_grid > WINDOW_TOL:
        raise WindowError(
            f"{outside_grid:.2%} of the pump power lies outside the grid window"
        )
    beyond = power[np.abs(z_full) > half].sum() / total
    if beyond > SUPPORT_TOL:
        warnings.warn(
            f"{beyond:.2%} of the ideal pump power lies beyond the waveguide "
            f"(|z| > {half:.3g} m); the realized phase-matching will be truncated",
            SupportWarning,
            stacklevel=2,
        )
    amp = a_full[: grid.size]
    if k:
        amp = amp * np.exp(1j * k * grid.z)
    return _peak_normalized(grid, amp, k)
