"""Joint spectral amplitude and intensity.

Frequencies on the JSA axes are detunings from the degenerate frequency
``omega_p / 2``: a sample at detunings ``(ds, di)`` has
``omega_plus - omega_p = ds + di`` and ``omega_minus = ds - di``.  Working in
detunings keeps ``omega_s - omega_i`` exact in floating point, which the
exchange tests rely on.  Rows index the signal, columns the idler.
"""

from dataclasses import dataclass

import numpy as np

from .device import pump_bandwidth
from .errors import DomainError, GridError, WindowError
from .grids import FrequencyGrid


@dataclass(frozen=True)
class PumpSpectrum:
    """Gaussian pump envelope in the sum frequency.

    ``amplitude(w_plus) = exp(-(w_plus - omega_p)**2 / (4 sigma**2))``, so the
    intensity spectrum has rms width ``bandwidth_sigma``.
    """

    center_omega_p: float
    bandwidth_sigma: float

    def __post_init__(self):
        if not self.bandwidth_sigma > 0:
            raise DomainError(f"bandwidth_sigma must be > 0, got {self.bandwidth_sigma}")

    @classmethod
    def from_device(cls, params, bandwidth_sigma=None):
        if bandwidth_sigma is None:
            bandwidth_sigma = pump_bandwidth(params)
        return cls(params.pump_omega, bandwidth_sigma)

    def amplitude_detuned(self, detuning):
        """Envelope at ``omega_plus = omega_p + detuning``."""
        return np.exp(-np.asarray(detuning) ** 2 / (4 * self.bandwidth_sigma**2))

    def amplitude(self, omega_plus):
        return self.amplitude_detuned(np.asarray(omega_plus) - self.center_omega_p)


@dataclass(frozen=True, eq=False)
class JointSpectralAmplitude:
    axis: FrequencyGrid
    values: np.ndarray
    center: float = 0.0

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        n = self.axis.size
        if v.shape != (n, n):
            raise GridError(f"JSA must be {n}x{n} on its axis, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise DomainError("JSA values must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @classmethod
    def normalized(cls, axis, values, center=0.0):
        values = np.asarray(values, dtype=complex)
        w = axis.weights()
        norm2 = np.einsum("i,j,ij->", w, w, np.abs(values) ** 2)
        if not norm2 > 0:
            raise DomainError("JSA vanishes on the grid")
        return cls(axis, values / np.sqrt(norm2), center)

    @property
    def omega_s_axis(self):
        return self.axis.omega

    @property
    def omega_i_axis(self):
        return self.axis.omega

    def weights2d(self):
        w = self.axis.weights()
        return np.outer(w, w)

    def norm(self):
        return float(np.sqrt(np.sum(self.weights2d() * np.abs(self.values) ** 2)))

    def transposed(self):
        return JointSpectralAmplitude(self.axis, self.values.T, self.center)


def build_jsa(spectrum, pm, omega_s, omega_i=None):
    """Product ``phi_spectral(w_plus) * phi_PM(w_minus)`` on a square grid.

    Parameters
    ----------
    spectrum : PumpSpectrum
    pm : PhaseMatching
        Looked up by linear interpolation at each ``omega_s - omega_i``.
    omega_s, omega_i : FrequencyGrid
        Detuning axes; they must be identical.

    Raises
    ------
    GridError
        The two axes differ.
    WindowError
        ``omega_s - omega_i`` leaves the range of the phase-matching grid.
    """
    if omega_i is not None and not omega_s.same_as(omega_i):
        raise GridError("signal and idler axes must be identical")
    d = omega_s.omega
    w_minus = d[:, None] - d[None, :]
    w_plus = d[:, None] + d[None, :]
    lo, hi = pm.omega[0], pm.omega[-1]
    slack = 1e-9 * pm.grid.step
    if w_minus.min() < lo - slack or w_minus.max() > hi + slack:
        raise WindowError(
            f"JSA spans omega_minus in [{w_minus.min():.3g}, {w_minus.max():.3g}] "
            f"but the phase-matching grid only covers [{lo:.3g}, {hi:.3g}]"
        )
    g = np.interp(w_minus, pm.omega, pm.values.real) + 1j * np.interp(
        w_minus, pm.omega, pm.values.imag
    )
    f = spectrum.amplitude_detuned(w_plus)
    return JointSpectralAmplitude.normalized(omega_s, f * g, center=spectrum.center_omega_p / 2)


def jsi(jsa):
    """Joint spectral intensity ``|phi|^2``; its trapezoid integral is 1."""
    return np.abs(jsa.values) ** 2


def jsa_exchange_residual(jsa, alpha, swap_sectors=False):
    """L2 norm of ``phi - exp(i alpha pi sign(ws - wi)) phi^T``."""
    d = jsa.axis.omega
    s = np.sign(d[:, None] - d[None, :])
    if swap_sectors:
        s = -s
    r = jsa.values - np.exp(1j * alpha * np.pi * s) * jsa.values.T
    return float(np.sqrt(np.sum(jsa.weights2d() * np.abs(r) ** 2)))


def symmetry_residual(jsa):
    """Relative L2 distance between the JSA and its transpose."""
    r = jsa.values - jsa.values.T
    return float(np.sqrt(np.sum(jsa.weights2d() * np.abs(r) ** 2)) / jsa.norm())


def rotated_block(jsa):
    """JSA resampled on (omega_plus, omega_minus) without interpolation.

    Uses the sublattice ``i + j`` even, where ``(i + j) / 2`` and
    ``(i - j) / 2`` are integers, and keeps only the rectangle
    ``|w_plus|, |w_minus| <= W`` that lies wholly inside the square grid.
    Returns ``(w_plus, w_minus, matrix)``.
    """
    d = jsa.axis.omega
    n = d.size
    step = jsa.axis.step
    p = np.arange(n)
    q = np.arange(-((n - 1) // 2), (n - 1) // 2 + 1)
    w_plus = 2 * d[0] + 2 * p * step
    w_minus = 2 * q * step
    center = d[0] + d[-1]
    half = 0.5 * (d[-1] - d[0])
    tol = 1e-9 * step
    p = p[np.abs(w_plus - center) <= half + tol]
    q = q[np.abs(w_minus) <= half + tol]
    i = p[:, None] + q[None, :]
    j = p[:, None] - q[None, :]
    # the rectangle is inscribed in the square, so every index is in range
    block = jsa.values[i, j]
    return 2 * d[0] + 2 * p * step, 2 * q * step, block


def factorization_ratio(jsa):
    """Second over first singular value of :func:`rotated_block`.

    Zero for a JSA of the form ``f(w_plus) g(w_minus)``.
    """
    _, _, m = rotated_block(jsa)
    s = np.linalg.svd(m, compute_uv=False)
    return float(s[1] / s[0]) if s.size > 1 and s[0] > 0 else 0.0


def difference_marginal(jsa_or_intensity, axis=None):
    """JSI summed along lines of constant ``omega_minus``.

    Returns ``(w_minus, marginal)`` with ``w_minus = m * d_omega`` for
    ``m = -(n-1) .. n-1``.  This is the intensity profile along the
    antidiagonal direction, integrated over the sum frequency.
    """
    if axis is None:
        axis = jsa_or_intensity.axis
        intensity = jsi(jsa_or_intensity)
    else:
        intensity = np.asarray(jsa_or_intensity)
    n = axis.size
    idx = np.subtract.outer(np.arange(n), np.arange(n)) + (n - 1)
    w = axis.weights()
    marginal = np.bincount(idx.ravel(), weights=(np.outer(w, w) * intensity).ravel(), minlength=2 * n - 1)
    return np.arange(-(n - 1), n) * axis.step, marginal
