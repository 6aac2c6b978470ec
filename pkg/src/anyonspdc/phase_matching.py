"""Phase-matching functions of the transverse-pump source.

The phase-matching function is the Fourier transform of the pump profile
across the waveguide::

    phi_PM(w) = int_{-L/2}^{L/2} dz  A_p(z) exp(-i (k_deg + w / v_g) z)

with ``w = omega_s - omega_i``.  The ``k_deg`` tilt of the pump cancels the
``k_deg`` in the kernel, so the integral is evaluated on the envelope
``A_p(z) exp(-i k_deg z)`` and never has to resolve the carrier.

All :class:`PhaseMatching` objects are L2-normalized on their grid with the
trapezoid rule, which stands in for the real normalization constant of the
analytic anyonic family.
"""

from dataclasses import dataclass

import numpy as np

from .device import k_deg
from .errors import DomainError, GridError, PreconditionError, SamplingError, WindowError
from .grids import FrequencyGrid

# Largest fraction of phase-matching power allowed outside the frequency window.
MAX_LEAKAGE = 1e-2


def check_alpha(alpha):
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")


@dataclass(frozen=True, eq=False)
class PhaseMatching:
    grid: FrequencyGrid
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.shape != (self.grid.size,):
            raise DomainError(
                f"values have shape {v.shape}, grid has {self.grid.size} samples"
            )
        if not np.all(np.isfinite(v)):
            raise DomainError("phase-matching values must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @classmethod
    def normalized(cls, grid, values):
        values = np.asarray(values, dtype=complex)
        norm2 = grid.integrate(np.abs(values) ** 2)
        if not norm2 > 0:
            raise PreconditionError("phase-matching function vanishes on the grid")
        return cls(grid, values / np.sqrt(norm2))

    @property
    def omega(self):
        return self.grid.omega

    @property
    def modulus(self):
        return np.abs(self.values)

    @property
    def phase(self):
        return np.angle(self.values)

    def norm(self):
        return float(np.sqrt(self.grid.integrate(np.abs(self.values) ** 2)))

    def mirrored(self):
        """``phi(-w)``; requires a symmetric grid."""
        self.grid.require_symmetric("mirroring")
        return PhaseMatching(self.grid, self.values[::-1])


def anyon_pm_values(omega, alpha, beta, swap_sectors=False):
    """Unnormalized ``|w|^alpha exp(i alpha pi/2 sign w) exp(-w^2 / 2 beta^2)``.

    ``sign(0) = 0`` and ``|0|^alpha = 0`` for ``alpha > 0``.
    """
    omega = np.asarray(omega, dtype=float)
    s = np.sign(omega)
    if swap_sectors:
        s = -s
    if alpha == 0:
        mag = np.ones_like(omega)
    else:
        mag = np.abs(omega) ** alpha
    return mag * np.exp(1j * alpha * (np.pi / 2) * s) * np.exp(-(omega**2) / (2 * beta**2))


def analytic_anyon_pm(alpha, beta, grid, swap_sectors=False):
    """Ideal anyonic phase-matching function on ``grid``.

    At ``alpha = 1/2`` this is the two-lobe function with phases +-pi/4.
    ``swap_sectors`` exchanges the roles of the positive and negative
    frequency sectors, giving the mirrored implementation.
    """
    check_alpha(alpha)
    if not beta > 0:
        raise DomainError(f"beta must be > 0, got {beta}")
    return PhaseMatching.normalized(grid, anyon_pm_values(grid.omega, alpha, beta, swap_sectors))


def _trimmed_envelope(pump, half_length):
    """Envelope samples inside [-L/2, L/2] plus interpolated end points.

    Returns ``(z_uniform, env_uniform, ends)`` where the uniform part keeps
    the grid spacing and ``ends`` lists partial end cells as
    ``(z_a, f_a, z_b, f_b)`` trapezoids.
    """
    z = pump.z
    env = pump.envelope
    tol = 1e-9 * pump.grid.step
    inside = np.abs(z) <= half_length + tol
    if not np.any(inside):
        raise PreconditionError("pump grid does not overlap the waveguide")
    zi = z[inside]
    ei = env[inside]
    ends = []
    if z[0] < -half_length - tol:
        f_edge = np.interp(-half_length, z, env.real) + 1j * np.interp(-half_length, z, env.imag)
        if zi[0] > -half_length + tol:
            ends.append((-half_length, f_edge, zi[0], ei[0]))
    if z[-1] > half_length + tol:
        f_edge = np.interp(half_length, z, env.real) + 1j * np.interp(half_length, z, env.imag)
        if zi[-1] < half_length - tol:
            ends.append((zi[-1], ei[-1], half_length, f_edge))
    return zi, ei, ends


def _uniform_weights(n, step):
    w = np.full(n, step)
    if n > 1:
        w[0] = w[-1] = 0.5 * step
    return w


def _sum_direct(z, f, omega, v, chunk=512):
    out = np.empty(omega.size, dtype=complex)
    for i in range(0, omega.size, chunk):
        out[i : i + chunk] = np.exp(-1j * np.outer(omega[i : i + chunk], z) / v) @ f
    return out


def _chirp(theta, k):
    # exp(-i theta k^2 / 2) with the argument reduced before exponentiating
    arg = np.mod(0.5 * theta * (k * k), 2 * np.pi)
    return np.exp(-1j * arg)


def _sum_czt(z, f, omega, v):
    """Bluestein evaluation of ``sum_n f_n exp(-i w_k z_n / v)``.

    Both grids are uniform, so ``w_k z_n`` splits into terms in ``k``, ``n``
    and ``k n``; ``k n = (k^2 + n^2 - (k - n)^2) / 2`` turns the ``k n`` part
    into a convolution done by FFT.
    """
    n_z, n_w = z.size, omega.size
    dz = z[1] - z[0]
    theta = (omega[1] - omega[0]) * dz / v
    n = np.arange(n_z, dtype=float)
    k = np.arange(n_w, dtype=float)
    x = f * np.exp(-1j * omega[0] * n * dz / v) * _chirp(theta, n)
    size = 1 << int(np.ceil(np.log2(n_z + n_w - 1)))
    lags = np.arange(-(n_z - 1), n_w, dtype=float)
    h = np.conj(_chirp(theta, lags))
    conv = np.fft.ifft(np.fft.fft(x, size) * np.fft.fft(h, size))
    # lag k - n sits at index (k - n) + (n_z - 1) of h
    core = conv[n_z - 1 : n_z - 1 + n_w]
    return np.exp(-1j * omega * z[0] / v) * _chirp(theta, k) * core


def phase_matching_integral(pump, params, omega, method="czt"):
    """Unnormalized phase-matching integral of ``pump`` at frequencies ``omega``.

    The pump is truncated to the waveguide, ``|z| <= L/2``, and the integral
    is taken with the trapezoid rule.  ``method="czt"`` evaluates the
    trapezoid sum with a chirp-z transform; ``"direct"`` forms the sum
    explicitly.  The two agree to rounding.
    """
    kd = k_deg(params)
    if pump.carrier_wavenumber and not np.isclose(pump.carrier_wavenumber, kd, rtol=1e-12):
        raise DomainError(
            f"pump carrier {pump.carrier_wavenumber:.6g} rad/m does not match "
            f"k_deg = {kd:.6g} rad/m of the device"
        )
    omega = np.asarray(omega, dtype=float)
    v = params.group_velocity
    zi, ei, ends = _trimmed_envelope(pump, params.waveguide_length / 2)
    f = ei * _uniform_weights(zi.size, pump.grid.step)
    if method == "czt" and zi.size > 1 and omega.size > 1:
        out = _sum_czt(zi, f, omega, v)
    elif method in ("czt", "direct"):
        out = _sum_direct(zi, f, omega, v)
    else:
        raise ValueError(f"unknown method {method!r}")
    for za, fa, zb, fb in ends:
        h = 0.5 * (zb - za)
        out = out + h * (
            fa * np.exp(-1j * omega * za / v) + fb * np.exp(-1j * omega * zb / v)
        )
    return out


def _pump_power(pump, half_length):
    zi, ei, ends = _trimmed_envelope(pump, half_length)
    p = np.sum(np.abs(ei) ** 2 * _uniform_weights(zi.size, pump.grid.step))
    for za, fa, zb, fb in ends:
        p += 0.5 * (zb - za) * (abs(fa) ** 2 + abs(fb) ** 2)
    return p


def pm_from_pump(pump, params, grid, max_leakage=MAX_LEAKAGE, method="czt"):
    """Phase-matching function generated by a pump profile.

    Parameters
    ----------
    pump : PumpProfile
    params : DeviceParams
    grid : FrequencyGrid
        Difference-frequency samples.  Resolve the pump's spectral width
        (``d_omega <= beta / 10`` is a safe rule).
    max_leakage : float
        Largest tolerated fraction of the phase-matching power outside the
        window, measured against the Parseval total ``2 pi v_g int |A_p|^2 dz``.

    Raises
    ------
    SamplingError
        The window reaches beyond half the Nyquist band of the pump grid,
        where the trapezoid sum aliases.
    WindowError
        Too much power falls outside the frequency window.
    """
    v = params.group_velocity
    nyquist = np.pi * v / pump.grid.step
    w_max = np.max(np.abs(grid.omega))
    if w_max > 0.5 * nyquist:
        raise SamplingError(
            f"frequency window {w_max:.3g} rad/s exceeds half the Nyquist band "
            f"{nyquist:.3g} rad/s of the pump grid; refine the spatial grid"
        )
    raw = phase_matching_integral(pump, params, grid.omega, method=method)
    captured = grid.integrate(np.abs(raw) ** 2)
    total = 2 * np.pi * v * _pump_power(pump, params.waveguide_length / 2)
    if not total > 0:
        raise PreconditionError("pump vanishes inside the waveguide")
    leakage = 1.0 - captured / total
    if leakage > max_leakage:
        raise WindowError(
            f"{leakage:.2%} of the phase-matching power lies outside the "
            f"frequency window (limit {max_leakage:.2%}); widen the window"
        )
    return PhaseMatching.normalized(grid, raw)


def _paired(pm, what):
    pm.grid.require_symmetric(what)
    return pm.values, pm.values[::-1]


def exchange_phase_residual(pm, alpha, swap_sectors=False):
    """L2 norm of ``phi(w) - exp(i alpha pi sign w) phi(-w)``.

    Zero iff ``pm`` carries exchange phase ``alpha`` in the sector orientation
    selected by ``swap_sectors``.
    """
    phi, phi_m = _paired(pm, "exchange residual")
    s = np.sign(pm.omega)
    if swap_sectors:
        s = -s
    r = phi - np.exp(1j * alpha * np.pi * s) * phi_m
    return float(np.sqrt(pm.grid.integrate(np.abs(r) ** 2)))


def conjugation_symmetry_residual(pm):
    phi, phi_m = _paired(pm, "conjugation residual")
    r = phi - np.conj(phi_m)
    return float(np.sqrt(pm.grid.integrate(np.abs(r) ** 2)))


def l2_overlap(a, b):
    """``|<a, b>| / (||a|| ||b||)`` for two phase-matching functions on one grid."""
    if not a.grid.same_as(b.grid):
        raise GridError("overlap needs identical frequency grids")
    ip = a.grid.integrate(np.conj(a.values) * b.values)
    return float(abs(ip) / (a.norm() * b.norm()))
