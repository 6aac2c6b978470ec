"""Hong-Ou-Mandel coincidence probability.

Delay sign convention: every curve here uses the kernel
``exp(-i (omega_s - omega_i) tau)``.  The two-dimensional boson/anyon
formulas are often written with ``exp(+i (omega_s - omega_i) tau)`` (signal
delayed by ``tau``); that form is this one evaluated at ``-tau``.  With the
sector convention of :func:`~anyonspdc.phase_matching.analytic_anyon_pm`,
the ideal ``alpha = 1/2`` curve has its peak at negative and its dip at
positive delay.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ClampWarning, GridError, NumericalQualityError, PreconditionError
from .grids import DelayGrid
from .jsa import JointSpectralAmplitude, symmetry_residual

CLAMP_SLACK = 1e-9
SYMMETRY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class HomCurve:
    delays: DelayGrid
    probabilities: np.ndarray

    def __post_init__(self):
        p = np.array(self.probabilities, dtype=float)
        if p.shape != (self.delays.size,):
            raise GridError(
                f"probabilities have shape {p.shape}, delay grid has {self.delays.size}"
            )
        p.flags.writeable = False
        object.__setattr__(self, "probabilities", p)

    @property
    def tau(self):
        return self.delays.tau

    def tail_mean(self, tau_min):
        """Mean probability over ``|tau| > tau_min`` (NaN if no samples)."""
        sel = np.abs(self.tau) > tau_min
        return float(np.mean(self.probabilities[sel])) if sel.any() else float("nan")


def _finalize(delays, p):
    p = np.asarray(p, dtype=float)
    low, high = p < 0, p > 1
    if np.any(p < -CLAMP_SLACK) or np.any(p > 1 + CLAMP_SLACK):
        worst = max(-p.min(), p.max() - 1)
        raise NumericalQualityError(
            f"coincidence probability leaves [0, 1] by {worst:.3g}; "
            "the quadrature is not resolving the integrand"
        )
    if low.any() or high.any():
        warnings.warn(
            f"clamped {int(low.sum() + high.sum())} probabilities into [0, 1]",
            ClampWarning,
            stacklevel=3,
        )
        p = np.clip(p, 0.0, 1.0)
    return HomCurve(delays, p)


def _transform(x, weights, overlap, tau):
    """``Re sum_k weights_k overlap_k exp(-i x_k tau)`` for every tau."""
    kernel = np.exp(-1j * np.outer(tau, x))
    return (kernel @ (weights * overlap)).real


def hom_curve_1d(pm, delays):
    """HOM curve of a factorized biphoton from its phase-matching function.

    ``P(tau) = (1 - Re[int phi(w) phi*(-w) exp(-i w tau)] / int |phi|^2) / 2``,
    by trapezoid quadrature on the phase-matching grid.
    """
    pm.grid.require_symmetric("HOM interference")
    phi = pm.values
    w = pm.grid.weights()
    overlap = phi * np.conj(phi[::-1])
    norm = np.sum(w * np.abs(phi) ** 2)
    num = _transform(pm.omega, w, overlap, delays.tau)
    return _finalize(delays, 0.5 * (1.0 - num / norm))


def _diagonal_sums(jsa, integrand):
    # Collapse W * integrand onto omega_s - omega_i = m * d_omega.  Exact
    # regrouping of the nested trapezoid sum on a uniform square grid.
    n = jsa.axis.size
    idx = np.subtract.outer(np.arange(n), np.arange(n)) + (n - 1)
    g = (jsa.weights2d() * integrand).ravel()
    re = np.bincount(idx.ravel(), weights=g.real, minlength=2 * n - 1)
    im = np.bincount(idx.ravel(), weights=g.imag, minlength=2 * n - 1)
    return np.arange(-(n - 1), n) * jsa.axis.step, re + 1j * im


def _two_photon_curve(jsa, integrand, delays):
    x, h = _diagonal_sums(jsa, integrand)
    norm = np.sum(jsa.weights2d() * np.abs(jsa.values) ** 2)
    num = _transform(x, np.ones_like(x), h, delays.tau)
    return _finalize(delays, 0.5 * (1.0 - num / norm))


def hom_curve_2d_bosons(jsa, delays):
    """HOM curve of bosons with joint spectrum ``jsa``.

    ``P_B(tau) = (1 - Re iint phi(s,i) phi*(i,s) exp(-i (s - i) tau)) / 2``.
    """
    if not isinstance(jsa, JointSpectralAmplitude):
        raise GridError("hom_curve_2d_bosons needs a square JointSpectralAmplitude")
    integrand = jsa.values * np.conj(jsa.values.T)
    return _two_photon_curve(jsa, integrand, delays)


@dataclass(frozen=True)
class ExchangePhaseFunction:
    """Unimodular commutation phase ``A(s, i) = exp(i alpha pi sign(s - i))``.

    ``A(i, s) = conj(A(s, i))``.  With this normalization of ``alpha`` the
    boson-equivalent spectrum ``sqrt(A) phi_A`` has exchange phase
    ``exp(i alpha pi)``, matching the phase-matching functions.
    """

    alpha: float
    swap_sectors: bool = False

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise PreconditionError(f"alpha must lie in [0, 1], got {self.alpha}")

    def _sign(self, omega_s, omega_i):
        s = np.sign(np.subtract.outer(omega_s, omega_i))
        return -s if self.swap_sectors else s

    def __call__(self, omega_s, omega_i):
        return np.exp(1j * self.alpha * np.pi * self._sign(omega_s, omega_i))

    def sqrt(self, omega_s, omega_i):
        """Principal square root of ``A``."""
        return np.exp(0.5j * self.alpha * np.pi * self._sign(omega_s, omega_i))


def _require_symmetric(jsa):
    r = symmetry_residual(jsa)
    if r > SYMMETRY_TOL:
        raise PreconditionError(
            f"anyonic spectrum must be exchange symmetric; residual {r:.3g} > {SYMMETRY_TOL}"
        )


def hom_curve_2d_anyons(jsa_symmetric, exchange, delays):
    """HOM curve of anyons with symmetric spectrum and commutation phase ``A``.

    ``P_A = (1 - Re iint phi(s,i) phi*(i,s) A*(i,s) exp(-i (s - i) tau)) / 2``.
    """
    _require_symmetric(jsa_symmetric)
    d = jsa_symmetric.axis.omega
    phi = jsa_symmetric.values
    a_is = exchange(d, d).T  # A(omega_i, omega_s) laid out on the (s, i) grid
    integrand = phi * np.conj(phi.T) * np.conj(a_is)
    return _two_photon_curve(jsa_symmetric, integrand, delays)


def anyon_to_boson_map(jsa_symmetric, exchange):
    """Boson spectrum ``sqrt(A) phi_A`` that reproduces the anyonic HOM curve."""
    _require_symmetric(jsa_symmetric)
    d = jsa_symmetric.axis.omega
    return JointSpectralAmplitude(
        jsa_symmetric.axis,
        exchange.sqrt(d, d) * jsa_symmetric.values,
        jsa_symmetric.center,
    )
