"""Diagnostics on phase-matching functions and HOM curves."""

import json
from dataclasses import asdict, dataclass, fields

import numpy as np

from .errors import DomainError, GridError, IllPosedError
from .phase_matching import conjugation_symmetry_residual, exchange_phase_residual

# Smallest L2 mass fraction a frequency sector may carry for alpha to be defined.
MIN_SECTOR_MASS = 1e-6


@dataclass(frozen=True)
class StatisticsReport:
    estimated_alpha: float
    zero_delay_P: float
    point_symmetry_residual: float
    exchange_residual: float
    conjugation_residual: float
    overlap_vs_reference: float

    def __post_init__(self):
        for name in ("point_symmetry_residual", "exchange_residual", "conjugation_residual"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")
        if not 0.0 <= self.overlap_vs_reference <= 1.0:
            raise DomainError("overlap_vs_reference must lie in [0, 1]")

    def to_dict(self):
        return {k: float(v) for k, v in asdict(self).items()}

    def to_json(self):
        # repr() of a float round-trips exactly, so the file is reproducible
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        names = [f.name for f in fields(cls)]
        missing = set(names) - set(data)
        if missing:
            raise DomainError(f"report is missing fields {sorted(missing)}")
        return cls(**{k: float(data[k]) for k in names})


def _exchange_moment(pm):
    """``sum_{w>0} weight * phi(w) conj(phi(-w))`` and the two sector masses."""
    pm.grid.require_symmetric("alpha estimation")
    phi = pm.values
    w = pm.grid.weights()
    pos = pm.omega > 0
    moment = np.sum((w * phi * np.conj(phi[::-1]))[pos])
    mass = np.abs(phi) ** 2 * w
    total = mass.sum()
    return moment, mass[pos].sum() / total, mass[pm.omega < 0].sum() / total


def exchange_orientation(pm):
    """``+1`` if the anyonic phase sits on the positive-frequency sector
    (as in :func:`~anyonspdc.phase_matching.analytic_anyon_pm`), ``-1`` for
    the mirrored assignment."""
    moment, _, _ = _exchange_moment(pm)
    return 1 if np.angle(moment) >= 0 else -1


def estimate_alpha(pm, swap_sectors=None):
    """Exchange parameter of a phase-matching function.

    Circular mean of the phase of ``phi(w) conj(phi(-w))`` over ``w > 0``,
    weighted by its modulus, divided by pi.  For a function that satisfies
    ``phi(w) = exp(i alpha pi sign w) phi(-w)`` this is exactly ``alpha``.

    Parameters
    ----------
    pm : PhaseMatching
        On a grid symmetric about zero.
    swap_sectors : bool or None
        Sector orientation, as in
        :func:`~anyonspdc.phase_matching.exchange_phase_residual`.  ``None``
        accepts either orientation and returns ``|arg| / pi``.

    Returns
    -------
    float
        Estimate in ``[0, 1]``.

    Raises
    ------
    IllPosedError
        Either sector carries less than ``MIN_SECTOR_MASS`` of the L2 mass.
    """
    moment, m_pos, m_neg = _exchange_moment(pm)
    if min(m_pos, m_neg) < MIN_SECTOR_MASS:
        raise IllPosedError(
            f"sector masses {m_pos:.3g} / {m_neg:.3g}; alpha needs weight on both signs of omega"
        )
    phase = np.angle(moment) / np.pi
    if swap_sectors is None:
        phase = abs(phase)
    elif swap_sectors:
        phase = -phase
    return float(np.clip(phase, 0.0, 1.0))


def zero_delay_probability(alpha):
    """``(1 - cos(alpha pi)) / 2``."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return 0.5 * (1.0 - np.cos(alpha * np.pi))


def _same_delays(a, b):
    if not a.delays.same_as(b.delays):
        raise GridError("curves must share one delay grid")


def curve_overlap(a, b):
    """Normalized L1 similarity ``1 - int|a - b| / int(a + b)``."""
    _same_delays(a, b)
    g = a.delays
    den = g.integrate(a.probabilities + b.probabilities)
    if not den > 0:
        return 1.0
    diff = g.integrate(np.abs(a.probabilities - b.probabilities))
    return float(np.clip(1.0 - diff / den, 0.0, 1.0))


def curve_correlation(a, b):
    """Normalized cross-correlation ``<a, b> / (||a|| ||b||)``."""
    _same_delays(a, b)
    g = a.delays
    pa, pb = a.probabilities, b.probabilities
    den = np.sqrt(g.integrate(pa * pa) * g.integrate(pb * pb))
    return float(g.integrate(pa * pb) / den) if den > 0 else 0.0


def point_symmetry_residual(curve):
    """``max |P(tau) + P(-tau) - 1|`` over paired delays."""
    curve.delays.require_symmetric("point symmetry")
    p = curve.probabilities
    return float(np.max(np.abs(p + p[::-1] - 1.0)))


def zero_delay_value(curve):
    """P at ``tau = 0``, linearly interpolated if no sample sits there."""
    return float(np.interp(0.0, curve.tau, curve.probabilities))


def two_lobe_metrics(omega, profile):
    """Peak heights of ``profile`` on either side of zero.

    Returns ``(left_peak, right_peak, center_value)`` where the center value is
    the profile at the sample nearest zero.  A profile is bimodal when both
    peaks exceed the center.
    """
    omega = np.asarray(omega)
    profile = np.asarray(profile)
    left = profile[omega < 0]
    right = profile[omega > 0]
    if left.size == 0 or right.size == 0:
        raise GridError("two-lobe metrics need samples on both sides of zero")
    center = profile[np.argmin(np.abs(omega))]
    return float(left.max()), float(right.max()), float(center)


def build_report(pm, curve, reference_curve, reference_alpha=0.5, swap_sectors=None):
    """Collect the diagnostics of one simulated configuration.

    The exchange residual is evaluated at ``reference_alpha`` in the sector
    orientation detected from ``pm`` unless ``swap_sectors`` is given.
    """
    if swap_sectors is None:
        swap_sectors = exchange_orientation(pm) < 0
    return StatisticsReport(
        estimated_alpha=estimate_alpha(pm, swap_sectors=None),
        zero_delay_P=zero_delay_value(curve),
        point_symmetry_residual=point_symmetry_residual(curve),
        exchange_residual=exchange_phase_residual(pm, reference_alpha, swap_sectors),
        conjugation_residual=conjugation_symmetry_residual(pm),
        overlap_vs_reference=curve_overlap(curve, reference_curve),
    )
