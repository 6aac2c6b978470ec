"""Acceptance criteria of the package, one test each.

Every test records a PASS/FAIL line in ``RESULTS``; the conftest prints them
after the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from anyonspdc import (
    DelayGrid,
    ExchangePhaseFunction,
    FrequencyGrid,
    JointSpectralAmplitude,
    PumpSpectrum,
    SpatialGrid,
    analytic_anyon_pm,
    anyon_to_boson_map,
    beta_from_waist,
    build_jsa,
    estimate_alpha,
    hom_curve_1d,
    hom_curve_2d_anyons,
    hom_curve_2d_bosons,
    ideal_anyon_pump,
    l2_overlap,
    pm_from_pump,
    point_symmetry_residual,
    zero_delay_probability,
)
from anyonspdc import pipeline as pl
from anyonspdc.analysis import two_lobe_metrics, zero_delay_value
from anyonspdc.config import load_config, resolve_config
from anyonspdc.device import REFERENCE_DEVICE

RESULTS = {}
TITLES = {
    1: "zero-delay law",
    2: "alpha=1/2 signature",
    3: "boson/fermion limits",
    4: "round-trip Fourier consistency",
    5: "anyon/boson equivalence",
    6: "narrow-pump reduction",
    7: "mirror symmetry",
    8: "phase-only pump fidelity",
    9: "JSI shape",
    10: "determinism",
}

DEVICE = REFERENCE_DEVICE
BETA = beta_from_waist(DEVICE, 1e-3)


def record(n, passed, detail):
    RESULTS[n] = (bool(passed), detail)
    assert passed, f"criterion {n} ({TITLES[n]}): {detail}"


def summary_lines():
    out = []
    for n in sorted(RESULTS):
        passed, detail = RESULTS[n]
        out.append(f"{'PASS' if passed else 'FAIL'}  [{n:2d}] {TITLES[n]}: {detail}")
    return out


def _analytic(alpha, n=4001, width=40):
    return analytic_anyon_pm(alpha, BETA, FrequencyGrid.symmetric(n, width * BETA))


def _delays():
    return DelayGrid.symmetric(201, 20 / BETA)


def test_1_zero_delay_law():
    worst = 0.0
    for alpha in np.round(np.arange(11) * 0.1, 12):
        p0 = zero_delay_value(hom_curve_1d(_analytic(alpha), _delays()))
        worst = max(worst, abs(p0 - zero_delay_probability(alpha)))
    record(1, worst < 1e-8, f"max |P(0) - (1 - cos(alpha pi))/2| = {worst:.2e} (< 1e-8)")


def test_2_half_anyon_signature():
    curve = hom_curve_1d(_analytic(0.5), _delays())
    tau, p = curve.tau, curve.probabilities
    p0 = zero_delay_value(curve)
    # dip on one delay sign, peak on the other
    side = np.abs(tau) < 3 / BETA
    neg = p[(tau < 0) & side]
    pos = p[(tau > 0) & side]
    one_sided = (neg.min() > 0.5 and pos.max() < 0.5) or (neg.max() < 0.5 and pos.min() > 0.5)
    sym = point_symmetry_residual(curve)
    ok = abs(p0 - 0.5) < 1e-8 and one_sided and sym < 1e-8
    record(
        2,
        ok,
        f"P(0) - 1/2 = {p0 - 0.5:.1e}, peak tau<0 max {neg.max():.3f}, "
        f"dip tau>0 min {pos.min():.3f}, point-symmetry {sym:.1e}",
    )


def test_3_boson_fermion_limits():
    p_boson = zero_delay_value(hom_curve_1d(_analytic(0.0), _delays()))
    p_fermion = zero_delay_value(hom_curve_1d(_analytic(1.0), _delays()))
    record(
        3,
        p_boson < 1e-8 and p_fermion > 1 - 1e-8,
        f"Gaussian P(0) = {p_boson:.1e}, antisymmetric 1 - P(0) = {1 - p_fermion:.1e}",
    )


def test_4_round_trip():
    # The transform pair is only a pair once the designed pump fits inside
    # the waveguide: here the pump scale v/beta is L/2 / 5000.  alpha = 1/4
    # is left out, its |z|^-1.25 tails converge too slowly for 1e-6.
    beta = 5000 * DEVICE.group_velocity / (DEVICE.waveguide_length / 2)
    z = SpatialGrid.symmetric(66667, DEVICE.waveguide_length / 2)
    omega = FrequencyGrid.symmetric(2001, 8 * beta)
    losses = {}
    for alpha in (0.0, 0.5, 0.75, 1.0):
        pump = ideal_anyon_pump(z, alpha, beta, DEVICE, padding=8)
        pm = pm_from_pump(pump, DEVICE, omega)
        losses[alpha] = 1 - l2_overlap(pm, analytic_anyon_pm(alpha, beta, omega))
    worst = max(losses.values())
    detail = ", ".join(f"a={a:g}: {v:.1e}" for a, v in losses.items())
    record(4, worst <= 1e-6, f"1 - overlap {detail} (<= 1e-6)")


def test_5_equivalence():
    axis = FrequencyGrid.symmetric(256, 8 * BETA)
    d = axis.omega
    gauss = np.exp(-(d[:, None] ** 2 + d[None, :] ** 2) / (2 * BETA**2))
    phi_a = JointSpectralAmplitude.normalized(axis, gauss)
    worst = 0.0
    for alpha in (0.25, 0.5, 0.75):
        a = ExchangePhaseFunction(alpha)
        pa = hom_curve_2d_anyons(phi_a, a, _delays()).probabilities
        pb = hom_curve_2d_bosons(anyon_to_boson_map(phi_a, a), _delays()).probabilities
        worst = max(worst, np.max(np.abs(pa - pb)))
    record(5, worst < 1e-10, f"max |P_A - P_B| = {worst:.1e} on 256^2 (< 1e-10)")


def test_6_reduction():
    pm = analytic_anyon_pm(0.5, BETA, FrequencyGrid.symmetric(8001, 20 * BETA))
    spectrum = PumpSpectrum(DEVICE.pump_omega, 0.01 * BETA)
    jsa = build_jsa(spectrum, pm, FrequencyGrid.symmetric(513, 6 * BETA))
    d = _delays()
    err = np.max(np.abs(hom_curve_2d_bosons(jsa, d).probabilities - hom_curve_1d(pm, d).probabilities))
    record(6, err < 1e-3, f"sigma = 0.01 beta, sup |P_2d - P_1d| = {err:.1e} (< 1e-3)")


@pytest.fixture(scope="module")
def experiment_runs():
    return {
        side: pl.run(load_config(resolve_config(f"paper_alpha_half_{side}")))
        for side in ("left", "right")
    }


def test_7_mirror(experiment_runs):
    p_minus = experiment_runs["left"].hom.probabilities
    p_plus = experiment_runs["right"].hom.probabilities
    err = np.max(np.abs(p_plus - p_minus[::-1]))
    record(7, err < 1e-8, f"max |P+(tau) - P-(-tau)| = {err:.1e} (< 1e-8)")


def test_8_phase_only_fidelity(experiment_runs):
    # Expected to fail.  For any real pump g(z - s) sign(z) the exchange
    # overlap int phi(w) phi*(-w) = 2 pi v int a(z) a(-z) dz is negative,
    # so P(0) > 1/2 and alpha_hat > 1/2 for every shift s.  The measured
    # alpha_hat sits near 1; see README "Known limitations".
    res = experiment_runs["left"]
    alpha_hat = res.report.estimated_alpha
    left, right, center = two_lobe_metrics(res.pm.omega, res.pm.modulus)
    two_lobe = min(left, right) > center
    record(
        8,
        abs(alpha_hat - 0.5) <= 0.05 and two_lobe,
        f"alpha_hat = {alpha_hat:.4f} (target 0.5 +- 0.05), P(0) = "
        f"{res.report.zero_delay_P:.4f}, |phi_PM| two-lobe = {two_lobe} "
        f"(center/peak {center / max(left, right):.3f})",
    )


def test_9_jsi_shape(experiment_runs):
    res = experiment_runs["left"]
    left, right, center = pl.antidiagonal_lobes(res.jsa)
    ratio = min(left, right) / max(left, right)
    bimodal = min(left, right) > center
    sym = res.extra["jsi_symmetry_residual"]
    record(
        9,
        bimodal and abs(1 - ratio) <= 0.1 and sym < 1e-10,
        f"lobe ratio {ratio:.6f}, center/lobe {center / max(left, right):.3f}, "
        f"JSI transpose residual {sym:.1e}",
    )


def test_10_determinism(tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"run{k}"
        subprocess.run(
            [sys.executable, "-m", "anyonspdc.cli", "run", "paper_alpha_half_left", "-o", str(out)],
            check=True,
            capture_output=True,
        )
        outs.append(out)
    names = sorted(p.name for p in outs[0].iterdir())
    same = names == sorted(p.name for p in outs[1].iterdir()) and all(
        (outs[0] / n).read_bytes() == (outs[1] / n).read_bytes() for n in names
    )
    record(10, same and len(names) == 6, f"{len(names)} files byte-identical across two runs: {same}")


if __name__ == "__main__":
    sys.exit(pytest.main([str(Path(__file__)), "-q", "-p", "no:cacheprovider"]))
