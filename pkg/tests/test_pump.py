import warnings

import numpy as np
import pytest

from anyonspdc import (
    DomainError,
    SamplingError,
    SpatialGrid,
    SupportWarning,
    WindowError,
    custom_pump,
    gaussian_step_pump,
    ideal_anyon_pump,
    k_deg,
)
from anyonspdc.pump import step_factor


@pytest.fixture(scope="module")
def zgrid(device):
    return SpatialGrid.symmetric(3001, device.waveguide_length / 2)


def test_plain_gaussian_is_real(zgrid):
    p = gaussian_step_pump(zgrid, 1e-3)
    assert np.all(p.amplitude.imag == 0)
    assert np.max(p.modulus) == 1.0
    assert np.allclose(p.amplitude, p.amplitude[::-1], atol=0)


def test_experimental_pump_shape(zgrid):
    p = gaussian_step_pump(zgrid, 1e-3, center_shift=-0.4e-3, step_phase=np.pi)
    z = p.z
    assert z[np.argmax(p.modulus)] == pytest.approx(-0.4e-3, abs=zgrid.step)
    left = p.phase[(z < 0) & (z > -1e-4)]
    right = p.phase[(z > 0) & (z < 1e-4)]
    assert np.allclose(left, 0.0)
    assert np.allclose(np.abs(right), np.pi)
    # intensity stays Gaussian across the step
    g = np.exp(-((z + 0.4e-3) ** 2) / 1e-6)
    off = np.abs(z) > zgrid.step / 2
    assert np.allclose(p.modulus[off] ** 2, g[off] / g.max(), rtol=1e-12)


def test_sample_on_step_takes_mean():
    z = np.linspace(-1, 1, 5)
    f = step_factor(z, 0.0, np.pi)
    assert abs(f[2]) < 1e-15
    assert np.allclose(f, [1, 1, 0, -1, -1], atol=1e-15)


def test_waist_convention_gives_beta(device, beta):
    # untruncated Gaussian: phi_PM is exp(-w^2 / 2 beta^2) exactly
    from anyonspdc import FrequencyGrid, pm_from_pump

    waist = 0.1e-3
    b = device.group_velocity / waist
    z = SpatialGrid.symmetric(4001, device.waveguide_length / 2)
    pm = pm_from_pump(gaussian_step_pump(z, waist), device, FrequencyGrid.symmetric(1001, 8 * b))
    target = np.exp(-pm.omega**2 / (2 * b**2))
    target /= np.sqrt(pm.grid.integrate(target**2))
    assert np.max(np.abs(pm.values - target)) < 1e-10 * np.max(target)


@pytest.mark.parametrize(
    "kw", [{"waist": 0.0}, {"waist": -1e-3}, {"waist": 1e-3, "step_position": 2e-3}]
)
def test_gaussian_step_errors(zgrid, kw):
    with pytest.raises(DomainError):
        gaussian_step_pump(zgrid, **kw)


def test_custom_matches_gaussian_step(zgrid):
    ref = gaussian_step_pump(zgrid, 1e-3, center_shift=0.3e-3)
    same = custom_pump(zgrid, np.exp(-((zgrid.z - 0.3e-3) ** 2) / 2e-6), np.zeros(zgrid.size))
    assert np.max(np.abs(same.amplitude - ref.amplitude)) <= 1e-15
    stepped = gaussian_step_pump(zgrid, 1e-3, 0.3e-3, 0.1e-3, 2.0)
    again = custom_pump(zgrid, stepped.modulus, stepped.phase)
    assert np.max(np.abs(again.amplitude - stepped.amplitude)) <= 1e-15


def test_custom_uniform(zgrid):
    p = custom_pump(zgrid, np.ones(zgrid.size), np.zeros(zgrid.size))
    assert np.all(p.amplitude == 1)


@pytest.mark.parametrize(
    "modulus, phase",
    [
        (-np.ones(3001), np.zeros(3001)),
        (np.ones(3000), np.zeros(3001)),
        (np.ones(3001), np.full(3001, np.nan)),
        (np.zeros(3001), np.zeros(3001)),
    ],
)
def test_custom_errors(zgrid, modulus, phase):
    with pytest.raises(DomainError):
        custom_pump(zgrid, modulus, phase)


def test_reflect_and_translate(zgrid):
    p = gaussian_step_pump(zgrid, 0.2e-3, center_shift=0.1e-3)
    assert np.array_equal(p.reflected().amplitude, p.amplitude[::-1])
    t = p.translated(10)
    assert np.array_equal(t.amplitude[10:], p.amplitude[:-10])
    assert np.all(t.amplitude[:10] == 0)


@pytest.fixture(scope="module")
def wide_grid(device, beta):
    # the ideal pump at the experimental beta is wider than the waveguide
    return SpatialGrid.symmetric(4097, 8 * device.group_velocity / beta)


def test_ideal_alpha_zero_is_flat_gaussian(device, beta, wide_grid):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SupportWarning)
        p = ideal_anyon_pump(wide_grid, 0.0, beta, device)
    assert p.carrier_wavenumber == pytest.approx(k_deg(device))
    env = p.envelope
    support = np.abs(env) > 0.01
    assert np.std(np.angle(env[support])) < 1e-6
    waist = device.group_velocity / beta
    g = np.exp(-(p.z**2) / (2 * waist**2))
    assert np.max(np.abs(np.abs(env) - g)) < 1e-9


def test_ideal_half_anyon_two_uneven_lobes(device, beta, wide_grid):
    with pytest.warns(SupportWarning):
        p = ideal_anyon_pump(wide_grid, 0.5, beta, device, carrier=False)
    a = p.amplitude
    # real up to rounding, one sign change between the lobes
    assert np.max(np.abs(a.imag)) < 1e-12
    z = p.z
    big = np.abs(a) > 0.05
    signs = np.sign(a.real[big])
    assert np.count_nonzero(np.diff(signs)) == 1
    neg, pos = np.abs(a[z < 0]).max(), np.abs(a[z > 0]).max()
    assert abs(neg - pos) > 0.1
    zero = z[big][np.flatnonzero(np.diff(signs))[0]]
    assert abs(zero) > wide_grid.step


def test_ideal_errors(device, beta, wide_grid):
    with pytest.raises(SamplingError):
        ideal_anyon_pump(SpatialGrid.symmetric(101, 8e-3), 0.5, beta, device)
    with pytest.raises(SamplingError):
        # dz = 0.8 mm cannot hold the +-8 beta band
        ideal_anyon_pump(SpatialGrid.symmetric(21, 8e-3), 0.5, beta, device, carrier=False)
    with pytest.raises(WindowError):
        ideal_anyon_pump(SpatialGrid.symmetric(3001, 0.5e-3), 0.5, beta, device)
    with pytest.raises(DomainError):
        ideal_anyon_pump(wide_grid, 1.5, beta, device)


def test_narrow_ideal_pump_fits_without_warning(device):
    b = 50 * device.group_velocity / device.waveguide_length
    z = SpatialGrid.symmetric(8001, device.waveguide_length / 2)
    with warnings.catch_warnings():
        warnings.simplefilter("error", SupportWarning)
        ideal_anyon_pump(z, 0.0, b, device)
