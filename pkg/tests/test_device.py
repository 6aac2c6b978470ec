import numpy as np
import pytest
from scipy.constants import c

from anyonspdc import DeviceParams, DomainError, beta_from_waist, k_deg, pump_bandwidth


def test_defaults_are_the_experimental_device():
    p = DeviceParams()
    assert p.waveguide_length == 1.9e-3
    assert p.pump_wavelength == 773e-9
    assert p.group_index == pytest.approx(3.5)
    assert np.rad2deg(p.incidence_angle) == pytest.approx(0.5)


def test_k_deg_examples():
    assert k_deg(DeviceParams.from_degrees(0.0)) == 0.0
    p = DeviceParams()
    hand = 2 * np.pi / 773e-9 * np.sin(np.deg2rad(0.5))
    assert k_deg(p) == pytest.approx(hand, rel=1e-14)
    assert k_deg(p) == pytest.approx(7.09e4, rel=2e-3)
    right = DeviceParams(incidence_angle=np.pi / 2)
    assert k_deg(right) == pytest.approx(2 * np.pi / 773e-9, rel=1e-14)


def test_k_deg_monotone_in_angle():
    ks = [k_deg(DeviceParams(incidence_angle=t)) for t in np.linspace(0, np.pi / 2, 50)]
    assert np.all(np.diff(ks) > 0)


def test_beta_examples():
    unit = DeviceParams(group_velocity=1.0)
    assert beta_from_waist(unit, 1.0) == 1.0
    p = DeviceParams()
    assert beta_from_waist(p, 1e-3) == pytest.approx(c / 3.5e-3, rel=1e-14)
    assert beta_from_waist(p, 2e-3) == pytest.approx(beta_from_waist(p, 1e-3) / 2)
    fast = DeviceParams(group_velocity=2 * p.group_velocity)
    assert beta_from_waist(fast, 1e-3) == pytest.approx(2 * beta_from_waist(p, 1e-3))


@pytest.mark.parametrize("waist", [0.0, -1e-3])
def test_beta_rejects_bad_waist(waist):
    with pytest.raises(DomainError):
        beta_from_waist(DeviceParams(), waist)


@pytest.mark.parametrize(
    "kw",
    [
        {"waveguide_length": 0.0},
        {"group_velocity": 0.0},
        {"group_velocity": c},
        {"incidence_angle": -0.1},
        {"incidence_angle": 2.0},
        {"pump_pulse_duration": 0.0},
    ],
)
def test_invalid_params(kw):
    with pytest.raises(DomainError):
        DeviceParams(**kw)


def test_pump_bandwidth_is_transform_limited():
    p = DeviceParams()
    sigma_t = 4.5e-12 / (2 * np.sqrt(2 * np.log(2)))
    assert pump_bandwidth(p) * sigma_t == pytest.approx(0.5)
