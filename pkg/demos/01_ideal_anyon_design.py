"""Design a pump that makes the photon pair behave as alpha = 1/2 anyons.

Walks through the forward chain for the ideal design: pick a target
phase-matching function, invert it to a pump, push the pump back through
the waveguide and interfere the pair on a beam splitter.

Run with ``python3 demos/01_ideal_anyon_design.py``.
"""

import numpy as np

from anyonspdc import (
    DelayGrid,
    FrequencyGrid,
    SpatialGrid,
    analytic_anyon_pm,
    hom_curve_1d,
    ideal_anyon_pump,
    l2_overlap,
    pm_from_pump,
    zero_delay_probability,
)
from anyonspdc.analysis import zero_delay_value
from anyonspdc.device import REFERENCE_DEVICE

ALPHA = 0.5
dev = REFERENCE_DEVICE
L = dev.waveguide_length
v = dev.group_velocity

# Keep the designed pump well inside the waveguide; with a 1 mm scale the
# power-law tails of the alpha = 1/2 pump would spill past the ends.
beta = 400 * v / (L / 2)
print(f"waveguide length {L * 1e3:.2f} mm, v_g = {v:.4e} m/s")
print(f"target width beta = {beta:.3e} rad/s, pump scale v/beta = {v / beta * 1e6:.2f} um")

z = SpatialGrid.symmetric(20001, L / 2)
omega = FrequencyGrid.symmetric(2001, 8 * beta)
pump = ideal_anyon_pump(z, ALPHA, beta, dev, padding=8)
a = np.abs(pump.amplitude)
print(f"\npump |a(z)| peaks at z = {z.z[np.argmax(a)] * 1e6:+.2f} um")
for zz in (-20e-6, -5e-6, 0.0, 5e-6, 20e-6):
    i = np.argmin(np.abs(z.z - zz))
    print(f"  z = {zz * 1e6:+6.1f} um   |a| = {a[i]:.4f}")

pm = pm_from_pump(pump, dev, omega)
target = analytic_anyon_pm(ALPHA, beta, omega)
print(f"\nrealized vs target phase matching: overlap = {l2_overlap(pm, target):.8f}")

delays = DelayGrid.symmetric(161, 8 / beta)
curve = hom_curve_1d(pm, delays)
print(f"P(0) = {zero_delay_value(curve):.6f}  (closed form {zero_delay_probability(ALPHA):.6f})")
print("\n tau*beta   P(tau)")
for k in range(0, delays.size, 16):
    t, p = curve.tau[k], curve.probabilities[k]
    bar = "#" * int(round(40 * p))
    print(f"  {t * beta:+6.2f}   {p:.4f}  {bar}")
print("\nA peak on one side of zero delay and a dip on the other: half boson, half fermion.")
