"""Plot-ready data files.

CSV files are comma separated with a header row and 17 significant digits
(``%.16e``), which round-trips doubles exactly.  Writers take explicit
paths and never embed timestamps, so repeated runs give identical bytes.
"""

import csv
import json
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .grids import SpatialGrid
from .pump import PumpProfile

FLOAT_FMT = "%.16e"

PUMP_COLUMNS = ("z_m", "re", "im")
PM_COLUMNS = ("omega_minus_rad_s", "re", "im", "modulus", "phase_rad")
JSI_COLUMNS = ("omega_s", "omega_i", "intensity")
JSA_COLUMNS = ("omega_s", "omega_i", "re", "im")
HOM_COLUMNS = ("tau_s", "probability")


def _write_csv(path, columns, data):
    data = np.column_stack([np.asarray(c, dtype=float) for c in data])
    with open(path, "w", newline="") as fh:
        np.savetxt(fh, data, fmt=FLOAT_FMT, delimiter=",", header=",".join(columns), comments="")


def write_pump_csv(path, pump):
    a = pump.amplitude
    _write_csv(path, PUMP_COLUMNS, [pump.z, a.real, a.imag])


def read_pump_csv(path, carrier_wavenumber=0.0):
    """Load a pump written by :func:`write_pump_csv` (or by hand).

    The z column must be uniform; amplitudes are taken as given, without
    renormalization.
    """
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise ConfigError(f"cannot read pump file: {exc.strerror}", path=path) from None
    if not rows or tuple(c.strip() for c in rows[0]) != PUMP_COLUMNS:
        raise ConfigError(f"header must be {','.join(PUMP_COLUMNS)}", line=1, path=path)
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            values.append([float(x) for x in row])
        except ValueError:
            raise ConfigError("non-numeric entry", line=lineno, path=path) from None
        if len(values[-1]) != 3:
            raise ConfigError("expected 3 columns", line=lineno, path=path)
    arr = np.array(values)
    if arr.shape[0] < 2:
        raise ConfigError("pump file needs at least 2 samples", path=path)
    grid = SpatialGrid(arr[:, 0])
    return PumpProfile(grid, arr[:, 1] + 1j * arr[:, 2], carrier_wavenumber)


def write_pm_csv(path, pm):
    v = pm.values
    _write_csv(path, PM_COLUMNS, [pm.omega, v.real, v.imag, np.abs(v), np.angle(v)])


def write_jsa_json(path, jsa):
    """Detuning axis, degenerate frequency and row-major ``[re, im]`` pairs.

    Rows index the signal detuning, columns the idler detuning.
    """
    doc = {
        "axis_detuning_rad_s": [float(x) for x in jsa.axis.omega],
        "center_rad_s": float(jsa.center),
        "values_re_im": [[[float(z.real), float(z.imag)] for z in row] for row in jsa.values],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, separators=(",", ":"))
        fh.write("\n")


def _axes(jsa):
    d = jsa.axis.omega
    ws, wi = np.meshgrid(d, d, indexing="ij")
    return ws.ravel(), wi.ravel()


def write_jsi_csv(path, jsa):
    """Long-format JSI.  Frequencies are detunings from ``omega_p / 2`` [rad/s]."""
    _write_csv(path, JSI_COLUMNS, [*_axes(jsa), (np.abs(jsa.values) ** 2).ravel()])


def write_jsa_csv(path, jsa):
    """Long-format JSA with detuning axes, as :func:`write_jsi_csv`."""
    v = jsa.values.ravel()
    _write_csv(path, JSA_COLUMNS, [*_axes(jsa), v.real, v.imag])


def write_hom_csv(path, curve, beta=None):
    """``tau_s, probability`` and, if ``beta`` is given, ``tau_beta = tau * beta``."""
    cols, data = list(HOM_COLUMNS), [curve.tau, curve.probabilities]
    if beta is not None:
        cols.append("tau_beta")
        data.append(curve.tau * beta)
    _write_csv(path, cols, data)


def write_report_json(path, report, extra=None):
    """Report fields, plus an optional ``extra`` block kept under its own key."""
    doc = report.to_dict()
    if extra:
        doc = {**doc, "extra": {k: float(v) for k, v in extra.items()}}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
