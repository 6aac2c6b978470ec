"""Experiment configuration files.

A config is an INI file with ``key = value`` lines.  Every dimensional value
carries an explicit unit, e.g. ``waist = 1.0 mm`` or ``step_phase = 180 deg``.
Frequency windows may be given in units of ``beta``, the phase-matching
width of the configured pump.  Example::

    [device]
    length = 1.9 mm
    group_index = 3.5
    pump_wavelength = 773 nm
    incidence_angle = 0.5 deg
    pulse_duration = 4.5 ps

    [pump]
    kind = gaussian_step
    waist = 1.0 mm
    center_shift = -0.4 mm
    step_position = 0 mm
    step_phase = 180 deg

    [grids]
    frequency_half_width = 200 beta

Sections and keys not listed in ``SCHEMA`` are rejected, so typos surface
as errors with their line number instead of being ignored.
"""

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .device import DeviceParams, beta_from_waist
from .errors import ConfigError, DomainError

UNITS = {
    "length": {"m": 1.0, "mm": 1e-3, "um": 1e-6, "nm": 1e-9},
    "time": {"s": 1.0, "ps": 1e-12, "fs": 1e-15},
    "angle": {"rad": 1.0, "deg": np.pi / 180},
    "velocity": {"m/s": 1.0},
    "angular_frequency": {"rad/s": 1.0},
}

PUMP_KINDS = ("gaussian_step", "ideal_anyon", "custom")
PRODUCTS = ("pump", "pm", "jsa", "jsi", "hom", "report")

SCHEMA = {
    "device": {
        "length", "group_index", "group_velocity", "pump_wavelength",
        "incidence_angle", "pulse_duration",
    },
    "pump": {
        "kind", "waist", "center_shift", "step_position", "step_phase",
        "alpha", "beta", "swap_sectors", "padding", "file",
    },
    "grids": {
        "spatial_points", "spatial_half_width", "frequency_points",
        "frequency_half_width", "delay_points", "delay_half_width",
        "jsa_points", "jsa_half_width",
    },
    "jsa": {"pump_bandwidth"},
    "hom": {"formula"},
    "analysis": {"reference_alpha"},
    "output": {"directory", "formats"},
}


@dataclass(frozen=True)
class PumpSpec:
    kind: str
    waist: float | None = None
    center_shift: float = 0.0
    step_position: float = 0.0
    step_phase: float = 0.0
    alpha: float | None = None
    beta: float | None = None
    swap_sectors: bool = False
    padding: int = 8
    file: Path | None = None


@dataclass(frozen=True)
class GridSpec:
    spatial_points: int = 3001
    spatial_half_width: float | None = None  # None: L/2
    frequency_points: int = 8001
    frequency_half_width: float = 0.0
    delay_points: int = 201
    delay_half_width: float = 100e-12
    jsa_points: int = 512
    jsa_half_width: float = 0.0


@dataclass(frozen=True)
class ExperimentConfig:
    device: DeviceParams
    pump: PumpSpec
    grids: GridSpec
    beta: float
    pump_bandwidth: float | None = None  # None: from the pulse duration
    hom_formula: str = "1d"
    reference_alpha: float = 0.5
    output_directory: Path | None = None
    formats: tuple = PRODUCTS
    source: Path | None = field(default=None, compare=False)


def _line_index(text):
    """Map ``(section, key)`` and ``(section, None)`` to 1-based line numbers."""
    index, section = {}, None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#;":
            continue
        m = re.match(r"\[([^\]]+)\]", line)
        if m:
            section = m.group(1).strip()
            index.setdefault((section, None), lineno)
            continue
        m = re.match(r"([^=:]+?)\s*[=:]", line)
        if m and section is not None:
            index.setdefault((section, m.group(1).strip().lower()), lineno)
    return index


class _Reader:
    def __init__(self, parser, lines, path):
        self.p = parser
        self.lines = lines
        self.path = path

    def error(self, msg, section, key=None):
        line = self.lines.get((section, key), self.lines.get((section, None)))
        return ConfigError(msg, line=line, path=self.path)

    def raw(self, section, key):
        if self.p.has_option(section, key):
            return self.p.get(section, key).strip()
        return None

    def quantity(self, section, key, kind, default=None, beta=None):
        raw = self.raw(section, key)
        if raw is None:
            return default
        parts = raw.split()
        if len(parts) != 2:
            raise self.error(f"{key} = {raw!r}: expected '<number> <unit>'", section, key)
        num, unit = parts
        try:
            x = float(num)
        except ValueError:
            raise self.error(f"{key}: {num!r} is not a number", section, key) from None
        if unit == "beta" and kind == "angular_frequency":
            if beta is None:
                raise self.error(
                    f"{key}: unit 'beta' needs a pump waist or beta", section, key
                )
            return x * beta
        table = UNITS[kind]
        if unit not in table:
            allowed = sorted(table) + (["beta"] if kind == "angular_frequency" else [])
            raise self.error(
                f"{key}: unit {unit!r} is not a {kind.replace('_', ' ')} unit "
                f"(use one of {', '.join(allowed)})",
                section,
                key,
            )
        return x * table[unit]

    def number(self, section, key, default=None, cast=float):
        raw = self.raw(section, key)
        if raw is None:
            return default
        try:
            return cast(raw)
        except ValueError:
            raise self.error(f"{key}: {raw!r} is not a valid {cast.__name__}", section, key) from None

    def boolean(self, section, key, default=False):
        if self.raw(section, key) is None:
            return default
        try:
            return self.p.getboolean(section, key)
        except ValueError:
            raise self.error(f"{key}: expected true or false", section, key) from None


def _check_schema(parser, lines, path):
    for section in parser.sections():
        if section not in SCHEMA:
            raise ConfigError(
                f"unknown section [{section}]", line=lines.get((section, None)), path=path
            )
        for key in parser.options(section):
            if key not in SCHEMA[section]:
                raise ConfigError(
                    f"unknown key {key!r} in [{section}]",
                    line=lines.get((section, key)),
                    path=path,
                )


def _parse_device(r):
    s = "device"
    kw = {}
    length = r.quantity(s, "length", "length")
    if length is not None:
        kw["waveguide_length"] = length
    n_g = r.number(s, "group_index")
    v_g = r.quantity(s, "group_velocity", "velocity")
    if n_g is not None and v_g is not None:
        raise r.error("give group_index or group_velocity, not both", s, "group_velocity")
    if n_g is not None:
        if not n_g > 1:
            raise r.error("group_index must be > 1", s, "group_index")
        kw["group_velocity"] = DeviceParams().speed_of_light / n_g
    elif v_g is not None:
        kw["group_velocity"] = v_g
    for key, name, kind in (
        ("pump_wavelength", "pump_wavelength", "length"),
        ("incidence_angle", "incidence_angle", "angle"),
        ("pulse_duration", "pump_pulse_duration", "time"),
    ):
        x = r.quantity(s, key, kind)
        if x is not None:
            kw[name] = x
    try:
        return DeviceParams(**kw)
    except DomainError as exc:
        raise r.error(str(exc), s) from None


def _parse_pump(r, device, base_dir):
    s = "pump"
    if not r.p.has_section(s):
        raise ConfigError("missing [pump] section", path=r.path)
    kind = r.raw(s, "kind")
    if kind not in PUMP_KINDS:
        raise r.error(f"kind must be one of {', '.join(PUMP_KINDS)}, got {kind!r}", s, "kind")
    waist = r.quantity(s, "waist", "length")
    beta = r.quantity(s, "beta", "angular_frequency")
    if waist is not None and not waist > 0:
        raise r.error("waist must be > 0", s, "waist")
    if beta is None and waist is not None:
        beta = beta_from_waist(device, waist)
    spec = dict(kind=kind, waist=waist, beta=beta)
    if kind == "gaussian_step":
        if waist is None:
            raise r.error("gaussian_step pump needs a waist", s)
        spec.update(
            center_shift=r.quantity(s, "center_shift", "length", 0.0),
            step_position=r.quantity(s, "step_position", "length", 0.0),
            step_phase=r.quantity(s, "step_phase", "angle", 0.0),
        )
    elif kind == "ideal_anyon":
        alpha = r.number(s, "alpha")
        if alpha is None or not 0 <= alpha <= 1:
            raise r.error("ideal_anyon pump needs alpha in [0, 1]", s, "alpha")
        if beta is None:
            raise r.error("ideal_anyon pump needs beta or waist", s)
        padding = r.number(s, "padding", 8, int)
        if padding < 1:
            raise r.error("padding must be >= 1", s, "padding")
        spec.update(alpha=alpha, swap_sectors=r.boolean(s, "swap_sectors"), padding=padding)
    else:
        name = r.raw(s, "file")
        if not name:
            raise r.error("custom pump needs a file", s)
        f = Path(name)
        if not f.is_absolute():
            f = base_dir / f
        if not f.is_file():
            raise r.error(f"pump file {str(f)!r} does not exist", s, "file")
        spec["file"] = f
    return PumpSpec(**spec)


def _parse_grids(r, beta):
    s = "grids"
    g = GridSpec()
    kw = {}
    for key in ("spatial_points", "frequency_points", "delay_points", "jsa_points"):
        n = r.number(s, key, getattr(g, key), int)
        if n < 3:
            raise r.error(f"{key} must be >= 3", s, key)
        kw[key] = n
    kw["spatial_half_width"] = r.quantity(s, "spatial_half_width", "length")
    kw["delay_half_width"] = r.quantity(s, "delay_half_width", "time", g.delay_half_width)
    for key, default in (("frequency_half_width", 200), ("jsa_half_width", 40)):
        x = r.quantity(s, key, "angular_frequency", beta=beta)
        if x is None:
            if beta is None:
                raise r.error(f"{key} is required when the pump has no beta", s)
            x = default * beta
        kw[key] = x
    for key in ("spatial_half_width", "delay_half_width", "frequency_half_width", "jsa_half_width"):
        if kw[key] is not None and not kw[key] > 0:
            raise r.error(f"{key} must be > 0", s, key)
    return GridSpec(**kw)


def parse_config(text, path=None):
    """Parse config ``text``; ``path`` is used for messages and relative files."""
    parser = configparser.ConfigParser(
        interpolation=None, inline_comment_prefixes=("#", ";"), empty_lines_in_values=False
    )
    try:
        parser.read_string(text, source=str(path) if path else "<config>")
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError("expected a [section] header", line=exc.lineno, path=path) from None
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
        raise ConfigError(exc.message.split(":")[-1].strip(), line=exc.lineno, path=path) from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"cannot parse {line.strip()}", line=lineno, path=path) from None
    lines = _line_index(text)
    _check_schema(parser, lines, path)
    r = _Reader(parser, lines, path)
    base_dir = Path(path).parent if path else Path.cwd()

    device = _parse_device(r)
    pump = _parse_pump(r, device, base_dir)
    grids = _parse_grids(r, pump.beta)

    bandwidth = None
    if r.raw("jsa", "pump_bandwidth") not in (None, "auto"):
        bandwidth = r.quantity("jsa", "pump_bandwidth", "angular_frequency", beta=pump.beta)
        if not bandwidth > 0:
            raise r.error("pump_bandwidth must be > 0", "jsa", "pump_bandwidth")
    formula = r.raw("hom", "formula") or "1d"
    if formula not in ("1d", "2d"):
        raise r.error("formula must be 1d or 2d", "hom", "formula")
    ref = r.number("analysis", "reference_alpha", 0.5)
    if not 0 <= ref <= 1:
        raise r.error("reference_alpha must lie in [0, 1]", "analysis", "reference_alpha")
    out = r.raw("output", "directory")
    formats = r.raw("output", "formats")
    if formats is None:
        formats = PRODUCTS
    else:
        formats = tuple(f.strip() for f in re.split(r"[,\s]+", formats) if f.strip())
        bad = [f for f in formats if f not in PRODUCTS]
        if bad:
            raise r.error(
                f"unknown formats {bad}; choose from {', '.join(PRODUCTS)}", "output", "formats"
            )
    return ExperimentConfig(
        device=device,
        pump=pump,
        grids=grids,
        beta=pump.beta,
        pump_bandwidth=bandwidth,
        hom_formula=formula,
        reference_alpha=ref,
        output_directory=Path(out) if out else None,
        formats=formats,
        source=Path(path) if path else None,
    )


def load_config(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", path=path) from None
    return parse_config(text, path)


def bundled_config_dir():
    return Path(__file__).parent / "configs"


def bundled_configs():
    return sorted(p.name for p in bundled_config_dir().glob("*.cfg"))


def resolve_config(name_or_path):
    """A path to an existing file, or the name of a bundled config."""
    p = Path(name_or_path)
    if p.is_file():
        return p
    for candidate in (bundled_config_dir() / p.name, bundled_config_dir() / f"{p.name}.cfg"):
        if candidate.is_file():
            return candidate
    raise ConfigError(
        f"no config file {str(name_or_path)!r}; bundled configs: {', '.join(bundled_configs())}"
    )
