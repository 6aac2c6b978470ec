"""Command-line front end.

Usage::

    anyonspdc run paper_alpha_half_left
    anyonspdc hom boson_reference --formula 2d -o out/
    anyonspdc design paper_alpha_half_left --alpha 0.5
    anyonspdc verify boson_reference

The config argument is a path or the name of a bundled config.  Output goes
to ``--output``, else ``$ANYONSPDC_OUTPUT_DIR``, else the config's
``[output] directory``, else ``anyonspdc_output/<config name>``.
"""

import argparse
import os
import sys
import warnings
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import io
from . import pipeline as pl
from .config import bundled_configs, load_config, resolve_config
from .errors import AnyonSPDCError, ConfigError, NumericalQualityError, SupportWarning
from .grids import SpatialGrid
from .phase_matching import analytic_anyon_pm, l2_overlap
from .pump import ideal_anyon_pump

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_QUALITY = 4

OUTPUT_ENV = "ANYONSPDC_OUTPUT_DIR"


def _output_dir(args, cfg):
    if args.output:
        d = Path(args.output)
    elif os.environ.get(OUTPUT_ENV):
        d = Path(os.environ[OUTPUT_ENV])
    elif cfg.output_directory is not None:
        d = cfg.output_directory
    else:
        d = Path("anyonspdc_output") / cfg.source.stem
    d.mkdir(parents=True, exist_ok=True)
    return d


def _say(msg):
    print(msg, flush=True)


def _write(out, cfg, name, writer, *args, **kw):
    if name.split(".")[0] in cfg.formats:
        path = out / name
        writer(path, *args, **kw)
        _say(f"wrote {path}")


def _cmd_pump(args, cfg):
    out = _output_dir(args, cfg)
    pump = pl.make_pump(cfg)
    _write(out, cfg, "pump.csv", io.write_pump_csv, pump)
    return pump


def _cmd_pm(args, cfg):
    pump = _cmd_pump(args, cfg)
    pm = pl.make_pm(cfg, pump)
    _write(_output_dir(args, cfg), cfg, "pm.csv", io.write_pm_csv, pm)
    return pm


def _cmd_jsa(args, cfg):
    pm = _cmd_pm(args, cfg)
    jsa = pl.make_jsa(cfg, pm)
    out = _output_dir(args, cfg)
    _write(out, cfg, "jsa.json", io.write_jsa_json, jsa)
    _write(out, cfg, "jsi.csv", io.write_jsi_csv, jsa)
    return jsa


def _cmd_hom(args, cfg):
    if args.formula:
        cfg = replace(cfg, hom_formula=args.formula)
    pump = pl.make_pump(cfg)
    pm = pl.make_pm(cfg, pump)
    curve = pl.make_hom(cfg, pm)
    _write(_output_dir(args, cfg), cfg, "hom.csv", io.write_hom_csv, curve, cfg.beta)
    _say(f"formula {cfg.hom_formula}: P(0) = {np.interp(0.0, curve.tau, curve.probabilities):.6f}")
    return EXIT_OK


def _cmd_run(args, cfg):
    if args.formula:
        cfg = replace(cfg, hom_formula=args.formula)
    res = pl.run(cfg)
    out = _output_dir(args, cfg)
    _write(out, cfg, "pump.csv", io.write_pump_csv, res.pump)
    _write(out, cfg, "pm.csv", io.write_pm_csv, res.pm)
    _write(out, cfg, "jsa.json", io.write_jsa_json, res.jsa)
    _write(out, cfg, "jsi.csv", io.write_jsi_csv, res.jsa)
    _write(out, cfg, "hom.csv", io.write_hom_csv, res.hom, cfg.beta)
    _write(out, cfg, "report.json", io.write_report_json, res.report)
    r = res.report
    _say(f"estimated alpha        {r.estimated_alpha:.6f}")
    _say(f"P(0)                   {r.zero_delay_P:.6f}")
    _say(f"overlap vs alpha={cfg.reference_alpha:g}   {r.overlap_vs_reference:.4f} (L1 similarity)")
    _say(f"correlation vs ref     {res.extra['correlation_vs_reference']:.4f}")
    return EXIT_OK


def _cmd_design(args, cfg):
    beta = args.beta if args.beta else cfg.beta
    v = cfg.device.group_velocity
    half = args.half_width * 1e-3 if args.half_width else 8 * v / beta
    grid = SpatialGrid.symmetric(args.points, half)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SupportWarning)
        pump = ideal_anyon_pump(
            grid, args.alpha, beta, cfg.device, padding=args.padding,
            swap_sectors=args.swap_sectors,
        )
    for w in caught:
        _say(f"note: {w.message}")
    out = _output_dir(args, cfg)
    _write(out, cfg, "pump.csv", io.write_pump_csv, pump)
    pm = pl.make_pm(replace(cfg, beta=beta), pump)
    _write(out, cfg, "pm.csv", io.write_pm_csv, pm)
    target = analytic_anyon_pm(args.alpha, beta, pm.grid, swap_sectors=args.swap_sectors)
    _say(f"realized vs target phase-matching overlap {l2_overlap(pm, target):.6f}")
    return EXIT_OK


def _cmd_verify(args, cfg):
    checks = pl.verify(cfg)
    for c in checks:
        _say(c.line())
    failed = sum(not c.passed for c in checks)
    _say(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_QUALITY


def _wrap(fn):
    def cmd(args, cfg):
        fn(args, cfg)
        return EXIT_OK

    return cmd


COMMANDS = {
    "run": _cmd_run,
    "pump": _wrap(_cmd_pump),
    "pm": _wrap(_cmd_pm),
    "jsa": _wrap(_cmd_jsa),
    "hom": _cmd_hom,
    "design": _cmd_design,
    "verify": _cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anyonspdc",
        description="Simulate anyonic two-photon interference from a transverse-pump SPDC source.",
        epilog="bundled configs: " + ", ".join(bundled_configs()),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "run": "full pipeline and report",
        "pump": "pump profile only",
        "pm": "pump and phase-matching function",
        "jsa": "joint spectral amplitude and intensity",
        "hom": "HOM interferogram",
        "design": "ideal anyonic pump for a chosen alpha",
        "verify": "check invariants on a config",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("config", help="config file or bundled config name")
        p.add_argument("-o", "--output", help=f"output directory (overrides ${OUTPUT_ENV})")
        if name in ("run", "hom"):
            p.add_argument("--formula", choices=("1d", "2d"), help="HOM formula")
        if name == "design":
            p.add_argument("--alpha", type=float, required=True, help="exchange parameter in [0, 1]")
            p.add_argument("--beta", type=float, help="phase-matching width [rad/s]; default from config")
            p.add_argument("--half-width", type=float, help="spatial half window [mm]; default 8 v/beta")
            p.add_argument("--points", type=int, default=4097, help="spatial samples")
            p.add_argument("--padding", type=int, default=8, help="inverse-transform padding factor")
            p.add_argument("--swap-sectors", action="store_true", help="mirrored sector assignment")
    return parser


def _show_warning(message, category, *args, **kwargs):
    print(f"warning: {message}", file=sys.stderr)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.showwarning = _show_warning
            cfg = load_config(resolve_config(args.config))
            return COMMANDS[args.command](args, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalQualityError as exc:
        print(f"numerical quality error: {exc}", file=sys.stderr)
        return EXIT_QUALITY
    except (AnyonSPDCError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())
