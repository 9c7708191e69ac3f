"""Command-line interface.

Commands: model, steady, entangle, sweep, sweep-temp, reproduce <figN>.
Exit codes: 0 success, 2 config error (also argparse errors), 3 no stable
steady state anywhere, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import (ConfigError, build_params, build_sweep_spec,
                     build_temperature_plan, load_config, params_to_dict,
                     stability_margin, tripartite_triple, validate_config)
from .linalg import UnstableSystemError
from .model import build_linear_model
from .presets import PRESETS, preset_config
from .steady import stability_report, steady_means, weak_excitation_check
from .sweep import evaluate_point, find_max, run_sweep, temperature_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNSTABLE = 3
EXIT_IO = 4

MATRIX_DUMP_FORMAT = "%.12e"  # 13 significant digits in A.txt / D.txt / b.txt

DEFAULT_SPHERE_DIAMETER = 250e-6  # m, for the weak-excitation report


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def _stability_payload(report) -> dict:
    return {"spectral_abscissa": report.spectral_abscissa,
            "stable": report.stable,
            "margin_tolerance": report.margin_tolerance}


def cmd_model(args) -> int:
    cfg = load_config(args.config)
    p = build_params(cfg)
    model = build_linear_model(p)
    report = stability_report(model.A, stability_margin(cfg))
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    np.savetxt(outdir / "A.txt", model.A, fmt=MATRIX_DUMP_FORMAT)
    np.savetxt(outdir / "D.txt", model.D, fmt=MATRIX_DUMP_FORMAT)
    np.savetxt(outdir / "b.txt", model.b, fmt=MATRIX_DUMP_FORMAT)
    _write_json(outdir / "stability.json", _stability_payload(report))
    _write_json(outdir / "resolved_params.json", params_to_dict(p))
    print(f"wrote A.txt, D.txt, b.txt, stability.json, resolved_params.json "
          f"to {outdir} (stable={report.stable})")
    return EXIT_OK


def cmd_steady(args) -> int:
    cfg = load_config(args.config)
    p = build_params(cfg)
    model = build_linear_model(p)
    margin = stability_margin(cfg)
    report = stability_report(model.A, margin)
    out = Path(args.out or "steady.json")
    if not report.stable:
        _write_json(out, _stability_payload(report))
        print(f"system is unstable (abscissa {report.spectral_abscissa:.3e}); "
              f"wrote {out}", file=sys.stderr)
        return EXIT_UNSTABLE
    mf = steady_means(model, margin)
    weak = weak_excitation_check(max(mf.n_m), DEFAULT_SPHERE_DIAMETER)
    payload = _stability_payload(report)
    payload.update({
        "u": [float(v) for v in mf.u],
        "N_a": list(mf.n_a), "N_m": list(mf.n_m),
        "weak_excitation": {"spin_count": weak.spin_count,
                            "ratio": weak.ratio, "passed": weak.passed},
    })
    _write_json(out, payload)
    print(f"wrote {out}")
    return EXIT_OK


def cmd_entangle(args) -> int:
    cfg = load_config(args.config)
    p = build_params(cfg)
    report = evaluate_point(p, {"N_a", "N_m", "E_pairs", "R_min"},
                            stability_margin(cfg), tripartite_triple(cfg))
    out = Path(args.out or "entangle.json")
    payload: dict = {"stable": report.stable, "spectral_abscissa": report.abscissa}
    if not report.stable:
        _write_json(out, payload)
        print(f"system is unstable (abscissa {report.abscissa:.3e}); "
              f"wrote {out}", file=sys.stderr)
        return EXIT_UNSTABLE
    payload.update({
        "N_a": list(report.n_a), "N_m": list(report.n_m),
        "E": dict(report.e_pairs),
        "R_min": report.r_min,
        "contangle_residuals": dict(report.contangle_residuals),
    })
    _write_json(out, payload)
    print(f"wrote {out}")
    return EXIT_OK


def _write_table(table, out: Path, fmt: str) -> None:
    table.to_csv(out)
    written = [str(out)]
    if fmt == "json":
        mirror = out.with_suffix(".json")
        table.to_json(mirror)
        written.append(str(mirror))
    print("wrote " + ", ".join(written))


def _print_summary(table) -> None:
    for column in table.columns:
        try:
            location, best = find_max(table, column)
        except UnstableSystemError:
            print(f"max {column}: no stable points")
            continue
        where = ", ".join(f"{name} = {v:.9g}"
                          for name, v in zip(table.axis_names, location))
        print(f"max {column} = {best:.3f} at {where}")


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    spec = build_sweep_spec(cfg, grid_override=args.grid)
    threads = args.threads or cfg.get("options", {}).get("threads", 1)
    table = run_sweep(spec, threads=threads)
    out = Path(args.out or cfg.get("output", {}).get("path", "sweep.csv"))
    fmt = args.format or cfg.get("output", {}).get("format", "csv")
    _write_table(table, out, fmt)
    if not table.stable.any():
        print("every grid point is unstable", file=sys.stderr)
        return EXIT_UNSTABLE
    return EXIT_OK


def cmd_sweep_temp(args) -> int:
    cfg = load_config(args.config)
    plan = build_temperature_plan(cfg, grid_override=args.grid)
    table = temperature_sweep(build_params(cfg), plan.operating_points,
                              plan.temperatures_mK, stability_margin(cfg),
                              tripartite_triple(cfg))
    out = Path(args.out or cfg.get("output", {}).get("path", "sweep_temp.csv"))
    fmt = args.format or cfg.get("output", {}).get("format", "csv")
    _write_table(table, out, fmt)
    if not table.stable.any():
        print("every operating point is unstable", file=sys.stderr)
        return EXIT_UNSTABLE
    return EXIT_OK


def cmd_reproduce(args) -> int:
    cfg = preset_config(args.figure)
    validate_config(cfg)
    threads = args.threads or 1
    if "temperature" in cfg:
        plan = build_temperature_plan(cfg, grid_override=args.grid)
        table = temperature_sweep(build_params(cfg), plan.operating_points,
                                  plan.temperatures_mK, stability_margin(cfg),
                                  tripartite_triple(cfg))
    else:
        spec = build_sweep_spec(cfg, grid_override=args.grid)
        table = run_sweep(spec, threads=threads)
    out = Path(args.out or cfg["output"]["path"])
    fmt = args.format or cfg.get("output", {}).get("format", "csv")
    _write_table(table, out, fmt)
    if not table.stable.any():
        print("every grid point is unstable", file=sys.stderr)
        return EXIT_UNSTABLE
    _print_summary(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavmag",
        description="Steady-state entanglement in a driven three-cavity / "
                    "three-magnon network.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, config_required=True):
        sp = sub.add_parser(name, help=help_text)
        if config_required:
            sp.add_argument("--config", required=True, help="YAML/JSON config file")
        sp.add_argument("--out", default=None, help="output path")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker processes for sweeps")
        sp.add_argument("--grid", type=int, default=None,
                        help="override grid points per axis")
        sp.add_argument("--format", choices=["csv", "json"], default=None,
                        help="csv (default) or csv plus a JSON mirror")
        sp.set_defaults(func=func)
        return sp

    add("model", cmd_model, "dump drift/diffusion matrices and drive vector")
    add("steady", cmd_steady, "semiclassical steady state and occupations")
    add("entangle", cmd_entangle, "entanglement measures at one parameter point")
    add("sweep", cmd_sweep, "evaluate a parameter grid to CSV")
    add("sweep-temp", cmd_sweep_temp, "temperature scan at fixed operating points")
    rp = add("reproduce", cmd_reproduce, "run a built-in figure preset",
             config_required=False)
    rp.add_argument("figure", choices=sorted(PRESETS), help="figure id")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except UnstableSystemError as exc:
        print(f"instability: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
