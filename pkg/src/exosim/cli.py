"""Command-line interface.

Subcommands: run (simulate the configured scenario), replay (feed a
recorded CSV through the same pipeline), tune (gain grid search),
export-gait (write the synthetic input series to CSV).

Exit codes: 0 success, 1 no feasible tuning point, 2 configuration or
schema error, 3 runtime numerical error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import load_config
from .errors import (ConfigError, CsvSchemaError, InvalidParameterError,
                     NoFeasiblePointError, NonFiniteInputError)
from .outputs import GAIT_CSV, emit_outputs, write_input_csv
from .scenario import ScenarioConfig, generate_input_arrays, run_scenario
from .tuning import tune_gains, write_tuning_csv

TUNING_CSV = "tuning_results.csv"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="config file overriding packaged defaults")
    common.add_argument("--out", metavar="DIR",
                        help="output directory (default from config)")
    common.add_argument("--seed", type=int, metavar="INT",
                        help="override scenario.seed")
    common.add_argument("--quiet", action="store_true",
                        help="suppress progress output")
    parser = argparse.ArgumentParser(
        prog="exosim",
        description="Deterministic simulator of a backlash-transparent, "
                    "oscillator-assisted exoskeleton controller.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("run", parents=[common],
                   help="simulate the configured scenario")
    p_replay = sub.add_parser("replay", parents=[common],
                              help="replay a recorded input CSV")
    p_replay.add_argument("input", help="input CSV (t,q_right,q_left)")
    sub.add_parser("tune", parents=[common],
                   help="grid-search the oscillator learning gains")
    sub.add_parser("export-gait", parents=[common],
                   help="write the synthetic input series to CSV")
    return parser


def _load_scenario(args) -> ScenarioConfig:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg["scenario.seed"] = args.seed
    if getattr(args, "input", None) is not None:
        cfg["scenario.kind"] = "csv_replay"
        cfg["scenario.input_path"] = args.input
    return ScenarioConfig.from_dict(cfg)


def _say(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _cmd_run(args) -> int:
    sc = _load_scenario(args)
    out_dir = args.out or sc.out_dir
    trace, metrics = run_scenario(sc)
    paths = emit_outputs(trace, metrics, out_dir, sc)
    for joint in trace.joints:
        _say(args, f"{joint}: activation_time_s="
                   f"{metrics[f'{joint}.activation_time_s']} "
                   f"rmse_ratio={metrics[f'{joint}.rmse_ratio']:.4f} "
                   f"tau_max_abs={metrics[f'{joint}.tau_max_abs']:.4f}")
    for p in paths:
        _say(args, f"wrote {p}")
    return 0


def _cmd_tune(args) -> int:
    sc = _load_scenario(args)
    out_dir = args.out or sc.out_dir
    gains, rows = tune_gains(sc)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, TUNING_CSV)
    write_tuning_csv(rows, path)
    _say(args, f"evaluated {len(rows)} gain candidates "
               f"({sum(1 for r in rows if r['feasible'])} feasible)")
    _say(args, f"wrote {path}")
    print(f"oscillator.kappa_phi = {gains.kappa_phi!r}")
    print(f"oscillator.kappa_omega = {gains.kappa_omega!r}")
    print(f"oscillator.kappa_alpha = {gains.kappa_alpha!r}")
    return 0


def _cmd_export_gait(args) -> int:
    sc = _load_scenario(args)
    out_dir = args.out or sc.out_dir
    t, q_r, q_l, _, _ = generate_input_arrays(sc)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, GAIT_CSV)
    write_input_csv(t, q_r, q_l, path)
    _say(args, f"wrote {path} ({len(t)} samples)")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"run": _cmd_run, "replay": _cmd_run, "tune": _cmd_tune,
               "export-gait": _cmd_export_gait}[args.command]
    try:
        return handler(args)
    except NoFeasiblePointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, CsvSchemaError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonFiniteInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
