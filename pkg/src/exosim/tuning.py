"""Grid search for the oscillator learning gains.

Each candidate gain triple is scored on a small corpus of synthetic gait
patterns at different cadences and amplitudes.  A candidate is feasible
when every joint in every corpus run ends up activated with a
post-activation reconstruction error below 10% of the signal's
peak-to-peak range; among feasible candidates the one with the lowest
mean activation time wins, ties broken by lower mean error ratio and
then by lexicographically smaller gains.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import product

from .errors import NoFeasiblePointError
from .gait import GaitPattern, constant_profile
from .oscillator import OscillatorGains
from .scenario import ScenarioConfig, run_scenario

RMSE_RATIO_LIMIT = 0.10

TUNING_CSV_HEADER = ("kappa_phi,kappa_omega,kappa_alpha,feasible,"
                     "mean_activation_time_s,mean_rmse_ratio,worst_rmse_ratio")


def default_tuning_corpus(base: GaitPattern) -> list[GaitPattern]:
    """Cadence and amplitude variants of the base pattern."""
    corpus = []
    for k, (cadence, scale) in enumerate(
            ((0.7, 1.0), (0.9, 1.0), (1.1, 1.0), (0.9, 0.8))):
        corpus.append(replace(
            base,
            cadence_profile=constant_profile(cadence),
            amplitude_scale_profile=constant_profile(scale),
            seed=base.seed + k,
        ))
    return corpus


def _evaluate(sc: ScenarioConfig, gains: OscillatorGains,
              corpus: list[GaitPattern]) -> dict[str, object]:
    run_base = replace(
        sc, kind="constant_gait", dt=sc.tune_dt, duration=sc.tune_duration,
        gains=gains, perturb=replace(sc.perturb, enabled=False))
    activation_times = []
    ratios = []
    feasible = True
    for pattern in corpus:
        _, metrics = run_scenario(replace(run_base, pattern=pattern))
        for joint in ("right", "left"):
            t_act = metrics[f"{joint}.activation_time_s"]
            ratio = metrics[f"{joint}.rmse_ratio"]
            if t_act < 0.0 or not ratio < RMSE_RATIO_LIMIT:
                feasible = False
            activation_times.append(t_act)
            ratios.append(ratio)
    return {
        "kappa_phi": gains.kappa_phi,
        "kappa_omega": gains.kappa_omega,
        "kappa_alpha": gains.kappa_alpha,
        "feasible": feasible,
        "mean_activation_time_s": sum(activation_times) / len(activation_times),
        "mean_rmse_ratio": sum(ratios) / len(ratios),
        "worst_rmse_ratio": max(ratios),
    }


def tune_gains(sc: ScenarioConfig,
               corpus: list[GaitPattern] | None = None
               ) -> tuple[OscillatorGains, list[dict[str, object]]]:
    """Search the configured gain grid; returns (best gains, result table)."""
    if corpus is None:
        corpus = default_tuning_corpus(sc.pattern)
    if not corpus:
        raise NoFeasiblePointError("tuning corpus is empty")
    rows = []
    for kp, ko, ka in product(sc.tune_kappa_phi_grid, sc.tune_kappa_omega_grid,
                              sc.tune_kappa_alpha_grid):
        rows.append(_evaluate(sc, OscillatorGains(kp, ko, ka), corpus))
    feasible = [r for r in rows if r["feasible"]]
    if not feasible:
        raise NoFeasiblePointError(
            f"no gain triple met rmse_ratio < {RMSE_RATIO_LIMIT} with "
            f"activation on all {len(corpus)} corpus patterns")
    best = min(feasible, key=lambda r: (
        r["mean_activation_time_s"], r["mean_rmse_ratio"],
        r["kappa_phi"], r["kappa_omega"], r["kappa_alpha"]))
    gains = OscillatorGains(best["kappa_phi"], best["kappa_omega"],
                            best["kappa_alpha"])
    return gains, rows


def write_tuning_csv(rows: list[dict[str, object]], path: str) -> None:
    """Full grid result table, one line per candidate."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(TUNING_CSV_HEADER + "\n")
        for r in rows:
            fh.write(",".join((
                repr(r["kappa_phi"]), repr(r["kappa_omega"]),
                repr(r["kappa_alpha"]), str(int(r["feasible"])),
                repr(r["mean_activation_time_s"]), repr(r["mean_rmse_ratio"]),
                repr(r["worst_rmse_ratio"]))) + "\n")
