"""File emission: trace CSV, metrics documents, vector plots.

Float values are written with repr so they round-trip bit-exactly and
reruns of the same configuration produce byte-identical CSV and metrics
files.  Plots are SVG with a fixed hash salt and no embedded date so
repeated runs in one environment produce stable files.
"""

from __future__ import annotations

import math
import os

from .scenario import ScenarioConfig, Trace

TRACE_CSV = "trace.csv"
METRICS_KV = "metrics.kv"
METRICS_TXT = "metrics.txt"
SIGNALS_SVG = "signals.svg"
PARAMETERS_SVG = "parameters.svg"
GAIT_CSV = "gait.csv"


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_trace_csv(trace: Trace, path: str) -> None:
    """One header line plus one row per tick, repr-formatted floats."""
    names = trace.column_names
    cols = [trace.columns[name] for name in names]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(names) + "\n")
        for row in zip(*cols):
            fh.write(",".join(map(_fmt, row)) + "\n")


def write_input_csv(t, q_right, q_left, path: str) -> None:
    """Signal series in the replayable input schema."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t,q_right,q_left\n")
        for row in zip(t.tolist(), q_right.tolist(), q_left.tolist()):
            fh.write(",".join(map(repr, row)) + "\n")


def write_metrics_kv(metrics: dict[str, object], path: str) -> None:
    """Machine-readable flat key-value metrics document."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for key, value in metrics.items():
            fh.write(f"{key} = {_fmt(value)}\n")


def read_metrics_kv(path: str) -> dict[str, str]:
    """Raw string mapping of a metrics.kv file."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def write_metrics_txt(metrics: dict[str, object], path: str) -> None:
    """Human-oriented aligned rendering of the same metrics."""
    width = max(len(k) for k in metrics)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for key, value in metrics.items():
            if isinstance(value, float):
                if math.isfinite(value):
                    text = f"{value:.6g}"
                else:
                    text = str(value)
            else:
                text = str(value)
            fh.write(f"{key:<{width}}  {text}\n")


def _plot_style():
    import matplotlib
    matplotlib.use("Agg")
    matplotlib.rcParams["svg.hashsalt"] = "exosim"
    return matplotlib


def _decimate(trace: Trace, name: str, stride: int):
    return trace.array(name)[::stride]


def write_signals_plot(trace: Trace, sc: ScenarioConfig, path: str) -> None:
    """Measured vs estimated angles on top, torque components below."""
    _plot_style()
    from matplotlib.figure import Figure

    stride = max(1, sc.plot_decimation)
    t = _decimate(trace, "t", stride)
    fig = Figure(figsize=(9.0, 6.0))
    ax_q, ax_tau = fig.subplots(2, 1, sharex=True)
    colors = {"right": "tab:blue", "left": "tab:red",
              "pendulum": "tab:blue"}
    for joint in trace.joints:
        c = colors[joint]
        ax_q.plot(t, _decimate(trace, f"q_{joint}", stride),
                  color=c, lw=1.0, label=f"q {joint}")
        ax_q.plot(t, _decimate(trace, f"q_hat_{joint}", stride),
                  color=c, lw=1.0, ls="--", label=f"estimate {joint}")
        ax_tau.plot(t, _decimate(trace, f"tau_a_{joint}", stride),
                    color=c, lw=1.0, label=f"assist {joint}")
        ax_tau.plot(t, _decimate(trace, f"tau_t_{joint}", stride),
                    color=c, lw=1.0, ls="--", label=f"transparency {joint}")
        sign = -1.0 if joint == "left" else 1.0
        ax_tau.plot(t, sign * _decimate(trace, f"active_{joint}", stride),
                    color=c, lw=0.8, ls=":", label=f"active {joint}")
    limit = sc.control.tau_limit
    ax_tau.axhline(limit, color="black", ls="--", lw=0.8)
    ax_tau.axhline(-limit, color="black", ls="--", lw=0.8)
    ax_q.set_ylabel("angle [rad]")
    ax_q.legend(loc="upper right", fontsize=8)
    ax_tau.set_ylabel("torque [N m] / activity")
    ax_tau.set_xlabel("time [s]")
    ax_tau.legend(loc="upper right", fontsize=8)
    fig.suptitle(f"{sc.kind}: measured and estimated signals, torques")
    fig.savefig(path, format="svg", metadata={"Date": None})


def write_parameters_plot(trace: Trace, sc: ScenarioConfig, path: str) -> None:
    """Learned fundamental frequency on top, coefficients below."""
    _plot_style()
    from matplotlib.figure import Figure

    stride = max(1, sc.plot_decimation)
    t = _decimate(trace, "t", stride)
    fig = Figure(figsize=(9.0, 6.0))
    ax_w, ax_a = fig.subplots(2, 1, sharex=True)
    colors = {"right": "tab:blue", "left": "tab:red", "pendulum": "tab:blue"}
    for joint in trace.joints:
        ax_w.plot(t, _decimate(trace, f"omega_{joint}", stride),
                  color=colors[joint], lw=1.0, label=f"omega {joint}")
    joint = trace.joints[-1]
    for i in range(sc.n_harmonics + 1):
        ax_a.plot(t, _decimate(trace, f"alpha{i}_{joint}", stride),
                  lw=1.0, label=f"alpha{i} {joint}")
    ax_w.set_ylabel("omega [rad/s]")
    ax_w.legend(loc="lower right", fontsize=8)
    ax_a.set_ylabel("coefficients [rad]")
    ax_a.set_xlabel("time [s]")
    ax_a.legend(loc="upper right", fontsize=8)
    fig.suptitle(f"{sc.kind}: learned frequency and coefficients")
    fig.savefig(path, format="svg", metadata={"Date": None})


def emit_outputs(trace: Trace, metrics: dict[str, object], out_dir: str,
                 sc: ScenarioConfig) -> list[str]:
    """Write all run artifacts into out_dir; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    p = os.path.join(out_dir, TRACE_CSV)
    write_trace_csv(trace, p)
    paths.append(p)
    p = os.path.join(out_dir, METRICS_KV)
    write_metrics_kv(metrics, p)
    paths.append(p)
    p = os.path.join(out_dir, METRICS_TXT)
    write_metrics_txt(metrics, p)
    paths.append(p)
    p = os.path.join(out_dir, SIGNALS_SVG)
    write_signals_plot(trace, sc, p)
    paths.append(p)
    p = os.path.join(out_dir, PARAMETERS_SVG)
    write_parameters_plot(trace, sc, p)
    paths.append(p)
    return paths
