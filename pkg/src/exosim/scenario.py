"""Closed-loop experiment harness.

A scenario couples a signal source (synthetic gait, a stand-to-walk
transition, a replayed CSV, or a swinging pendulum) to one controller
per joint and a plant model, runs the loop at a fixed step, and records
a per-tick trace plus summary metrics.  Everything is deterministic
from the configuration and seed.

In gait scenarios the limb dominates the backlash interaction: the
output-side angle is prescribed by the signal source and only the motor
side integrates dynamics.  The pendulum scenario integrates both sides.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace

import numpy as np

from .config import parse_grid, parse_harmonics, parse_profile
from .control import ControlParams, JointController
from .errors import ConfigError, CsvSchemaError
from .gait import (TWO_PI, GaitPattern, sample_count, series_arrays,
                   stand_to_walk_arrays)
from .oscillator import MAX_STEP_DT, OscillatorBank, OscillatorGains, ParameterBounds
from .plant import (ActuatorParams, ActuatorState, PendulumParams,
                    motor_side_step, pendulum_actuator_step)

SCENARIO_KINDS = ("stand_to_walk", "constant_gait", "speed_ramp",
                  "pendulum_release", "csv_replay")

INPUT_CSV_HEADER = "t,q_right,q_left"


@dataclass(frozen=True)
class PerturbSettings:
    """First-cycle transient injected into one joint's measured signal."""

    enabled: bool
    joint: str
    amplitude: float
    cycles: float
    fade_cycles: float


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully typed description of one simulation run."""

    kind: str
    dt: float
    duration: float
    seed: int
    stand_duration: float
    ramp_duration: float
    reset_at_walk_onset: bool
    limb_smoothing_s: float
    input_path: str
    out_dir: str
    pattern: GaitPattern
    n_harmonics: int
    omega0: float
    gains: OscillatorGains
    bounds: ParameterBounds
    control: ControlParams
    actuator: ActuatorParams
    pendulum: PendulumParams
    release_offset: float
    perturb: PerturbSettings
    plot_decimation: int
    tune_kappa_phi_grid: tuple[float, ...]
    tune_kappa_omega_grid: tuple[float, ...]
    tune_kappa_alpha_grid: tuple[float, ...]
    tune_dt: float
    tune_duration: float

    @staticmethod
    def from_dict(cfg: dict[str, object]) -> "ScenarioConfig":
        """Build and cross-validate a scenario from a typed config mapping."""
        kind = cfg["scenario.kind"]
        if kind not in SCENARIO_KINDS:
            raise ConfigError(
                f"scenario.kind must be one of {SCENARIO_KINDS}, got {kind!r}")
        dt = cfg["scenario.dt"]
        if not 0.0 < dt <= MAX_STEP_DT:
            raise ConfigError(f"scenario.dt must be in (0, {MAX_STEP_DT}], got {dt}")
        duration = cfg["scenario.duration"]
        if duration <= 0.0:
            raise ConfigError(f"scenario.duration must be > 0, got {duration}")
        stand = cfg["scenario.stand_duration"]
        ramp = cfg["scenario.ramp_duration"]
        if stand < 0.0 or ramp < 0.0:
            raise ConfigError("stand_duration and ramp_duration must be >= 0")
        if kind == "stand_to_walk" and stand + ramp > duration:
            raise ConfigError(
                f"stand_duration {stand} + ramp_duration {ramp} exceeds "
                f"duration {duration}")
        smoothing = cfg["scenario.limb_smoothing_s"]
        if not 0.0 <= smoothing <= 1.0:
            raise ConfigError(
                f"scenario.limb_smoothing_s must be in [0, 1], got {smoothing}")

        pattern = GaitPattern(
            base_harmonics=parse_harmonics(cfg["gait.harmonics"]),
            offset=cfg["gait.offset"],
            cadence_profile=parse_profile(cfg["gait.cadence_points"],
                                          "gait.cadence_points"),
            amplitude_scale_profile=parse_profile(cfg["gait.amplitude_points"],
                                                  "gait.amplitude_points"),
            noise_std=cfg["gait.noise_std"],
            seed=cfg["scenario.seed"],
        )
        gains = OscillatorGains(
            kappa_phi=cfg["oscillator.kappa_phi"],
            kappa_omega=cfg["oscillator.kappa_omega"],
            kappa_alpha=cfg["oscillator.kappa_alpha"],
        )
        bounds = ParameterBounds(
            omega_min=cfg["oscillator.omega_min"],
            omega_max=cfg["oscillator.omega_max"],
            alpha_abs_max=cfg["oscillator.alpha_abs_max"],
            alpha0_min=cfg["oscillator.alpha0_min"],
            alpha0_max=cfg["oscillator.alpha0_max"],
        )
        omega0 = cfg["oscillator.omega0"]
        if not bounds.omega_min <= omega0 <= bounds.omega_max:
            raise ConfigError(
                f"oscillator.omega0 {omega0} outside "
                f"[{bounds.omega_min}, {bounds.omega_max}]")
        control = ControlParams(
            k_t=cfg["control.k_t"],
            k_a=cfg["control.k_a"],
            delta_t=cfg["control.delta_t"],
            p_max=cfg["control.p_max"],
            epsilon=cfg["control.epsilon"],
            tau_limit=cfg["control.tau_limit"],
            envelope_time_constant=cfg["control.envelope_time_constant"],
            activate_threshold=cfg["control.activate_threshold"],
            deactivate_threshold=cfg["control.deactivate_threshold"],
            arm_duration_cycles=cfg["control.arm_duration_cycles"],
        )
        actuator = ActuatorParams(
            gear_ratio=cfg["actuator.gear_ratio"],
            backlash_half_width=cfg["actuator.backlash_half_width"],
            motor_side_inertia=cfg["actuator.motor_side_inertia"],
            output_side_inertia=cfg["actuator.output_side_inertia"],
            motor_side_viscous_friction=cfg["actuator.motor_side_viscous_friction"],
            output_side_viscous_friction=cfg["actuator.output_side_viscous_friction"],
            contact_stiffness=cfg["actuator.contact_stiffness"],
            contact_damping=cfg["actuator.contact_damping"],
        )
        # transparency alone must never hit the saturation limit
        if control.k_t * actuator.backlash_half_width > control.tau_limit:
            raise ConfigError(
                f"control.k_t * backlash_half_width = "
                f"{control.k_t * actuator.backlash_half_width} exceeds "
                f"control.tau_limit {control.tau_limit}")
        pendulum = PendulumParams(
            inertia=cfg["pendulum.inertia"],
            gravity_coefficient=cfg["pendulum.gravity_coefficient"],
            equilibrium_offset=cfg["pendulum.equilibrium_offset"],
            viscous_friction=cfg["pendulum.viscous_friction"],
        )
        release = cfg["pendulum.release_offset"]
        if not math.isfinite(release):
            raise ConfigError("pendulum.release_offset must be finite")
        perturb = PerturbSettings(
            enabled=cfg["perturb.enabled"],
            joint=cfg["perturb.joint"],
            amplitude=cfg["perturb.amplitude"],
            cycles=cfg["perturb.cycles"],
            fade_cycles=cfg["perturb.fade_cycles"],
        )
        if perturb.joint not in ("right", "left"):
            raise ConfigError(f"perturb.joint must be right or left, got {perturb.joint!r}")
        if perturb.enabled and kind != "stand_to_walk":
            raise ConfigError("perturb.enabled requires scenario.kind = stand_to_walk")
        if perturb.cycles <= 0.0 or perturb.fade_cycles < 0.0:
            raise ConfigError("perturb.cycles must be > 0 and fade_cycles >= 0")
        input_path = cfg["scenario.input_path"]
        if kind == "csv_replay":
            if not input_path:
                raise ConfigError("csv_replay needs scenario.input_path")
            if not os.path.exists(input_path):
                raise ConfigError(f"input CSV does not exist: {input_path!r}")
        decim = cfg["output.plot_decimation"]
        if decim < 1:
            raise ConfigError(f"output.plot_decimation must be >= 1, got {decim}")
        tune_dt = cfg["tune.dt"]
        if not 0.0 < tune_dt <= MAX_STEP_DT:
            raise ConfigError(f"tune.dt must be in (0, {MAX_STEP_DT}], got {tune_dt}")
        tune_duration = cfg["tune.duration"]
        if tune_duration <= 0.0:
            raise ConfigError(f"tune.duration must be > 0, got {tune_duration}")
        return ScenarioConfig(
            kind=kind, dt=dt, duration=duration, seed=cfg["scenario.seed"],
            stand_duration=stand, ramp_duration=ramp,
            reset_at_walk_onset=cfg["scenario.reset_at_walk_onset"],
            limb_smoothing_s=smoothing,
            input_path=input_path, out_dir=cfg["scenario.out_dir"],
            pattern=pattern, n_harmonics=cfg["oscillator.n_harmonics"],
            omega0=omega0, gains=gains, bounds=bounds, control=control,
            actuator=actuator, pendulum=pendulum, release_offset=release,
            perturb=perturb, plot_decimation=decim,
            tune_kappa_phi_grid=parse_grid(cfg["tune.kappa_phi_grid"],
                                           "tune.kappa_phi_grid"),
            tune_kappa_omega_grid=parse_grid(cfg["tune.kappa_omega_grid"],
                                             "tune.kappa_omega_grid"),
            tune_kappa_alpha_grid=parse_grid(cfg["tune.kappa_alpha_grid"],
                                             "tune.kappa_alpha_grid"),
            tune_dt=tune_dt, tune_duration=tune_duration,
        )

    def make_bank(self, stride_phase: float = 0.0) -> OscillatorBank:
        return OscillatorBank(self.n_harmonics, self.omega0, self.gains,
                              self.bounds, stride_phase)


class Trace:
    """Column store of one run's per-tick records."""

    def __init__(self, joints: tuple[str, ...], n_alpha: int):
        self.joints = joints
        self.n_alpha = n_alpha
        names = ["t"]
        for group in ("q", "q_hat", "q_motor", "p", "omega"):
            names += [f"{group}_{j}" for j in joints]
        for j in joints:
            names += [f"alpha{i}_{j}" for i in range(n_alpha + 1)]
        for group in ("tau_t", "tau_a", "w", "active", "tau_total"):
            names += [f"{group}_{j}" for j in joints]
        self.column_names = names
        self.columns: dict[str, list] = {name: [] for name in names}

    @property
    def n_rows(self) -> int:
        return len(self.columns["t"])

    def column(self, name: str) -> list:
        return self.columns[name]

    def array(self, name: str) -> np.ndarray:
        return np.asarray(self.columns[name], dtype=float)


def read_input_csv(path: str, dt: float):
    """Read and validate a replay CSV; returns (t, q_right, q_left) arrays.

    The file must carry the exact header, one strictly increasing time
    column at the configured step, and finite angles.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise CsvSchemaError("empty input CSV", line=1)
    if lines[0].strip() != INPUT_CSV_HEADER:
        raise CsvSchemaError(
            f"expected header {INPUT_CSV_HEADER!r}, got {lines[0]!r}", line=1)
    ts, qr, ql = [], [], []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise CsvSchemaError(f"expected 3 fields, got {len(parts)}", line=lineno)
        try:
            t, r, l = float(parts[0]), float(parts[1]), float(parts[2])
        except ValueError:
            raise CsvSchemaError(f"unparseable row {line!r}", line=lineno) from None
        if not (math.isfinite(t) and math.isfinite(r) and math.isfinite(l)):
            raise CsvSchemaError(f"non-finite value in row {line!r}", line=lineno)
        if ts:
            if t <= ts[-1]:
                raise CsvSchemaError(
                    f"time not strictly increasing: {ts[-1]!r} -> {t!r}", line=lineno)
            step = t - ts[-1]
            if abs(step - dt) > 1e-9 * max(1.0, dt):
                raise CsvSchemaError(
                    f"time step {step!r} does not match configured dt {dt!r}",
                    line=lineno)
        ts.append(t)
        qr.append(r)
        ql.append(l)
    if len(ts) < 2:
        raise CsvSchemaError("need at least 2 data rows", line=len(lines))
    return np.asarray(ts), np.asarray(qr), np.asarray(ql)


def _perturb_boost(phase: np.ndarray, scale: np.ndarray,
                   pattern: GaitPattern, settings: PerturbSettings) -> np.ndarray:
    """Additive fundamental-frequency transient confined to the first cycle(s).

    Window is 1 over the perturbed cycles, fading to 0 with a half cosine
    over the final fade_cycles; the boost scales with the amplitude ramp
    so it cannot pop during stance. Injected in quadrature with the gait
    fundamental: an in-phase component merely feeds the amplitude
    estimator and can speed convergence up, while a quadrature component
    drags the frequency estimate and genuinely corrupts the first cycle.
    """
    end = TWO_PI * settings.cycles
    fade = TWO_PI * min(settings.fade_cycles, settings.cycles)
    start_fade = end - fade
    window = np.zeros_like(phase)
    window[phase < start_fade] = 1.0
    if fade > 0.0:
        mask = (phase >= start_fade) & (phase < end)
        window[mask] = 0.5 * (1.0 + np.cos(math.pi * (phase[mask] - start_fade) / fade))
    psi1 = pattern.base_harmonics[0][1]
    return settings.amplitude * scale * window * np.cos(phase + psi1)


def generate_input_arrays(sc: ScenarioConfig):
    """Measured signals a synthetic scenario feeds the loop.

    Returns (t, q_right, q_left, phase, onset_index); phase is the
    generator stride phase used for cycle counting.
    """
    if sc.kind in ("constant_gait", "speed_ramp"):
        t, q_r, q_l, phase, scale = series_arrays(sc.pattern, sc.duration, sc.dt)
        onset = 0
    elif sc.kind == "stand_to_walk":
        t, q_r, q_l, phase, scale = stand_to_walk_arrays(
            sc.pattern, sc.stand_duration, sc.ramp_duration, sc.duration, sc.dt)
        onset = int(math.ceil(sc.stand_duration / sc.dt - 1e-9))
    else:
        raise ConfigError(f"scenario kind {sc.kind!r} has no synthetic input")
    if sc.perturb.enabled:
        boost = _perturb_boost(phase, scale, sc.pattern, sc.perturb)
        if sc.perturb.joint == "right":
            q_r = q_r + boost
        else:
            q_l = q_l + boost
    return t, q_r, q_l, phase, onset


def limb_trajectory(q_measured: np.ndarray, dt: float, window_s: float) -> np.ndarray:
    """Limb angle the plant moves with, recovered from the measured angle.

    Zero-phase moving average over an odd window of about window_s
    seconds.  The controllers always see the raw measurement, but the
    gear faces must not: differentiated measurement noise would rattle
    them with sample-rate velocity spikes far above any limb speed.  A
    centered window adds no lag, so the recovered trajectory stays well
    inside the dead-zone width of the true one, and the same smoothing
    applies to replayed recordings, which carry only measured angles.
    """
    n = len(q_measured)
    w = int(round(window_s / dt))
    if w % 2 == 0:
        w += 1
    w = min(w, n if n % 2 == 1 else n - 1)
    if w <= 1:
        return q_measured
    half = w // 2
    # odd reflection continues the slope through the edges; even
    # reflection would fold the trend back and bend the recovered
    # trajectory over the first and last half window
    padded = np.pad(q_measured, half, mode="reflect", reflect_type="odd")
    return np.convolve(padded, np.full(w, 1.0 / w), mode="valid")


def _limb_velocity(q_arr: np.ndarray, dt: float) -> np.ndarray:
    qd = np.empty(len(q_arr))
    qd[0] = 0.0
    qd[1:] = np.diff(q_arr) / dt
    return qd


def _run_gait_loop(sc: ScenarioConfig, t_arr, q_r_arr, q_l_arr,
                   onset_index: int, do_reset: bool) -> Trace:
    dt = sc.dt
    n = len(t_arr)
    ts = t_arr.tolist()
    qs = (q_r_arr.tolist(), q_l_arr.tolist())
    limb_r = limb_trajectory(q_r_arr, dt, sc.limb_smoothing_s)
    limb_l = limb_trajectory(q_l_arr, dt, sc.limb_smoothing_s)
    q_limb = (limb_r.tolist(), limb_l.tolist())
    qds = (_limb_velocity(limb_r, dt).tolist(),
           _limb_velocity(limb_l, dt).tolist())
    # the left leg runs half a stride behind the right, so its pool starts
    # with harmonic phases at multiples of pi instead of zero
    controllers = (JointController(sc.make_bank(0.0), sc.control),
                   JointController(sc.make_bank(math.pi), sc.control))
    act = sc.actuator
    # motors start aligned with the limb, centered in the dead zone
    motor_q = [q_limb[0][0], q_limb[1][0]]
    motor_qd = [0.0, 0.0]

    trace = Trace(("right", "left"), sc.n_harmonics)
    col = trace.columns
    t_col = col["t"].append
    n_alpha = sc.n_harmonics
    joint_cols = []
    for j, name in enumerate(("right", "left")):
        joint_cols.append(tuple(col[f"{g}_{name}"].append for g in (
            "q", "q_hat", "q_motor", "p", "omega", "tau_t", "tau_a", "w",
            "active", "tau_total")) + tuple(
                col[f"alpha{i}_{name}"].append for i in range(n_alpha + 1)))

    omega0 = sc.omega0
    for i in range(n):
        if do_reset and i == onset_index:
            controllers[0].reset(omega0)
            controllers[1].reset(omega0)
        t = ts[i]
        t_col(t)
        for j in (0, 1):
            ctrl = controllers[j]
            q = qs[j][i]
            qm = motor_q[j]
            frame = ctrl.tick(t, q, qm, dt)
            bank = ctrl.bank
            (c_q, c_qhat, c_qm, c_p, c_om, c_tt, c_ta, c_w, c_act, c_tot,
             *c_alphas) = joint_cols[j]
            c_q(q)
            c_qhat(bank.last_estimate)
            c_qm(qm)
            c_p(bank.last_perturbation)
            c_om(bank.omega)
            c_tt(frame.tau_transparency)
            c_ta(frame.tau_assist_raw)
            c_w(frame.weight)
            c_act(1 if frame.active else 0)
            c_tot(frame.tau_total)
            c_alphas[0](bank.alpha0)
            alphas = bank._alpha
            for k in range(n_alpha):
                c_alphas[k + 1](alphas[k])
            motor_q[j], motor_qd[j] = motor_side_step(
                qm, motor_qd[j], act, frame.tau_total,
                q_limb[j][i], qds[j][i], dt)
    return trace


def _run_pendulum(sc: ScenarioConfig) -> Trace:
    dt = sc.dt
    n = sample_count(sc.duration, sc.dt)
    ctrl = JointController(sc.make_bank(), sc.control)
    eq = sc.pendulum.equilibrium_offset
    q0 = eq + sc.release_offset
    state = ActuatorState(q_out=q0, qd_out=0.0, q_motor=q0, qd_motor=0.0)

    trace = Trace(("pendulum",), sc.n_harmonics)
    col = trace.columns
    for i in range(n):
        t = i * dt
        frame = ctrl.tick(t, state.q_out, state.q_motor, dt)
        bank = ctrl.bank
        col["t"].append(t)
        col["q_pendulum"].append(state.q_out)
        col["q_hat_pendulum"].append(bank.last_estimate)
        col["q_motor_pendulum"].append(state.q_motor)
        col["p_pendulum"].append(bank.last_perturbation)
        col["omega_pendulum"].append(bank.omega)
        col["alpha0_pendulum"].append(bank.alpha0)
        for k, a in enumerate(bank.alpha):
            col[f"alpha{k + 1}_pendulum"].append(a)
        col["tau_t_pendulum"].append(frame.tau_transparency)
        col["tau_a_pendulum"].append(frame.tau_assist_raw)
        col["w_pendulum"].append(frame.weight)
        col["active_pendulum"].append(1 if frame.active else 0)
        col["tau_total_pendulum"].append(frame.tau_total)
        state = pendulum_actuator_step(state, sc.actuator, sc.pendulum,
                                       frame.tau_total, dt)
    return trace


def _final_active_streak_start(active: list) -> int:
    """Index where the trailing run of active ticks begins, -1 if inactive."""
    if not active or not active[-1]:
        return -1
    i = len(active) - 1
    while i > 0 and active[i - 1]:
        i -= 1
    return i


def _cycle_boundaries_from_signal(t: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Cycle boundary times from upward zero crossings of the detrended signal."""
    x = q - q.mean()
    up = np.nonzero((x[:-1] < 0.0) & (x[1:] >= 0.0))[0]
    return t[up + 1]


def compute_metrics(trace: Trace, sc: ScenarioConfig, phase: np.ndarray | None,
                    onset_index: int) -> dict[str, object]:
    """Flat summary metrics for one run."""
    t = trace.array("t")
    metrics: dict[str, object] = {
        "scenario.kind": sc.kind,
        "scenario.dt": sc.dt,
        "scenario.duration": sc.duration,
        "scenario.seed": sc.seed,
        "scenario.n_ticks": trace.n_rows,
        "scenario.walk_onset_time": float(t[onset_index]) if phase is not None else 0.0,
    }
    synthetic = phase is not None
    omega_truth = None
    if synthetic:
        omega_truth = TWO_PI * sc.pattern.cadence_profile.value(float(t[-1]))
    limit = sc.control.tau_limit
    for joint in trace.joints:
        q = trace.array(f"q_{joint}")
        q_hat = trace.array(f"q_hat_{joint}")
        active = trace.column(f"active_{joint}")
        tau = trace.array(f"tau_total_{joint}")
        key = joint

        start = _final_active_streak_start(active)
        deactivations = sum(1 for a, b in zip(active[:-1], active[1:])
                            if a and not b)
        if start >= 0:
            t_act = float(t[start])
            if synthetic:
                ph = float(phase[start])
                cycle = int(ph // TWO_PI) + 1 if ph > 0.0 else 0
            else:
                boundaries = _cycle_boundaries_from_signal(t, q)
                cycle = 1 + int(np.count_nonzero(boundaries <= t_act))
            window = slice(start, None)
            err = q_hat[window] - q[window]
            rmse = float(np.sqrt(np.mean(err * err)))
            p2p = float(q[window].max() - q[window].min())
            ratio = rmse / p2p if p2p > 0.0 else math.inf
        else:
            t_act = -1.0
            cycle = 0
            rmse = math.inf
            ratio = math.inf
        metrics[f"{key}.activation_time_s"] = t_act
        metrics[f"{key}.activation_cycle"] = cycle
        metrics[f"{key}.deactivations"] = deactivations
        metrics[f"{key}.rmse_post_activation"] = rmse
        metrics[f"{key}.rmse_ratio"] = ratio
        omega_final = float(trace.array(f"omega_{joint}")[-1])
        metrics[f"{key}.omega_final"] = omega_final
        if omega_truth is not None:
            metrics[f"{key}.omega_rel_error"] = abs(omega_final - omega_truth) / omega_truth
        metrics[f"{key}.saturation_ticks"] = int(np.count_nonzero(np.abs(tau) >= limit))
        metrics[f"{key}.tau_max_abs"] = float(np.max(np.abs(tau)))
    if sc.kind == "pendulum_release":
        q_end = float(trace.array("q_pendulum")[-1])
        eq = sc.pendulum.equilibrium_offset
        metrics["pendulum.final_angle_rad"] = q_end
        metrics["pendulum.final_angle_error_rad"] = abs(q_end - eq)
    return metrics


def run_scenario(sc: ScenarioConfig) -> tuple[Trace, dict[str, object]]:
    """Run one configured scenario and compute its metrics."""
    if sc.kind == "pendulum_release":
        trace = _run_pendulum(sc)
        return trace, compute_metrics(trace, sc, None, 0)
    if sc.kind == "csv_replay":
        t, q_r, q_l = read_input_csv(sc.input_path, sc.dt)
        trace = _run_gait_loop(sc, t, q_r, q_l, 0, False)
        return trace, compute_metrics(trace, sc, None, 0)
    t, q_r, q_l, phase, onset = generate_input_arrays(sc)
    do_reset = sc.kind == "stand_to_walk" and sc.reset_at_walk_onset
    trace = _run_gait_loop(sc, t, q_r, q_l, onset, do_reset)
    return trace, compute_metrics(trace, sc, phase, onset)


def replay_csv(path: str, sc: ScenarioConfig) -> tuple[Trace, dict[str, object]]:
    """Run the replay pipeline on an input CSV."""
    if not os.path.exists(path):
        raise ConfigError(f"input CSV does not exist: {path!r}")
    return run_scenario(replace(sc, kind="csv_replay", input_path=path))
