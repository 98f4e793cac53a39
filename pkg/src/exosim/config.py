"""Flat key-value configuration with dotted section keys.

Config files are plain text: one ``section.key = value`` per line, full
line comments starting with ``#``, blank lines ignored.  The package
ships a complete defaults file; a user file overrides individual keys
and may not introduce unknown ones.  Values are typed by a fixed schema
(float, int, bool or string).  Profiles and harmonic lists are encoded
as strings of comma-separated pairs, e.g. ``0:0.8, 10:1.2``.
"""

from __future__ import annotations

import math
from importlib import resources

from .errors import ConfigError
from .gait import PiecewiseLinear

# key -> (type tag, short description used by docs and error messages)
SCHEMA: dict[str, tuple[str, str]] = {
    "scenario.kind": ("str", "stand_to_walk | constant_gait | speed_ramp | pendulum_release | csv_replay"),
    "scenario.dt": ("float", "simulation step [s], in (0, 0.01]"),
    "scenario.duration": ("float", "simulated time [s]"),
    "scenario.seed": ("int", "seed for synthetic measurement noise"),
    "scenario.stand_duration": ("float", "standing phase before walk onset [s]"),
    "scenario.ramp_duration": ("float", "amplitude ramp after walk onset [s]"),
    "scenario.reset_at_walk_onset": ("bool", "reset controllers when walking starts"),
    "scenario.limb_smoothing_s": ("float", "zero-phase smoothing window [s] recovering the limb trajectory the plant follows from the measured angles (0 = plant follows raw measurement)"),
    "scenario.input_path": ("str", "input CSV for csv_replay (empty = unset)"),
    "scenario.out_dir": ("str", "default output directory"),
    "gait.harmonics": ("str", "stride harmonics as amplitude:phase pairs [rad]"),
    "gait.offset": ("float", "mean hip angle [rad]"),
    "gait.cadence_points": ("str", "cadence profile as time:hz pairs"),
    "gait.amplitude_points": ("str", "amplitude scale profile as time:scale pairs"),
    "gait.noise_std": ("float", "measurement noise std [rad]"),
    "oscillator.n_harmonics": ("int", "pool size N"),
    "oscillator.omega0": ("float", "initial fundamental frequency [rad/s]"),
    "oscillator.kappa_phi": ("float", "phase learning gain"),
    "oscillator.kappa_omega": ("float", "frequency learning gain"),
    "oscillator.kappa_alpha": ("float", "amplitude learning gain"),
    "oscillator.omega_min": ("float", "fundamental frequency lower bound [rad/s]"),
    "oscillator.omega_max": ("float", "fundamental frequency upper bound [rad/s]"),
    "oscillator.alpha_abs_max": ("float", "harmonic amplitude cap [rad]"),
    "oscillator.alpha0_min": ("float", "offset coefficient lower bound [rad]"),
    "oscillator.alpha0_max": ("float", "offset coefficient upper bound [rad]"),
    "control.k_t": ("float", "transparency virtual stiffness [N*m/rad]"),
    "control.k_a": ("float", "assistance virtual stiffness [N*m/rad]"),
    "control.delta_t": ("float", "prediction horizon [s]"),
    "control.p_max": ("float", "allowed reconstruction-error envelope [rad]"),
    "control.epsilon": ("float", "gating steepness [rad]"),
    "control.tau_limit": ("float", "total torque saturation [N*m]"),
    "control.envelope_time_constant": ("float", "error envelope low-pass [s]"),
    "control.activate_threshold": ("float", "weight level that starts arming"),
    "control.deactivate_threshold": ("float", "weight level that drops assistance"),
    "control.arm_duration_cycles": ("float", "sustained cycles required to activate"),
    "actuator.gear_ratio": ("float", "motor turns per output turn"),
    "actuator.backlash_half_width": ("float", "dead-zone half width [rad]"),
    "actuator.motor_side_inertia": ("float", "motor inertia at output side [kg*m^2]"),
    "actuator.output_side_inertia": ("float", "output side inertia [kg*m^2]"),
    "actuator.motor_side_viscous_friction": ("float", "motor viscous friction [N*m*s/rad]"),
    "actuator.output_side_viscous_friction": ("float", "output viscous friction [N*m*s/rad]"),
    "actuator.contact_stiffness": ("float", "gear-face contact stiffness [N*m/rad]"),
    "actuator.contact_damping": ("float", "gear-face contact damping [N*m*s/rad]"),
    "pendulum.inertia": ("float", "leg inertia about the joint [kg*m^2]"),
    "pendulum.gravity_coefficient": ("float", "mass*g*lever [N*m]"),
    "pendulum.equilibrium_offset": ("float", "equilibrium angle off vertical [rad]"),
    "pendulum.viscous_friction": ("float", "joint viscous friction [N*m*s/rad]"),
    "pendulum.release_offset": ("float", "release angle above equilibrium [rad]"),
    "perturb.enabled": ("bool", "inject a first-cycle transient"),
    "perturb.joint": ("str", "which joint gets the transient: right | left"),
    "perturb.amplitude": ("float", "transient first-harmonic boost [rad]"),
    "perturb.cycles": ("float", "transient window length [gait cycles]"),
    "perturb.fade_cycles": ("float", "transient fade-out length [gait cycles]"),
    "tune.kappa_phi_grid": ("str", "comma-separated kappa_phi candidates"),
    "tune.kappa_omega_grid": ("str", "comma-separated kappa_omega candidates"),
    "tune.kappa_alpha_grid": ("str", "comma-separated kappa_alpha candidates"),
    "tune.dt": ("float", "simulation step used during tuning [s]"),
    "tune.duration": ("float", "simulated time per tuning run [s]"),
    "output.plot_decimation": ("int", "keep every nth sample in plots"),
}


def parse_kv_text(text: str, source: str) -> dict[str, str]:
    """Parse ``key = value`` lines into a raw string mapping."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key = key.strip()
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        out[key] = value.strip()
    return out


def _convert(key: str, raw: str):
    kind = SCHEMA[key][0]
    try:
        if kind == "float":
            v = float(raw)
            if not math.isfinite(v):
                raise ValueError("non-finite")
            return v
        if kind == "int":
            return int(raw)
        if kind == "bool":
            low = raw.lower()
            if low in ("true", "yes", "on", "1"):
                return True
            if low in ("false", "no", "off", "0"):
                return False
            raise ValueError("not a boolean")
        return raw
    except ValueError as exc:
        raise ConfigError(f"key {key!r}: cannot parse {raw!r} as {kind} ({exc})") from None


def load_defaults() -> dict[str, object]:
    """Typed mapping of the packaged defaults file."""
    text = resources.files("exosim").joinpath("data/defaults.cfg").read_text()
    raw = parse_kv_text(text, "defaults.cfg")
    missing = set(SCHEMA) - set(raw)
    extra = set(raw) - set(SCHEMA)
    if missing or extra:
        raise ConfigError(
            f"defaults.cfg out of sync with schema: missing {sorted(missing)}, "
            f"extra {sorted(extra)}")
    return {k: _convert(k, v) for k, v in raw.items()}


def load_config(path: str | None = None) -> dict[str, object]:
    """Defaults overlaid with the user file at path (if given)."""
    cfg = load_defaults()
    if path is None:
        return cfg
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    raw = parse_kv_text(text, path)
    unknown = set(raw) - set(SCHEMA)
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
    for k, v in raw.items():
        cfg[k] = _convert(k, v)
    return cfg


def _parse_pairs(spec: str, what: str) -> list[tuple[float, float]]:
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        left, sep, right = chunk.partition(":")
        if not sep:
            raise ConfigError(f"{what}: expected 'a:b' pair, got {chunk!r}")
        try:
            pairs.append((float(left), float(right)))
        except ValueError:
            raise ConfigError(f"{what}: cannot parse pair {chunk!r}") from None
    if not pairs:
        raise ConfigError(f"{what}: no pairs in {spec!r}")
    return pairs


def parse_profile(spec: str, what: str) -> PiecewiseLinear:
    """Build a piecewise-linear profile from a 'time:value, ...' string."""
    return PiecewiseLinear(_parse_pairs(spec, what))


def parse_harmonics(spec: str) -> tuple[tuple[float, float], ...]:
    """Parse 'amplitude:phase, ...' harmonic descriptions."""
    return tuple(_parse_pairs(spec, "gait.harmonics"))


def parse_grid(spec: str, what: str) -> tuple[float, ...]:
    """Parse a comma-separated list of positive floats."""
    vals = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            vals.append(float(chunk))
        except ValueError:
            raise ConfigError(f"{what}: cannot parse {chunk!r}") from None
    if not vals:
        raise ConfigError(f"{what}: empty grid")
    return tuple(vals)
