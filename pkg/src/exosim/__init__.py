"""Desk-scale simulator of a backlash-transparent, oscillator-assisted
hip exoskeleton controller.

The library side exposes the adaptive oscillator pool, synthetic gait
generation, plant models and the per-joint controller; the harness side
runs configured closed-loop scenarios, computes metrics and emits
traces and plots.  The ``exosim`` console script wraps the harness.
"""

from .config import SCHEMA, load_config, load_defaults
from .control import (Activation, ControlFrame, ControlParams, JointController,
                      assistance_torque, fuse_torques, gating_weight,
                      transparency_torque)
from .errors import (ConfigError, CsvSchemaError, ExosimError,
                     InvalidParameterError, NoFeasiblePointError,
                     NonFiniteInputError)
from .gait import (GaitPattern, PiecewiseLinear, SignalSample, constant_profile,
                   default_gait_pattern, measurement_noise, stand_to_walk,
                   synth_series)
from .oscillator import (OscillatorBank, OscillatorGains, ParameterBounds,
                         wrap_phase)
from .plant import (ActuatorParams, ActuatorState, PendulumParams,
                    actuator_energy, actuator_step, contact_torque,
                    pendulum_actuator_step, pendulum_energy, pendulum_step)
from .scenario import (ScenarioConfig, Trace, compute_metrics, replay_csv,
                       run_scenario)
from .tuning import default_tuning_corpus, tune_gains

__version__ = "0.1.0"

__all__ = [
    "Activation", "ActuatorParams", "ActuatorState", "ConfigError",
    "ControlFrame", "ControlParams", "CsvSchemaError", "ExosimError",
    "GaitPattern", "InvalidParameterError", "JointController",
    "NoFeasiblePointError", "NonFiniteInputError", "OscillatorBank",
    "OscillatorGains", "ParameterBounds", "PendulumParams", "PiecewiseLinear",
    "ScenarioConfig", "SignalSample", "SCHEMA", "Trace", "actuator_energy",
    "actuator_step", "assistance_torque", "compute_metrics", "constant_profile",
    "contact_torque", "default_gait_pattern", "default_tuning_corpus",
    "fuse_torques", "gating_weight", "load_config", "load_defaults",
    "measurement_noise", "pendulum_actuator_step", "pendulum_energy",
    "pendulum_step", "replay_csv",
    "run_scenario", "stand_to_walk", "synth_series", "transparency_torque",
    "tune_gains", "wrap_phase",
]
