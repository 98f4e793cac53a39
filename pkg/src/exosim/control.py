"""Per-joint torque controller.

Combines two components: a transparency torque proportional to the
backlash displacement between output side and motor side, and an
assistance torque pulling the joint toward the oscillator pool's
prediction of its own future angle.  Assistance is gated by a tanh
weight on a low-pass envelope of the reconstruction error and by a
per-joint activation state machine with hysteresis, so it only acts
while the learned signal tracks the measured one.  The fused torque is
saturated to a configurable limit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidParameterError, NonFiniteInputError
from .oscillator import TWO_PI, OscillatorBank


@dataclass(frozen=True)
class ControlParams:
    """Gains, gating shape and activation hysteresis for one joint."""

    k_t: float
    k_a: float
    delta_t: float
    p_max: float
    epsilon: float
    tau_limit: float
    envelope_time_constant: float
    activate_threshold: float
    deactivate_threshold: float
    arm_duration_cycles: float

    def __post_init__(self):
        vals = (self.k_t, self.k_a, self.delta_t, self.p_max, self.epsilon,
                self.tau_limit, self.envelope_time_constant,
                self.activate_threshold, self.deactivate_threshold,
                self.arm_duration_cycles)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParameterError("control parameters must be finite")
        if self.k_t < 0.0 or self.k_a < 0.0:
            raise InvalidParameterError("virtual stiffnesses must be >= 0")
        if self.delta_t < 0.0:
            raise InvalidParameterError(f"delta_t must be >= 0, got {self.delta_t}")
        if self.p_max <= 0.0:
            raise InvalidParameterError(f"p_max must be > 0, got {self.p_max}")
        if self.epsilon <= 0.0:
            raise InvalidParameterError(f"epsilon must be > 0, got {self.epsilon}")
        if self.tau_limit <= 0.0:
            raise InvalidParameterError(f"tau_limit must be > 0, got {self.tau_limit}")
        if self.envelope_time_constant < 0.0:
            raise InvalidParameterError("envelope_time_constant must be >= 0")
        if not 0.0 <= self.deactivate_threshold < self.activate_threshold <= 1.0:
            raise InvalidParameterError(
                f"need 0 <= deactivate < activate <= 1, got "
                f"{self.deactivate_threshold} / {self.activate_threshold}")
        if self.arm_duration_cycles < 0.0:
            raise InvalidParameterError("arm_duration_cycles must be >= 0")


class Activation(enum.Enum):
    """Assistance switching state of one joint."""

    INACTIVE = "inactive"
    ARMING = "arming"
    ACTIVE = "active"


@dataclass(frozen=True)
class ControlFrame:
    """Controller output for one joint at one tick."""

    t: float
    tau_transparency: float
    tau_assist_raw: float
    weight: float
    active: bool
    tau_total: float


def transparency_torque(q_out: float, q_motor: float, k_t: float) -> float:
    """Virtual-stiffness torque on the backlash displacement."""
    return k_t * (q_out - q_motor)


def assistance_torque(bank: OscillatorBank, k_a: float, delta_t: float) -> float:
    """Torque toward the pool's prediction delta_t ahead of its estimate."""
    return k_a * (bank.predict(delta_t) - bank.estimate())


def gating_weight(p_envelope: float, p_max: float, epsilon: float) -> float:
    """Smooth gate in (0, 1), 0.5 at p_envelope == p_max, falling beyond."""
    if epsilon <= 0.0:
        raise InvalidParameterError(f"epsilon must be > 0, got {epsilon!r}")
    if p_envelope < 0.0:
        raise InvalidParameterError(f"p_envelope must be >= 0, got {p_envelope!r}")
    return 0.5 * (1.0 - math.tanh((p_envelope - p_max) / epsilon))


def fuse_torques(tau_transparency: float, tau_assist_raw: float, weight: float,
                 active: bool, tau_limit: float) -> float:
    """Sum of transparency and gated assistance, saturated to tau_limit."""
    tau = tau_transparency + (weight * tau_assist_raw if active else 0.0)
    if tau > tau_limit:
        return tau_limit
    if tau < -tau_limit:
        return -tau_limit
    return tau


class JointController:
    """Stateful controller for one joint: oscillator pool plus gating.

    Each tick steps the pool on the measured output angle, updates the
    error envelope and the activation machine, and returns the fused,
    saturated torque command for the motor side.
    """

    __slots__ = ("bank", "params", "p_envelope", "activation",
                 "arming_elapsed", "last_frame")

    def __init__(self, bank: OscillatorBank, params: ControlParams):
        self.bank = bank
        self.params = params
        self.p_envelope = 0.0
        self.activation = Activation.INACTIVE
        self.arming_elapsed = 0.0
        self.last_frame: ControlFrame | None = None

    def reset(self, omega0: float) -> None:
        """Reset pool and switching state to initial conditions."""
        self.bank.reset(omega0)
        self.p_envelope = 0.0
        self.activation = Activation.INACTIVE
        self.arming_elapsed = 0.0
        self.last_frame = None

    def tick(self, t: float, q_out: float, q_motor: float, dt: float) -> ControlFrame:
        """Advance one control period and return the commanded frame.

        The activation machine moves Inactive -> Arming on the first tick
        with weight at or above the activate threshold, reaches Active
        once the weight has held there for arm_duration_cycles learned
        fundamental periods without interruption, and drops straight to
        Inactive from either state when the weight falls below its
        threshold (deactivate for Active, activate for Arming).
        """
        if not math.isfinite(q_motor):
            raise NonFiniteInputError(f"non-finite q_motor: {q_motor!r}")
        params = self.params
        bank = self.bank
        p = bank.step(q_out, dt)

        tc = params.envelope_time_constant
        if tc > dt:
            self.p_envelope += (dt / tc) * (abs(p) - self.p_envelope)
        else:
            self.p_envelope = abs(p)
        weight = 0.5 * (1.0 - math.tanh((self.p_envelope - params.p_max)
                                        / params.epsilon))

        state = self.activation
        if state is Activation.ACTIVE:
            if weight < params.deactivate_threshold:
                state = Activation.INACTIVE
        elif weight >= params.activate_threshold:
            state = Activation.ARMING
            self.arming_elapsed += dt
            if self.arming_elapsed >= params.arm_duration_cycles * (TWO_PI / bank.omega):
                state = Activation.ACTIVE
                self.arming_elapsed = 0.0
        else:
            state = Activation.INACTIVE
            self.arming_elapsed = 0.0
        self.activation = state

        tau_t = params.k_t * (q_out - q_motor)
        tau_a = params.k_a * (bank.predict(params.delta_t) - bank.estimate())
        active = state is Activation.ACTIVE
        tau = tau_t + (weight * tau_a if active else 0.0)
        limit = params.tau_limit
        if tau > limit:
            tau = limit
        elif tau < -limit:
            tau = -limit
        frame = ControlFrame(t=t, tau_transparency=tau_t, tau_assist_raw=tau_a,
                             weight=weight, active=active, tau_total=tau)
        self.last_frame = frame
        return frame
