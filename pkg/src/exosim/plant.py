"""Mechanical models the controller acts on.

Two subsystems: a two-inertia actuator whose motor side and output side
couple only through a gear-backlash dead zone (outside the dead zone a
stiff one-sided spring-damper engages), and a gravity pendulum with an
eccentric equilibrium used for the transparency demonstration.  Motor
quantities are expressed at the output side throughout, with the gear
ratio folded into the reflected motor inertia.

Integration is semi-implicit Euler (velocities first, then positions
with the new velocities), with every state-dependent force folded into
the velocity solve: viscous friction, the contact damper, the contact
spring through its dt-scaled impedance, and the local gravity gradient.
Evaluating forces at the end of the step keeps the stiff contact stable
at the 1 ms default step and makes each step dissipative, so gear-face
engagements neither bounce numerically nor pump energy; the price is a
little extra numerical damping inside contacts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError, NonFiniteInputError


def _require_finite(**values) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise NonFiniteInputError(f"non-finite {name}: {v!r}")


@dataclass(frozen=True)
class ActuatorParams:
    """Two-inertia gear-backlash actuator parameters (output-side frame).

    gear_ratio is motor turns per output turn and is informational once
    the motor inertia is given reflected to the output side.
    backlash_half_width is the dead-zone half width at the output [rad].
    """

    gear_ratio: float
    backlash_half_width: float
    motor_side_inertia: float
    output_side_inertia: float
    motor_side_viscous_friction: float
    output_side_viscous_friction: float
    contact_stiffness: float
    contact_damping: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (
                self.gear_ratio, self.backlash_half_width, self.motor_side_inertia,
                self.output_side_inertia, self.motor_side_viscous_friction,
                self.output_side_viscous_friction, self.contact_stiffness,
                self.contact_damping)):
            raise InvalidParameterError("actuator parameters must be finite")
        if self.gear_ratio <= 0.0:
            raise InvalidParameterError(f"gear_ratio must be > 0, got {self.gear_ratio}")
        if self.backlash_half_width <= 0.0:
            raise InvalidParameterError(
                f"backlash_half_width must be > 0, got {self.backlash_half_width}")
        if self.motor_side_inertia <= 0.0 or self.output_side_inertia <= 0.0:
            raise InvalidParameterError("inertias must be > 0")
        if (self.motor_side_viscous_friction < 0.0
                or self.output_side_viscous_friction < 0.0):
            raise InvalidParameterError("viscous frictions must be >= 0")
        if self.contact_stiffness <= 0.0:
            raise InvalidParameterError(
                f"contact_stiffness must be > 0, got {self.contact_stiffness}")
        if self.contact_damping < 0.0:
            raise InvalidParameterError(
                f"contact_damping must be >= 0, got {self.contact_damping}")


@dataclass(frozen=True)
class ActuatorState:
    """Angles and velocities of one joint, motor expressed at output side."""

    q_out: float
    qd_out: float
    q_motor: float
    qd_motor: float


@dataclass(frozen=True)
class PendulumParams:
    """Gravity pendulum about a joint, equilibrium off the vertical.

    gravity_coefficient is mass * g * lever arm [N*m]; the restoring
    torque is -gravity_coefficient * sin(angle - equilibrium_offset).
    """

    inertia: float
    gravity_coefficient: float
    equilibrium_offset: float
    viscous_friction: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (
                self.inertia, self.gravity_coefficient, self.equilibrium_offset,
                self.viscous_friction)):
            raise InvalidParameterError("pendulum parameters must be finite")
        if self.inertia <= 0.0:
            raise InvalidParameterError(f"inertia must be > 0, got {self.inertia}")
        if self.gravity_coefficient <= 0.0:
            raise InvalidParameterError(
                f"gravity_coefficient must be > 0, got {self.gravity_coefficient}")
        if self.viscous_friction < 0.0:
            raise InvalidParameterError(
                f"viscous_friction must be >= 0, got {self.viscous_friction}")


def contact_torque(rel_angle: float, rel_velocity: float,
                   params: ActuatorParams) -> float:
    """Torque transmitted from output side to motor side through the gear.

    rel_angle = q_out - q_motor.  Zero inside the dead zone; outside it a
    spring-damper acts on the penetration beyond the dead-zone edge,
    clamped one-sided so gear faces can push but never pull.
    """
    hw = params.backlash_half_width
    if rel_angle > hw:
        f = params.contact_stiffness * (rel_angle - hw) \
            + params.contact_damping * rel_velocity
        return f if f > 0.0 else 0.0
    if rel_angle < -hw:
        f = params.contact_stiffness * (rel_angle + hw) \
            + params.contact_damping * rel_velocity
        return f if f < 0.0 else 0.0
    return 0.0


def _contact_spring(rel_angle: float, params: ActuatorParams) -> float:
    """Spring part of the contact law (penetration beyond the dead zone)."""
    hw = params.backlash_half_width
    if rel_angle > hw:
        return params.contact_stiffness * (rel_angle - hw)
    if rel_angle < -hw:
        return params.contact_stiffness * (rel_angle + hw)
    return 0.0


def _contact_sign_ok(rel_angle: float, f: float, hw: float) -> bool:
    """Gear faces push, never pull: force sign must match the engaged side."""
    if rel_angle > hw:
        return f > 0.0
    return f < 0.0


def _two_inertia_step(q_out: float, qd_out: float, q_motor: float,
                      qd_motor: float, inertia_out: float, viscous_out: float,
                      force_out: float, stiffness_out: float, tau_motor: float,
                      params: ActuatorParams, dt: float) -> ActuatorState:
    """Shared velocity update for two coupled free sides.

    force_out is the non-contact torque on the output side (drive or
    gravity) at the current state, stiffness_out its local restoring
    gradient (>= 0) folded implicitly into the output velocity.  The
    contact spring-damper acts on the end-of-step state, which turns
    into an extra dt-scaled impedance coupling the new velocities
    through a 2x2 linear system solved in closed form; if the resulting
    force would pull, the step is redone with the contact released.
    """
    rel = q_out - q_motor
    s = _contact_spring(rel, params)
    r_o = dt / inertia_out
    r_m = dt / params.motor_side_inertia
    b_o = viscous_out + dt * stiffness_out
    b_m = params.motor_side_viscous_friction
    in_contact = s != 0.0
    if in_contact:
        d = params.contact_damping + dt * params.contact_stiffness
        a11 = 1.0 + r_o * (b_o + d)
        a12 = -r_o * d
        a21 = -r_m * d
        a22 = 1.0 + r_m * (b_m + d)
        rhs1 = qd_out + r_o * (force_out - s)
        rhs2 = qd_motor + r_m * (tau_motor + s)
        det = a11 * a22 - a12 * a21
        qd_out_new = (rhs1 * a22 - a12 * rhs2) / det
        qd_motor_new = (a11 * rhs2 - a21 * rhs1) / det
        f = s + d * (qd_out_new - qd_motor_new)
        if not _contact_sign_ok(rel, f, params.backlash_half_width):
            in_contact = False
    if not in_contact:
        qd_out_new = (qd_out + r_o * force_out) / (1.0 + r_o * b_o)
        qd_motor_new = (qd_motor + r_m * tau_motor) / (1.0 + r_m * b_m)
    return ActuatorState(
        q_out=q_out + dt * qd_out_new,
        qd_out=qd_out_new,
        q_motor=q_motor + dt * qd_motor_new,
        qd_motor=qd_motor_new,
    )


def actuator_step(state: ActuatorState, params: ActuatorParams,
                  tau_motor: float, tau_user: float, dt: float) -> ActuatorState:
    """Advance both actuator sides by one semi-implicit Euler step.

    tau_user acts on the output side, tau_motor on the motor side; the
    coupling torque follows the backlash contact law.
    """
    if not dt > 0.0:
        raise InvalidParameterError(f"dt must be > 0, got {dt!r}")
    _require_finite(tau_motor=tau_motor, tau_user=tau_user)
    return _two_inertia_step(
        state.q_out, state.qd_out, state.q_motor, state.qd_motor,
        params.output_side_inertia, params.output_side_viscous_friction,
        tau_user, 0.0, tau_motor, params, dt)


def motor_side_step(q_motor: float, qd_motor: float, params: ActuatorParams,
                    tau_motor: float, q_out: float, qd_out: float,
                    dt: float) -> tuple[float, float]:
    """Advance only the motor side against a prescribed output motion.

    Used when the limb dominates the interaction and the output angle is
    given kinematically; returns (q_motor, qd_motor) after one step.
    """
    if not math.isfinite(tau_motor):
        raise NonFiniteInputError(f"non-finite tau_motor: {tau_motor!r}")
    rel = q_out - q_motor
    s = _contact_spring(rel, params)
    r_m = dt / params.motor_side_inertia
    b_m = params.motor_side_viscous_friction
    if s != 0.0:
        d = params.contact_damping + dt * params.contact_stiffness
        qd_new = (qd_motor + r_m * (tau_motor + s + d * qd_out)) \
            / (1.0 + r_m * (b_m + d))
        f = s + d * (qd_out - qd_new)
        if _contact_sign_ok(rel, f, params.backlash_half_width):
            return q_motor + dt * qd_new, qd_new
    qd_new = (qd_motor + r_m * tau_motor) / (1.0 + r_m * b_m)
    return q_motor + dt * qd_new, qd_new


def _gravity_terms(angle: float, params: PendulumParams) -> tuple[float, float]:
    """Gravity torque at the angle and its implicit restoring stiffness.

    The stiffness is the linearized gradient mgl*cos, clamped at zero on
    the far side of horizontal where the gradient destabilizes instead
    of restoring and no longer belongs in the implicit divisor.
    """
    dev = angle - params.equilibrium_offset
    force = -params.gravity_coefficient * math.sin(dev)
    stiffness = params.gravity_coefficient * math.cos(dev)
    return force, stiffness if stiffness > 0.0 else 0.0


def pendulum_step(angle: float, velocity: float, params: PendulumParams,
                  tau_applied: float, dt: float) -> tuple[float, float]:
    """One semi-implicit Euler step of the gravity pendulum."""
    if not dt > 0.0:
        raise InvalidParameterError(f"dt must be > 0, got {dt!r}")
    _require_finite(angle=angle, velocity=velocity, tau_applied=tau_applied)
    force, stiffness = _gravity_terms(angle, params)
    r = dt / params.inertia
    velocity = (velocity + r * (force + tau_applied)) \
        / (1.0 + r * (params.viscous_friction + dt * stiffness))
    return angle + dt * velocity, velocity


def pendulum_energy(angle: float, velocity: float, params: PendulumParams) -> float:
    """Mechanical energy relative to rest at the equilibrium angle [J].

    The potential term uses 2*sin(x/2)**2 = 1 - cos(x), which keeps its
    relative accuracy near the equilibrium where the subtraction form
    cancels catastrophically.
    """
    half = 0.5 * (angle - params.equilibrium_offset)
    s = math.sin(half)
    return (0.5 * params.inertia * velocity * velocity
            + 2.0 * params.gravity_coefficient * s * s)


def actuator_energy(state: ActuatorState, params: ActuatorParams) -> float:
    """Kinetic plus stored contact-spring energy of the actuator [J]."""
    e = (0.5 * params.motor_side_inertia * state.qd_motor ** 2
         + 0.5 * params.output_side_inertia * state.qd_out ** 2)
    pen = abs(state.q_out - state.q_motor) - params.backlash_half_width
    if pen > 0.0:
        e += 0.5 * params.contact_stiffness * pen * pen
    return e


def pendulum_actuator_step(state: ActuatorState, act: ActuatorParams,
                           pend: PendulumParams, tau_motor: float,
                           dt: float) -> ActuatorState:
    """Advance a pendulum output side coupled to the motor by backlash.

    The output side uses the pendulum inertia, friction and gravity in
    place of the actuator's output-side parameters; q_out is the pendulum
    angle.
    """
    if not dt > 0.0:
        raise InvalidParameterError(f"dt must be > 0, got {dt!r}")
    _require_finite(tau_motor=tau_motor)
    gravity, stiffness = _gravity_terms(state.q_out, pend)
    return _two_inertia_step(
        state.q_out, state.qd_out, state.q_motor, state.qd_motor,
        pend.inertia, pend.viscous_friction, gravity, stiffness,
        tau_motor, act, dt)
