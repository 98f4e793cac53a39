"""Pool of adaptive oscillators for online learning of quasi-periodic signals.

N phase oscillators run at integer multiples of a shared fundamental
frequency and are driven by the reconstruction error, so the pool acts as
an online Fourier-series decomposition of its input: the fundamental
frequency, the per-harmonic phases and amplitudes, and a constant offset
are all adapted continuously.  Integration is explicit forward Euler at a
fixed, small step; all learned parameters are hard-clamped into
configurable bounds after every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError, NonFiniteInputError

TWO_PI = 2.0 * math.pi

# Explicit Euler above this step is not trustworthy for gait-band gains;
# refuse rather than silently degrade.
MAX_STEP_DT = 0.01


def wrap_phase(x: float) -> float:
    """Wrap an angle to [0, 2*pi)."""
    x %= TWO_PI
    # float modulo can land exactly on the upper edge for tiny negatives
    return x if x < TWO_PI else 0.0


@dataclass(frozen=True)
class OscillatorGains:
    """Learning gains for the phase, frequency and amplitude updates.

    kappa_phi drives the per-oscillator phase correction, kappa_omega the
    fundamental-frequency correction, kappa_alpha the offset and amplitude
    corrections.  All must be strictly positive and finite.
    """

    kappa_phi: float
    kappa_omega: float
    kappa_alpha: float

    def __post_init__(self):
        for name in ("kappa_phi", "kappa_omega", "kappa_alpha"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise InvalidParameterError(f"{name} must be positive and finite, got {v!r}")


@dataclass(frozen=True)
class ParameterBounds:
    """Hard limits applied to the learned parameters after every step.

    omega_min/omega_max bound the fundamental frequency [rad/s],
    alpha_abs_max caps each harmonic amplitude magnitude [rad], and
    alpha0_min/alpha0_max bound the constant offset [rad].
    """

    omega_min: float
    omega_max: float
    alpha_abs_max: float
    alpha0_min: float
    alpha0_max: float

    def __post_init__(self):
        vals = (self.omega_min, self.omega_max, self.alpha_abs_max,
                self.alpha0_min, self.alpha0_max)
        if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in vals):
            raise InvalidParameterError(f"bounds must be finite, got {vals!r}")
        if not 0.0 < self.omega_min < self.omega_max:
            raise InvalidParameterError(
                f"need 0 < omega_min < omega_max, got [{self.omega_min}, {self.omega_max}]")
        if self.alpha_abs_max <= 0.0:
            raise InvalidParameterError(f"alpha_abs_max must be > 0, got {self.alpha_abs_max}")
        if self.alpha0_min >= self.alpha0_max:
            raise InvalidParameterError(
                f"need alpha0_min < alpha0_max, got [{self.alpha0_min}, {self.alpha0_max}]")


class OscillatorBank:
    """State of an N-harmonic adaptive oscillator pool.

    The bank tracks the fundamental frequency ``omega``, one phase per
    harmonic, the offset ``alpha0`` and one sine amplitude per harmonic.
    ``step`` advances the whole pool by one sample; ``estimate`` returns
    the current signal reconstruction and ``predict`` extrapolates it at
    the learned frequency with frozen coefficients.

    A bank may be handed between threads, but a single instance must only
    be stepped by one thread at a time.
    """

    __slots__ = ("n_harmonics", "omega", "alpha0", "gains", "bounds",
                 "stride_phase", "last_perturbation", "last_estimate",
                 "_phi", "_alpha")

    def __init__(self, n_harmonics: int, omega0: float,
                 gains: OscillatorGains, bounds: ParameterBounds,
                 stride_phase: float = 0.0):
        if not isinstance(n_harmonics, int) or n_harmonics < 1:
            raise InvalidParameterError(f"n_harmonics must be an int >= 1, got {n_harmonics!r}")
        if not (math.isfinite(omega0) and bounds.omega_min <= omega0 <= bounds.omega_max):
            raise InvalidParameterError(
                f"omega0={omega0!r} outside [{bounds.omega_min}, {bounds.omega_max}]")
        if not math.isfinite(stride_phase):
            raise InvalidParameterError(f"stride_phase must be finite, got {stride_phase!r}")
        self.n_harmonics = n_harmonics
        self.omega = float(omega0)
        self.alpha0 = 0.0
        self.gains = gains
        self.bounds = bounds
        self.stride_phase = float(stride_phase)
        self.last_perturbation = 0.0
        self.last_estimate = 0.0
        # harmonic i starts at i times the stride phase, so a pool watching
        # a signal known to run stride_phase ahead starts aligned with it
        self._phi = [wrap_phase((i + 1) * stride_phase) for i in range(n_harmonics)]
        self._alpha = [0.0] * n_harmonics

    @property
    def phi(self) -> tuple[float, ...]:
        """Phases of the harmonics, wrapped to [0, 2*pi)."""
        return tuple(self._phi)

    @property
    def alpha(self) -> tuple[float, ...]:
        """Sine amplitudes of the harmonics [rad]."""
        return tuple(self._alpha)

    def estimate(self) -> float:
        """Current reconstruction: alpha0 + sum_i alpha_i * sin(phi_i)."""
        q = self.alpha0
        for a, ph in zip(self._alpha, self._phi):
            q += a * math.sin(ph)
        return q

    def predict(self, delta_t: float) -> float:
        """Reconstruction ``delta_t`` seconds ahead.

        Phases are advanced at the current learned frequency while the
        coefficients stay frozen; ``predict(0.0)`` equals ``estimate()``.
        """
        if not delta_t >= 0.0:
            raise InvalidParameterError(f"delta_t must be >= 0, got {delta_t!r}")
        q = self.alpha0
        omega = self.omega
        i = 1
        for a, ph in zip(self._alpha, self._phi):
            q += a * math.sin(ph + i * omega * delta_t)
            i += 1
        return q

    def step(self, q_measured: float, dt: float) -> float:
        """Advance the pool by one Euler step driven by one sample.

        The perturbation p = q_measured - estimate() is evaluated against
        the pre-step state and shared by all four update rules; the
        learned frequency and all coefficients are clamped into bounds
        afterwards and phases are wrapped to [0, 2*pi).  Returns p.
        """
        if not 0.0 < dt <= MAX_STEP_DT:
            raise InvalidParameterError(f"dt must be in (0, {MAX_STEP_DT}], got {dt!r}")
        phi = self._phi
        alpha = self._alpha
        sin_phi = [math.sin(ph) for ph in phi]
        qhat = self.alpha0
        for a, s in zip(alpha, sin_phi):
            qhat += a * s
        p = q_measured - qhat
        if not math.isfinite(p):
            raise NonFiniteInputError(
                f"non-finite oscillator input: q_measured={q_measured!r}, estimate={qhat!r}")

        g = self.gains
        b = self.bounds
        omega = self.omega
        kp = g.kappa_phi * p
        ka = g.kappa_alpha * p

        # all derivatives are evaluated at the pre-step state
        cos_phi = [math.cos(ph) for ph in phi]
        new_omega = omega + dt * (g.kappa_omega * p * cos_phi[0])
        if new_omega < b.omega_min:
            new_omega = b.omega_min
        elif new_omega > b.omega_max:
            new_omega = b.omega_max

        a0 = self.alpha0 + dt * ka
        if a0 < b.alpha0_min:
            a0 = b.alpha0_min
        elif a0 > b.alpha0_max:
            a0 = b.alpha0_max

        cap = b.alpha_abs_max
        for i in range(self.n_harmonics):
            ph = phi[i] + dt * ((i + 1) * omega + kp * cos_phi[i])
            ph %= TWO_PI
            phi[i] = ph if ph < TWO_PI else 0.0
            a = alpha[i] + dt * (ka * sin_phi[i])
            if a < -cap:
                a = -cap
            elif a > cap:
                a = cap
            alpha[i] = a

        self.omega = new_omega
        self.alpha0 = a0
        self.last_perturbation = p
        self.last_estimate = qhat
        return p

    def reset(self, omega0: float) -> None:
        """Return to the initial state (zero coefficients, stride phases).

        Gains, bounds and the stride phase are retained; omega0 must lie
        within bounds.
        """
        b = self.bounds
        if not (math.isfinite(omega0) and b.omega_min <= omega0 <= b.omega_max):
            raise InvalidParameterError(
                f"omega0={omega0!r} outside [{b.omega_min}, {b.omega_max}]")
        self.omega = float(omega0)
        self.alpha0 = 0.0
        self.last_perturbation = 0.0
        self.last_estimate = 0.0
        for i in range(self.n_harmonics):
            self._phi[i] = wrap_phase((i + 1) * self.stride_phase)
            self._alpha[i] = 0.0

    def copy(self) -> "OscillatorBank":
        """Independent copy with identical state (gains/bounds shared)."""
        other = OscillatorBank.__new__(OscillatorBank)
        other.n_harmonics = self.n_harmonics
        other.omega = self.omega
        other.alpha0 = self.alpha0
        other.gains = self.gains
        other.bounds = self.bounds
        other.stride_phase = self.stride_phase
        other.last_perturbation = self.last_perturbation
        other.last_estimate = self.last_estimate
        other._phi = list(self._phi)
        other._alpha = list(self._alpha)
        return other

    def __repr__(self) -> str:
        return (f"OscillatorBank(N={self.n_harmonics}, omega={self.omega:.4f}, "
                f"alpha0={self.alpha0:.4f}, alpha={[round(a, 4) for a in self._alpha]})")
