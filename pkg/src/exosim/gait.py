"""Synthetic quasi-periodic hip-angle trajectories.

Signals are truncated Fourier series of an instantaneous stride phase.
Cadence (stride frequency) and amplitude scale follow piecewise-linear
profiles over time, so the stride phase has an exact closed-form integral
and the generator's ground truth (frequency, harmonic content) is known
at every sample.  The left leg is the right leg advanced by half a
stride.  Measurement noise is additive white Gaussian, drawn in one shot
from a seeded generator, so a given pattern always produces bit-identical
series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError

TWO_PI = 2.0 * math.pi

CADENCE_MIN_HZ = 0.1
CADENCE_MAX_HZ = 3.0


class PiecewiseLinear:
    """Piecewise-linear profile of time with an exact running integral.

    Defined by (time, value) knots at strictly increasing times >= 0.
    Values are linearly interpolated between knots and held constant
    outside them.  ``integral(t)`` is the exact area under the profile
    from time 0 to t.
    """

    __slots__ = ("_t", "_v", "_slope", "_cum")

    def __init__(self, points):
        pts = [(float(t), float(v)) for t, v in points]
        if not pts:
            raise InvalidParameterError("profile needs at least one (time, value) point")
        ts = np.array([p[0] for p in pts])
        vs = np.array([p[1] for p in pts])
        if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(vs))):
            raise InvalidParameterError(f"profile points must be finite, got {pts!r}")
        if ts[0] < 0.0:
            raise InvalidParameterError(f"profile times must be >= 0, got {ts[0]}")
        if np.any(np.diff(ts) <= 0.0):
            raise InvalidParameterError("profile times must be strictly increasing")
        self._t = ts
        self._v = vs
        self._slope = np.diff(vs) / np.diff(ts) if len(pts) > 1 else np.zeros(0)
        # exact cumulative area from t=0 up to each knot (constant before
        # the first knot, trapezoids between knots)
        seg = np.diff(ts) * 0.5 * (vs[:-1] + vs[1:])
        self._cum = ts[0] * vs[0] + np.concatenate(([0.0], np.cumsum(seg)))

    @property
    def points(self) -> tuple[tuple[float, float], ...]:
        return tuple(zip(self._t.tolist(), self._v.tolist()))

    def value(self, t):
        """Profile value at time(s) t (scalar or array)."""
        out = np.interp(t, self._t, self._v)
        return out if isinstance(out, np.ndarray) else float(out)

    def integral(self, t):
        """Exact integral of the profile from 0 to t (scalar or array)."""
        tq = np.asarray(t, dtype=float)
        scalar = tq.ndim == 0
        tq = np.atleast_1d(tq)
        tk, vk, ck = self._t, self._v, self._cum
        idx = np.searchsorted(tk, tq, side="right") - 1
        out = np.empty_like(tq)
        before = idx < 0
        out[before] = vk[0] * tq[before]
        last = idx == len(tk) - 1
        out[last] = ck[-1] + vk[-1] * (tq[last] - tk[-1])
        inside = ~(before | last)
        if np.any(inside):
            i = idx[inside]
            dz = tq[inside] - tk[i]
            out[inside] = ck[i] + vk[i] * dz + 0.5 * self._slope[i] * dz * dz
        return float(out[0]) if scalar else out

    def min_value(self) -> float:
        return float(self._v.min())

    def max_value(self) -> float:
        return float(self._v.max())

    def __repr__(self) -> str:
        return f"PiecewiseLinear({list(self.points)!r})"


def constant_profile(value: float) -> PiecewiseLinear:
    """Profile that holds one value forever."""
    return PiecewiseLinear([(0.0, value)])


@dataclass(frozen=True)
class GaitPattern:
    """Parametric generator of two-leg quasi-periodic hip-angle signals.

    base_harmonics lists (amplitude [rad], phase offset [rad]) for stride
    harmonics 1..M.  cadence_profile maps time to stride frequency [Hz],
    amplitude_scale_profile maps time to a dimensionless amplitude factor.
    noise_std is the per-sample Gaussian noise level and seed makes the
    noise reproducible.
    """

    base_harmonics: tuple[tuple[float, float], ...]
    offset: float
    cadence_profile: PiecewiseLinear
    amplitude_scale_profile: PiecewiseLinear = field(
        default_factory=lambda: constant_profile(1.0))
    noise_std: float = 0.0
    seed: int = 0

    def __post_init__(self):
        harmonics = tuple((float(a), float(psi)) for a, psi in self.base_harmonics)
        if len(harmonics) < 1:
            raise InvalidParameterError("need at least one harmonic")
        for a, psi in harmonics:
            if not (math.isfinite(a) and math.isfinite(psi)):
                raise InvalidParameterError(f"non-finite harmonic ({a!r}, {psi!r})")
        object.__setattr__(self, "base_harmonics", harmonics)
        if not math.isfinite(self.offset):
            raise InvalidParameterError(f"offset must be finite, got {self.offset!r}")
        if not (math.isfinite(self.noise_std) and self.noise_std >= 0.0):
            raise InvalidParameterError(f"noise_std must be >= 0, got {self.noise_std!r}")
        lo = self.cadence_profile.min_value()
        hi = self.cadence_profile.max_value()
        if not CADENCE_MIN_HZ < lo <= hi < CADENCE_MAX_HZ:
            raise InvalidParameterError(
                f"cadence must stay within ({CADENCE_MIN_HZ}, {CADENCE_MAX_HZ}) Hz, "
                f"profile spans [{lo}, {hi}]")
        if self.amplitude_scale_profile.min_value() < 0.0:
            raise InvalidParameterError("amplitude scale must be >= 0")

    @property
    def n_harmonics(self) -> int:
        return len(self.base_harmonics)


@dataclass(frozen=True)
class SignalSample:
    """One sampled instant of the two hip-angle signals."""

    t: float
    q_right: float
    q_left: float


def sample_count(duration: float, dt: float) -> int:
    """Number of samples on the closed grid [0, duration] at step dt."""
    if not (math.isfinite(duration) and duration > 0.0):
        raise InvalidParameterError(f"duration must be > 0, got {duration!r}")
    if not (math.isfinite(dt) and dt > 0.0):
        raise InvalidParameterError(f"dt must be > 0, got {dt!r}")
    # guard against 60.0/0.001 style float underestimation
    return int(math.floor(duration / dt + 1e-9)) + 1


def measurement_noise(pattern: GaitPattern, n: int) -> np.ndarray:
    """The (n, 2) additive noise the pattern puts on n measured samples.

    Drawn in one shot from the pattern seed, so it is independent of the
    underlying trajectory: clean series plus this noise is bit-identical
    to the noisy series.
    """
    if pattern.noise_std == 0.0:
        return np.zeros((n, 2))
    rng = np.random.default_rng(pattern.seed)
    return rng.standard_normal((n, 2)) * pattern.noise_std


def _reconstruct(pattern: GaitPattern, phase, scale):
    base_r = np.zeros_like(phase)
    base_l = np.zeros_like(phase)
    for i, (a, psi) in enumerate(pattern.base_harmonics, start=1):
        base_r += a * np.sin(i * phase + psi)
        base_l += a * np.sin(i * (phase + math.pi) + psi)
    return pattern.offset + scale * base_r, pattern.offset + scale * base_l


def series_arrays(pattern: GaitPattern, duration: float, dt: float):
    """Array form of synth_series: (t, q_right, q_left, phase, scale).

    The phase array is the right-leg stride phase [rad], unwrapped; the
    left leg runs at phase + pi.  scale is the amplitude factor applied
    at each sample.
    """
    n = sample_count(duration, dt)
    t = np.arange(n) * dt
    phase = TWO_PI * pattern.cadence_profile.integral(t)
    scale = pattern.amplitude_scale_profile.value(t)
    q_r, q_l = _reconstruct(pattern, phase, scale)
    noise = measurement_noise(pattern, n)
    return t, q_r + noise[:, 0], q_l + noise[:, 1], phase, scale


def stand_to_walk_arrays(pattern: GaitPattern, stand_duration: float,
                         ramp_duration: float, total: float, dt: float):
    """Array form of stand_to_walk: (t, q_right, q_left, phase, scale).

    During stance the stride phase is frozen at 0 and the amplitude is 0;
    from walk onset the amplitude follows a half-cosine ramp to the
    pattern's own scale profile and the phase integrates the cadence
    profile from the onset instant.
    """
    if stand_duration < 0.0 or ramp_duration < 0.0:
        raise InvalidParameterError("durations must be >= 0")
    if stand_duration + ramp_duration > total:
        raise InvalidParameterError(
            f"stand {stand_duration} s + ramp {ramp_duration} s exceeds total {total} s")
    n = sample_count(total, dt)
    t = np.arange(n) * dt
    t0 = stand_duration
    walking = t >= t0
    phase = np.where(
        walking,
        TWO_PI * (pattern.cadence_profile.integral(t)
                  - pattern.cadence_profile.integral(t0)),
        0.0)
    if ramp_duration > 0.0:
        x = np.clip((t - t0) / ramp_duration, 0.0, 1.0)
        ramp = 0.5 * (1.0 - np.cos(math.pi * x))
    else:
        ramp = walking.astype(float)
    scale = ramp * pattern.amplitude_scale_profile.value(t)
    q_r, q_l = _reconstruct(pattern, phase, scale)
    noise = measurement_noise(pattern, n)
    return t, q_r + noise[:, 0], q_l + noise[:, 1], phase, scale


def _to_samples(t, q_r, q_l) -> list[SignalSample]:
    return [SignalSample(ti, ri, li)
            for ti, ri, li in zip(t.tolist(), q_r.tolist(), q_l.tolist())]


def synth_series(pattern: GaitPattern, duration: float, dt: float) -> list[SignalSample]:
    """Sample both legs on [0, duration] at step dt."""
    t, q_r, q_l, _, _ = series_arrays(pattern, duration, dt)
    return _to_samples(t, q_r, q_l)


def stand_to_walk(pattern: GaitPattern, stand_duration: float, ramp_duration: float,
                  total: float, dt: float) -> list[SignalSample]:
    """Sample a stand-then-walk transition on [0, total] at step dt."""
    t, q_r, q_l, _, _ = stand_to_walk_arrays(pattern, stand_duration, ramp_duration,
                                             total, dt)
    return _to_samples(t, q_r, q_l)


def default_gait_pattern() -> GaitPattern:
    """Documented default walking pattern (0.9 Hz, three harmonics)."""
    return GaitPattern(
        base_harmonics=((0.35, 0.0), (0.10, math.pi / 2.0), (0.04, math.pi)),
        offset=0.05,
        cadence_profile=constant_profile(0.9),
        amplitude_scale_profile=constant_profile(1.0),
        noise_std=0.005,
        seed=42,
    )
