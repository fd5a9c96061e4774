"""Canonical systems: the internal clocks of the movement primitives.

Discrete movements use a first-order exponential decay; rhythmic movements
use the planar Hopf oscillator, whose phase angle advances at the constant
rate 1/tau_r once on the limit cycle of radius gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

DEFAULT_DT = 1e-3


def rk4_step(f, y, t, dt):
    """One classical 4th-order Runge-Kutta step of y' = f(t, y)."""
    k1 = f(t, y)
    k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1)
    k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2)
    k4 = f(t + dt, y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


@dataclass(frozen=True)
class DiscretePhase:
    """Decay-phase state: tau_d * s_d' = -alpha_s * s_d."""

    s: float = 1.0
    alpha_s: float = 1.0
    tau: float = 1.0

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.alpha_s <= 0:
            raise ValueError("alpha_s must be positive")
        if self.s < 0:
            raise ValueError("phase must be nonnegative")


@dataclass(frozen=True)
class HopfState:
    """Hopf oscillator state; the limit cycle has radius gamma."""

    x1: float
    x2: float
    gamma: float = 1.0
    tau: float = 1.0

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")

    @property
    def radius(self) -> float:
        return math.hypot(self.x1, self.x2)


def discrete_phase_closed_form(t: float, alpha_s: float, tau_d: float, s0: float = 1.0) -> float:
    """Analytic decay s(t) = s0 * exp(-alpha_s * t / tau_d)."""
    if tau_d <= 0:
        raise ValueError("tau_d must be positive")
    return s0 * math.exp(-(alpha_s / tau_d) * t)


def step_discrete_phase(state: DiscretePhase, dt: float) -> DiscretePhase:
    """Advance the decay phase by one RK4 step."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    rate = -state.alpha_s / state.tau

    s_next = rk4_step(lambda t, s: rate * s, state.s, 0.0, dt)
    return replace(state, s=float(s_next))


def hopf_vector_field(x: np.ndarray, gamma: float, tau_r: float) -> np.ndarray:
    """Cartesian Hopf dynamics; rotation rate 1/tau_r, attractor radius gamma."""
    x1, x2 = x
    shrink = gamma * gamma - (x1 * x1 + x2 * x2)
    return np.array([shrink * x1 - x2 / tau_r, x1 / tau_r + shrink * x2])


def step_hopf(state: HopfState, dt: float) -> HopfState:
    """Advance the Hopf oscillator by one RK4 step."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    x = np.array([state.x1, state.x2])
    x_next = rk4_step(lambda t, s: hopf_vector_field(s, state.gamma, state.tau), x, 0.0, dt)
    return replace(state, x1=float(x_next[0]), x2=float(x_next[1]))


def hopf_phase(state: HopfState) -> float:
    """Full-quadrant oscillator phase in [0, 2*pi)."""
    if state.x1 == 0.0 and state.x2 == 0.0:
        raise ValueError("phase is undefined at the origin")
    return math.atan2(state.x2, state.x1) % (2.0 * math.pi)


def hopf_radius_closed_form(t: float, r0: float, gamma: float) -> float:
    """Analytic radius of the Hopf oscillator (Bernoulli-equation solution)."""
    if r0 == 0.0:
        return 0.0
    g2 = gamma * gamma
    growth = math.exp(2.0 * g2 * t)
    return math.sqrt(g2 * r0 * r0 * growth / (g2 - r0 * r0 + r0 * r0 * growth))


def hopf_polar_vector_field(r: float, gamma: float, tau_r: float) -> tuple[float, float]:
    """Polar-coordinate rates (r', theta') of the Hopf oscillator."""
    if r <= 0:
        raise ValueError("radius must be positive")
    return r * (gamma * gamma - r * r), 1.0 / tau_r
