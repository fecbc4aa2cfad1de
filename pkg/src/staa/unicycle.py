"""Unicycle state, sampled acceleration actions and arc-based prediction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .geometry import Pose, Vec2, wrap_angle


@dataclass(frozen=True)
class KinodynamicLimits:
    """Velocity and acceleration envelope of the vehicle."""

    v_max: float = 2.0          # m/s forward
    v_back_max: float = 1.0     # m/s backward
    omega_max: float = 3.0      # rad/s
    a_min: float = -2.0         # m/s^2
    a_max: float = 2.0
    b_min: float = -6.0         # rad/s^2
    b_max: float = 6.0

    def __post_init__(self):
        if min(self.v_max, self.v_back_max, self.omega_max,
               self.a_max, -self.a_min, self.b_max, -self.b_min) <= 0.0:
            raise ValueError("limits must define positive ranges")


@dataclass(frozen=True)
class AccelCmd:
    """Linear/angular acceleration command held for one prediction step."""

    a: float
    b: float


@dataclass(frozen=True)
class UnicycleState:
    """Planar pose plus linear and angular velocity."""

    x: float
    y: float
    theta: float
    v: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", wrap_angle(self.theta))

    @property
    def position(self) -> Vec2:
        return Vec2(self.x, self.y)

    @property
    def pose(self) -> Pose:
        return Pose(Vec2(self.x, self.y), self.theta)

    def velocity_vector(self) -> Vec2:
        return Vec2(self.v * math.cos(self.theta), self.v * math.sin(self.theta))


def action_set(n: int, limits: KinodynamicLimits):
    """The n*n grid of acceleration commands spanning the permitted ranges.

    Samples are linearly spaced and include both interval endpoints.
    """
    if n < 2:
        raise ValueError("need at least 2 samples per axis")
    accs = np.linspace(limits.a_min, limits.a_max, n)
    angs = np.linspace(limits.b_min, limits.b_max, n)
    return [AccelCmd(float(a), float(b)) for a in accs for b in angs]


def action_arrays(n: int, limits: KinodynamicLimits):
    """action_set as two flat float arrays (for the compiled search core)."""
    cmds = action_set(n, limits)
    a = np.array([c.a for c in cmds], dtype=np.float64)
    b = np.array([c.b for c in cmds], dtype=np.float64)
    return a, b


def predict(s: UnicycleState, cmd: AccelCmd, tbar: float,
            limits: KinodynamicLimits) -> UnicycleState:
    """Forward-simulate one command for tbar seconds.

    The position moves along a circular arc whose radius comes from the
    mid-interval velocities; velocities integrate linearly and are clamped
    to the limits afterwards. Near-zero mid-interval angular velocity falls
    back to the straight-line limit of the arc.
    """
    if tbar <= 0.0:
        raise ValueError("prediction time must be > 0")
    nx, ny, nth, nv, nom = K.predict_one(
        s.x, s.y, s.theta, s.v, s.omega, cmd.a, cmd.b, tbar,
        limits.v_max, limits.v_back_max, limits.omega_max)
    return UnicycleState(nx, ny, nth, nv, nom)


def brake_command(s: UnicycleState, tbar: float,
                  limits: KinodynamicLimits) -> AccelCmd:
    """Maximal deceleration toward zero velocities, reached within one step
    when possible."""
    a = max(limits.a_min, min(limits.a_max, -s.v / tbar))
    b = max(limits.b_min, min(limits.b_max, -s.omega / tbar))
    return AccelCmd(a, b)
