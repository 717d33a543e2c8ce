"""Piecewise-linear keyframed motion of a planar point set."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError
from .geometry import Frame


@dataclass(frozen=True)
class Trajectory:
    """Keyframed motion: every point moves linearly between keyframes.

    ``times`` is strictly increasing and starts at 0; its last entry is the
    horizon.  ``positions`` has shape (keyframes, points, 2).
    """

    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self) -> None:
        times = np.ascontiguousarray(np.asarray(self.times, dtype=float))
        pos = np.ascontiguousarray(np.asarray(self.positions, dtype=float))
        if times.ndim != 1 or len(times) < 1:
            raise DegenerateInputError("trajectory needs at least one keyframe time")
        if pos.ndim != 3 or pos.shape[0] != len(times) or pos.shape[2] != 2:
            raise DegenerateInputError(
                f"positions must have shape (keyframes, points, 2), got {pos.shape}"
            )
        if pos.shape[1] < 2:
            raise DegenerateInputError("trajectory needs at least 2 points")
        if times[0] != 0.0:
            raise DegenerateInputError("first keyframe time must be 0")
        if len(times) > 1 and not (np.diff(times) > 0.0).all():
            raise DegenerateInputError("keyframe times must be strictly increasing")
        if not np.isfinite(pos).all():
            raise DegenerateInputError("keyframes contain non-finite coordinates")
        for k in range(pos.shape[0]):
            if bool((pos[k] == pos[k, 0]).all()):
                raise DegenerateInputError(f"keyframe at t={times[k]} has all points coincident")
        times.setflags(write=False)
        pos.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", pos)

    @property
    def horizon(self) -> float:
        return float(self.times[-1])

    @property
    def n_points(self) -> int:
        return int(self.positions.shape[1])

    def positions_at(self, t: float) -> np.ndarray:
        """Interpolated (n, 2) point positions at time t, clamped to [0, horizon]."""
        times = self.times
        if len(times) == 1 or t <= times[0]:
            return self.positions[0].copy()
        if t >= times[-1]:
            return self.positions[-1].copy()
        k = int(np.searchsorted(times, t, side="right")) - 1
        s = (t - times[k]) / (times[k + 1] - times[k])
        return (1.0 - s) * self.positions[k] + s * self.positions[k + 1]

    def frame_at(self, t: float) -> Frame:
        return Frame(self.positions_at(t), time=float(t))

    def max_point_speed(self) -> float:
        """Largest per-point speed over all keyframe segments (exact for linear motion)."""
        if len(self.times) < 2:
            return 0.0
        dt = np.diff(self.times)
        steps = np.diff(self.positions, axis=0)
        speeds = np.sqrt((steps**2).sum(axis=2)) / dt[:, None]
        return float(speeds.max())

    def sample_times(self, dt: float) -> np.ndarray:
        """Uniform sample grid 0, dt, 2dt, ... including the horizon."""
        if dt <= 0.0:
            raise DegenerateInputError("dt must be positive")
        horizon = self.horizon
        n = int(np.floor(horizon / dt + 1e-9))
        grid = np.arange(n + 1, dtype=float) * dt
        if horizon - grid[-1] > dt * 1e-9:
            grid = np.append(grid, horizon)
        return grid
