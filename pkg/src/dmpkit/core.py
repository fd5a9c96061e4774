"""Shared domain types and small dense linear-algebra helpers.

Everything here is an immutable value: construct, validate, use. The
matrix helpers only need to be robust for the small (at most 2n x 2n)
symmetric matrices that show up in the stability certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SYMMETRY_ATOL = 1e-10

DISCRETE = "discrete"
RHYTHMIC = "rhythmic"

# Closed rhythmic demos may not match endpoints exactly; tolerance is
# relative to the coordinate range of the demo.
CLOSURE_RTOL = 1e-3


class IntegrationDivergedError(RuntimeError):
    """A rollout produced non-finite state."""


class NotContractingError(ValueError):
    """No certificate exists for the requested system (e.g. non-Hurwitz)."""


def _as_2d(name: str, arr) -> np.ndarray:
    out = np.atleast_2d(np.asarray(arr, dtype=float))
    if out.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array of samples")
    return out


def coordinate_range(positions: np.ndarray) -> float:
    """Largest per-coordinate spread, used to scale relative tolerances."""
    pos = np.asarray(positions, dtype=float)
    return float(np.max(pos.max(axis=0) - pos.min(axis=0)))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Time-stamped positions and velocities of a generated movement."""

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    accelerations: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "times", np.asarray(self.times, dtype=float))
        object.__setattr__(self, "positions", _as_2d("positions", self.positions))
        object.__setattr__(self, "velocities", _as_2d("velocities", self.velocities))
        if self.accelerations is not None:
            object.__setattr__(
                self, "accelerations", _as_2d("accelerations", self.accelerations)
            )
        p = len(self.times)
        if p < 2:
            raise ValueError("trajectory needs at least 2 samples")
        arrays = [self.positions, self.velocities]
        if self.accelerations is not None:
            arrays.append(self.accelerations)
        if any(a.shape[0] != p for a in arrays):
            raise ValueError("all sample arrays must have the same length as times")
        if len({a.shape[1] for a in arrays}) != 1:
            raise ValueError("inconsistent dimension across sample arrays")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    @property
    def n(self) -> int:
        return self.positions.shape[1]


@dataclass(frozen=True, eq=False)
class Demonstration:
    """Recorded positions, velocities and accelerations of a demonstration.

    Positions are offset-normalized (the trajectory starts at the origin);
    rhythmic demonstrations must close on themselves.
    """

    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    accelerations: np.ndarray
    kind: str = DISCRETE

    def __post_init__(self):
        object.__setattr__(self, "times", np.asarray(self.times, dtype=float))
        for name in ("positions", "velocities", "accelerations"):
            object.__setattr__(self, name, _as_2d(name, getattr(self, name)))
        if self.kind not in (DISCRETE, RHYTHMIC):
            raise ValueError(f"unknown demonstration kind {self.kind!r}")
        p = len(self.times)
        if p < 2:
            raise ValueError("demonstration needs at least 2 samples")
        shapes = {self.positions.shape, self.velocities.shape, self.accelerations.shape}
        if shapes != {(p, self.positions.shape[1])}:
            raise ValueError("positions/velocities/accelerations shapes disagree")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")
        scale = max(coordinate_range(self.positions), 1.0)
        if np.linalg.norm(self.positions[0]) > 1e-9 * scale:
            raise ValueError("demonstration must be offset-normalized to start at 0")
        if self.kind == RHYTHMIC:
            gap = np.linalg.norm(self.positions[0] - self.positions[-1])
            if gap > CLOSURE_RTOL * max(coordinate_range(self.positions), 1e-12):
                raise ValueError(
                    f"rhythmic demonstration does not close (endpoint gap {gap:.3g})"
                )

    @property
    def n(self) -> int:
        return self.positions.shape[1]

    @property
    def duration(self) -> float:
        return float(self.times[-1] - self.times[0])


def symmetric_part(a) -> np.ndarray:
    """(A + A^T) / 2 for a square matrix A."""
    mat = np.asarray(a, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    return (mat + mat.T) / 2.0


def max_eigenvalue_sym(a, atol: float = SYMMETRY_ATOL) -> float:
    """Largest eigenvalue of a symmetric matrix.

    Rejects inputs that are asymmetric beyond `atol`; asymmetry here always
    means a caller bug, since every matrix fed in is built symmetric.
    """
    mat = np.asarray(a, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if np.max(np.abs(mat - mat.T)) > atol:
        raise ValueError("matrix is asymmetric beyond tolerance")
    return float(np.linalg.eigvalsh(symmetric_part(mat))[-1])


def min_eigenvalue_sym(a, atol: float = SYMMETRY_ATOL) -> float:
    """Smallest eigenvalue of a symmetric matrix (positive-definiteness probe)."""
    mat = np.asarray(a, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if np.max(np.abs(mat - mat.T)) > atol:
        raise ValueError("matrix is asymmetric beyond tolerance")
    return float(np.linalg.eigvalsh(symmetric_part(mat))[0])
