"""Basis families for the nonlinear forcing terms.

Discrete forcing uses Gaussians of the decay phase, centered on a
log-spaced ladder from 1 down to exp(-alpha_s); rhythmic forcing uses von
Mises bumps evenly spread over [0, 2*pi].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

GAUSSIAN = "gaussian"
VON_MISES = "von_mises"


@dataclass(frozen=True, eq=False)
class BasisFamily:
    kind: str
    centers: np.ndarray
    widths: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "centers", np.asarray(self.centers, dtype=float))
        object.__setattr__(self, "widths", np.asarray(self.widths, dtype=float))
        if self.kind not in (GAUSSIAN, VON_MISES):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.centers.ndim != 1 or self.centers.shape != self.widths.shape:
            raise ValueError("centers and widths must be 1-D arrays of equal length")
        if len(self.centers) < 2:
            raise ValueError("need at least 2 basis functions")
        if np.any(self.widths <= 0):
            raise ValueError("all widths must be positive")

    @property
    def n_basis(self) -> int:
        return len(self.centers)


def make_gaussian_basis(n_basis: int, alpha_s: float) -> BasisFamily:
    """Gaussian family on the decay phase.

    Centers c_i = exp(-alpha_s*(i-1)/(N-1)); inverse widths h_i are the
    inverse squared gaps, with the last width copied from its neighbor
    (the gap formula has nothing to divide by at the final center).
    """
    if n_basis < 2:
        raise ValueError("need at least 2 basis functions")
    i = np.arange(n_basis)
    centers = np.exp(-alpha_s * i / (n_basis - 1))
    widths = np.empty(n_basis)
    widths[:-1] = 1.0 / np.diff(centers) ** 2
    widths[-1] = widths[-2]
    return BasisFamily(GAUSSIAN, centers, widths)


def make_vonmises_basis(n_basis: int) -> BasisFamily:
    """Von Mises family: centers even on [0, 2*pi], all widths 2.5*N."""
    if n_basis < 2:
        raise ValueError("need at least 2 basis functions")
    i = np.arange(n_basis)
    centers = 2.0 * np.pi * i / (n_basis - 1)
    widths = np.full(n_basis, 2.5 * n_basis)
    return BasisFamily(VON_MISES, centers, widths)


def eval_gaussian_vector(basis: BasisFamily, s: float) -> np.ndarray:
    """Normalized, phase-scaled Gaussian activations; entries sum to s."""
    if basis.kind != GAUSSIAN:
        raise ValueError("basis is not a Gaussian family")
    if not 0.0 <= s <= basis.centers[0]:
        logger.warning("gaussian basis evaluated outside [0, %g]: s=%g", basis.centers[0], s)
    raw = np.exp(-basis.widths * (s - basis.centers) ** 2)
    total = raw.sum()
    if total == 0.0:
        raise FloatingPointError(f"gaussian activations underflowed at s={s}")
    return s * raw / total


def eval_vonmises_vector(basis: BasisFamily, s: float) -> np.ndarray:
    """Normalized von Mises activations; entries sum to 1, 2*pi-periodic."""
    if basis.kind != VON_MISES:
        raise ValueError("basis is not a von Mises family")
    raw = np.exp(basis.widths * (np.cos(s - basis.centers) - 1.0))
    return raw / raw.sum()


def eval_basis_vector(basis: BasisFamily, s: float) -> np.ndarray:
    if basis.kind == GAUSSIAN:
        return eval_gaussian_vector(basis, s)
    return eval_vonmises_vector(basis, s)
