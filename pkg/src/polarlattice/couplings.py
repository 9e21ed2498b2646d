"""Resonant dipole-dipole transfer amplitudes.

All functions return the signed amplitude hbar*J in eV. Positive magnitudes
(J0, J1 with J = -J0, J = -J1) are the business of :mod:`polarlattice.exciton`.
No validity cutoff in R is enforced for the retarded form.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .units import COULOMB_E2, dipole_energy_scale


@dataclass(frozen=True)
class DipolePair:
    mu1: tuple  # e*A, 3-vector
    mu2: tuple
    R_vec: tuple  # A, separation from dipole 1 to dipole 2
    q: float = 0.0  # 1/A; q = 0 is the static limit

    def __post_init__(self):
        if not np.linalg.norm(self.R_vec) > 0:
            raise DomainError("dipole separation |R_vec| = 0 is singular")
        if self.q < 0:
            raise DomainError(f"photon wavenumber must be >= 0, got {self.q!r}")


def retarded_transfer(pair):
    """Full retarded dipole-dipole transfer between two parallel-frequency dipoles."""
    mu1 = np.asarray(pair.mu1, dtype=float)
    mu2 = np.asarray(pair.mu2, dtype=float)
    R_vec = np.asarray(pair.R_vec, dtype=float)
    R = float(np.linalg.norm(R_vec))
    if R == 0:
        raise DomainError("dipole separation |R_vec| = 0 is singular")
    n = R_vec / R
    qR = pair.q * R

    eye = np.eye(3)
    transverse = eye - np.outer(n, n)
    near = eye - 3.0 * np.outer(n, n)
    tensor = -transverse * qR**2 * math.cos(qR) + near * (math.cos(qR) + qR * math.sin(qR))
    return COULOMB_E2 / R**3 * float(mu1 @ tensor @ mu2)


def collinear_transfer(mu, R, q):
    """Closed form for both dipoles along the separation axis."""
    if q < 0:
        raise DomainError(f"photon wavenumber must be >= 0, got {q!r}")
    qR = q * R
    return -2.0 * dipole_energy_scale(mu, R) * (math.cos(qR) + qR * math.sin(qR))


def static_onsite(mu, R):
    """Near-field (qR -> 0) collinear coupling of the two atoms on one site."""
    return -2.0 * dipole_energy_scale(mu, R)


def onsite_angle(mu, R, theta):
    """Static on-site coupling for in-plane dipoles at angle ``theta`` to the pair axis."""
    return dipole_energy_scale(mu, R) * (1.0 - 3.0 * math.cos(theta) ** 2)


def magic_angle():
    return math.acos(1.0 / math.sqrt(3.0))
