"""Frenkel exciton bands of the two-atom-per-site square lattice.

Nearest-neighbour transfer only. ``J1`` and ``J1p`` are positive magnitudes of
the same-index and cross-index couplings, J^{11} = J^{22} = -J1 and
J^{12} = J^{21} = -J1p. The symmetric band carries the hopping J1 + J1p.
"""
from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import DomainError

_BZ_RTOL = 1e-12


class Branch(str, Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True)
class LatticeCouplings:
    omega_A: float  # eV
    J_on: float  # eV, signed on-site amplitude
    J1: float  # eV, magnitude
    J1p: float | None = None  # eV; defaults to J1
    a: float = 2000.0  # A
    M: int = 64

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"lattice constant a must be positive, got {self.a!r}")
        if self.M < 2 or self.M % 2:
            raise DomainError(f"M must be an even integer >= 2, got {self.M!r}")
        if self.J1p is None:
            object.__setattr__(self, "J1p", self.J1)

    @property
    def N(self):
        return self.M * self.M


@dataclass(frozen=True)
class ExcitonBranchPoint:
    branch: Branch
    k: tuple
    energy: float


def site_energies(omega_A, J_on):
    """On-site symmetric and antisymmetric energies ``(omega_s, omega_a)``."""
    return omega_A + J_on, omega_A - J_on


def _hopping(branch, lc):
    branch = Branch(branch)
    if branch is Branch.SYMMETRIC:
        return lc.J1 + lc.J1p
    return lc.J1 - lc.J1p


def in_brillouin_zone(k, a):
    edge = math.pi / a * (1 + _BZ_RTOL)
    return abs(k[0]) <= edge and abs(k[1]) <= edge


def fold_to_bz(k, a):
    """Map ``k`` into (-pi/a, pi/a] per axis by reciprocal lattice translations."""
    g = 2 * math.pi / a
    out = []
    for kc in k:
        kf = kc - g * math.floor(kc / g + 0.5)
        if kf <= -math.pi / a:
            kf += g
        out.append(kf)
    return tuple(out)


def dispersion(branch, k, lc):
    kx, ky = k
    if not in_brillouin_zone(k, lc.a):
        raise DomainError(f"k={tuple(k)} lies outside the first Brillouin zone; fold it first")
    branch = Branch(branch)
    onsite = site_energies(lc.omega_A, lc.J_on)[0 if branch is Branch.SYMMETRIC else 1]
    return onsite - 2.0 * _hopping(branch, lc) * (math.cos(kx * lc.a) + math.cos(ky * lc.a))


def branch_point(branch, k, lc):
    return ExcitonBranchPoint(Branch(branch), tuple(k), dispersion(branch, k, lc))


def brillouin_grid(M, a):
    """The M*M allowed quasi-momenta, row-major in (n_x, n_y), n = -M/2+1 .. M/2."""
    if not isinstance(M, (int, np.integer)) or M < 2 or M % 2:
        raise DomainError(f"M must be an even integer >= 2, got {M!r}")
    step = 2 * math.pi / (M * a)
    ns = range(-M // 2 + 1, M // 2 + 1)
    return [(nx * step, ny * step) for nx in ns for ny in ns]


def effective_mass(lc):
    """Coefficient c2 (eV*A^2) of omega_s(k) ~ omega_s(0) + c2 * |k|^2.

    With J1p = J1 this is hbar^2/(2 m_eff), m_eff = hbar^2/(4 J1 a^2).
    """
    t = lc.J1 + lc.J1p
    if not t > 0:
        raise DomainError("symmetric hopping J1 + J1p must be positive for a finite mass")
    return t * lc.a**2


def axis_bandwidth(lc, branch=Branch.SYMMETRIC):
    """Energy range from k = 0 to the zone edge (pi/a, 0)."""
    return 4.0 * abs(_hopping(branch, lc))


def is_observable(lc, Gamma_s):
    """True when the bright-state line width is below the symmetric bandwidth (8 J1)."""
    return Gamma_s < axis_bandwidth(lc, Branch.SYMMETRIC)
