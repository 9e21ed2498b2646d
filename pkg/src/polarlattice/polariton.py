"""Cavity photons, exciton-photon coupling and polariton branches."""
from dataclasses import dataclass
import math

import numpy as np

from . import couplings, exciton
from .errors import DomainError
from .exciton import Branch, LatticeCouplings
from .units import COULOMB_E2, HBAR_C, photon_wavenumber


@dataclass(frozen=True)
class CavityMode:
    L: float  # mirror spacing, A
    m: int = 1  # odd longitudinal index, field antinode at the lattice plane
    epsilon: float = 1.0
    pol_theta: float = 0.0  # in-plane polarization angle, rad

    def __post_init__(self):
        if not self.L > 0:
            raise DomainError(f"mirror spacing L must be positive, got {self.L!r}")
        if self.m < 1 or self.m % 2 == 0:
            raise DomainError(f"m must be odd, got {self.m!r}")
        if self.epsilon < 1:
            raise DomainError(f"epsilon must be >= 1, got {self.epsilon!r}")


@dataclass(frozen=True)
class CouplingParams:
    mu: float
    a: float
    d_sep: float
    f_s: float  # |hbar f| of the bright state, eV
    f_a: float = 0.0  # dark-state residual, eV


@dataclass(frozen=True)
class PolaritonSolution:
    k: tuple
    omega_upper: float
    omega_lower: float
    X2_lower: float
    Y2_lower: float
    X2_upper: float
    Y2_upper: float
    omega_dark: float = math.nan
    Delta: float = math.nan  # half the branch splitting, sqrt(detuning^2 + f^2)

    @property
    def splitting(self):
        if math.isnan(self.Delta):
            return self.omega_upper - self.omega_lower
        return 2.0 * self.Delta

    def amplitudes(self):
        """Real (X, Y) exciton/photon amplitudes of (upper, lower) with f >= 0.

        Upper: X = +sqrt(X2), lower: X = -sqrt(X2); Y >= 0 for both, so
        each pair is a normalized eigenvector of [[omega_s, f], [f, omega_c]]
        in the (exciton, photon) basis.
        """
        upper = (math.sqrt(self.X2_upper), math.sqrt(self.Y2_upper))
        lower = (-math.sqrt(self.X2_lower), math.sqrt(self.Y2_lower))
        return upper, lower


@dataclass(frozen=True)
class ThreeModeSolution:
    energies: tuple  # descending
    weights: np.ndarray  # rows: branches; columns: (photon, symmetric, antisymmetric)


def _norm2(k):
    return float(k[0]) ** 2 + float(k[1]) ** 2


def photon_dispersion(k, mode):
    return HBAR_C / math.sqrt(mode.epsilon) * math.sqrt(_norm2(k) + (mode.m * math.pi / mode.L) ** 2)


def resonant_spacing(omega_target, m, epsilon=1.0):
    """Mirror spacing that puts the k = 0 photon of mode ``m`` at ``omega_target``."""
    if not omega_target > 0:
        raise DomainError(f"target energy must be positive, got {omega_target!r}")
    return m * math.pi * HBAR_C / (math.sqrt(epsilon) * omega_target)


def coupling_strength(omega_c, mu, L, a):
    """|hbar f| of the bright state for mirror area S = N a^2 (small k*d limit)."""
    return math.sqrt(4.0 * math.pi * COULOMB_E2 * omega_c * mu**2 / (L * a**2))


def antisym_coupling(f_s, k, d_sep):
    """Dark-state residual |f_s| * |1 - exp(i |k| d_sep)| / 2."""
    if d_sep < 0:
        raise DomainError(f"d_sep must be >= 0, got {d_sep!r}")
    return abs(f_s) * abs(math.sin(0.5 * math.sqrt(_norm2(k)) * d_sep))


def diagonalize_two_mode(omega_c, omega_s, f, k=(0.0, 0.0), omega_dark=math.nan):
    if f < 0:
        raise DomainError(f"coupling f must be >= 0, got {f!r}")
    delta = 0.5 * (omega_c - omega_s)
    Delta = math.hypot(delta, f)
    if Delta == 0:
        raise DomainError("degenerate input: f = 0 at zero detuning leaves the branches undefined")
    mean = 0.5 * (omega_c + omega_s)
    # p = (Delta + delta)/(2 Delta), m = (Delta - delta)/(2 Delta); the small one via f^2 to avoid cancellation
    if delta >= 0:
        p = (Delta + delta) / (2 * Delta)
        m = f * f / (2 * Delta * (Delta + delta))
    else:
        m = (Delta - delta) / (2 * Delta)
        p = f * f / (2 * Delta * (Delta - delta))
    return PolaritonSolution(
        k=tuple(k),
        omega_upper=mean + Delta,
        omega_lower=mean - Delta,
        X2_lower=p,
        Y2_lower=m,
        X2_upper=m,
        Y2_upper=p,
        omega_dark=omega_dark,
        Delta=Delta,
    )


def diagonalize_three_mode(omega_c, omega_s, omega_a, f_s, f_a):
    """Photon coupled to both bright (f_s) and dark (f_a) on-site states."""
    if f_s < 0 or f_a < 0:
        raise DomainError("couplings must be >= 0")
    if f_a == 0 or f_s == 0:
        # block diagonal: keep the decoupled level exact
        if f_a == 0:
            free, other, f, free_col, other_col = omega_a, omega_s, f_s, 2, 1
        else:
            free, other, f, free_col, other_col = omega_s, omega_a, f_a, 1, 2
        rows = [(free, _unit(free_col))]
        if f == 0:
            rows += [(omega_c, _unit(0)), (other, _unit(other_col))]
        else:
            sol = diagonalize_two_mode(omega_c, other, f)
            for energy, x2, y2 in ((sol.omega_upper, sol.X2_upper, sol.Y2_upper),
                                   (sol.omega_lower, sol.X2_lower, sol.Y2_lower)):
                w = np.zeros(3)
                w[0], w[other_col] = y2, x2
                rows.append((energy, w))
        rows.sort(key=lambda r: -r[0])
        return ThreeModeSolution(tuple(r[0] for r in rows), np.array([r[1] for r in rows]))
    H = np.array([[omega_c, f_s, f_a], [f_s, omega_s, 0.0], [f_a, 0.0, omega_a]])
    vals, vecs = np.linalg.eigh(H)
    order = np.argsort(vals)[::-1]
    return ThreeModeSolution(tuple(float(v) for v in vals[order]), (vecs[:, order] ** 2).T)


def _unit(i):
    w = np.zeros(3)
    w[i] = 1.0
    return w


@dataclass(frozen=True)
class ResolvedSystem:
    """SystemParams with every derived quantity filled in."""

    params: object
    q: float
    J_on: float
    J1: float
    lattice: LatticeCouplings
    mode: CavityMode
    coupling: CouplingParams
    omega_c0: float

    def derived(self):
        return {
            "q": self.q,
            "J_on": self.J_on,
            "J1": self.J1,
            "J1p": self.lattice.J1p,
            "L_resolved": self.mode.L,
            "omega_c0": self.omega_c0,
            "f": self.coupling.f_s,
        }

    def omega_s_at(self, k):
        kk = (0.0, 0.0) if self.params.flat_exciton else k
        return exciton.dispersion(Branch.SYMMETRIC, kk, self.lattice)

    def omega_a_at(self, k):
        return exciton.dispersion(Branch.ANTISYMMETRIC, k, self.lattice)

    def f_at(self, k):
        if not self.params.k_dependent_f:
            return self.coupling.f_s
        return self.coupling.f_s * math.sqrt(photon_dispersion(k, self.mode) / self.omega_c0)


def resolve_system(params, tune_to="symmetric"):
    """Derive couplings, lattice, cavity and |hbar f| from ``params``.

    With ``params.L`` unset the cavity is tuned to zero detuning at k = 0
    against the symmetric exciton (``tune_to="symmetric"``) or against the
    antisymmetric on-site level at theta = 0 (``"antisymmetric"``).
    """
    q = photon_wavenumber(params.omega_A)
    J_on = couplings.onsite_angle(params.mu, params.R_onsite, params.theta)
    J1 = -couplings.collinear_transfer(params.mu, params.a, q)
    lattice = LatticeCouplings(params.omega_A, J_on, J1, params.J1p, params.a, params.M)
    L = params.L
    if L is None:
        if tune_to == "symmetric":
            target = exciton.dispersion(Branch.SYMMETRIC, (0.0, 0.0), lattice)
        elif tune_to == "antisymmetric":
            J0 = couplings.onsite_angle(params.mu, params.R_onsite, 0.0)
            target = exciton.site_energies(params.omega_A, J0)[1]
        else:
            raise DomainError(f"unknown tuning target {tune_to!r}")
        L = resonant_spacing(target, params.m, params.epsilon)
    mode = CavityMode(L, params.m, params.epsilon, params.theta)
    omega_c0 = photon_dispersion((0.0, 0.0), mode)
    f = params.f_s if params.f_s is not None else coupling_strength(omega_c0, params.mu, L, params.a)
    return ResolvedSystem(
        params=params,
        q=q,
        J_on=J_on,
        J1=J1,
        lattice=lattice,
        mode=mode,
        coupling=CouplingParams(params.mu, params.a, params.d_sep, f),
        omega_c0=omega_c0,
    )


@dataclass(frozen=True)
class DispersionRow:
    k: tuple
    omega_s: float
    omega_a: float
    omega_c: float
    solution: PolaritonSolution
    three_mode: ThreeModeSolution | None = None


def polariton_at_k(system, k):
    omega_c = photon_dispersion(k, system.mode)
    omega_s = system.omega_s_at(k)
    omega_a = system.omega_a_at(k)
    f = system.f_at(k)
    sol = diagonalize_two_mode(omega_c, omega_s, f, k=k, omega_dark=omega_a)
    three = None
    if system.params.three_mode:
        f_a = antisym_coupling(f, k, system.params.d_sep)
        three = diagonalize_three_mode(omega_c, omega_s, omega_a, f, f_a)
    return DispersionRow(tuple(k), omega_s, omega_a, omega_c, sol, three)


@dataclass(frozen=True)
class ThetaRow:
    theta: float
    J_on: float
    omega_s: float
    omega_a: float
    omega_c: float
    solution: PolaritonSolution


def theta_scan(base, theta_grid, k=(0.0, 0.0), map_fn=map):
    """Bright/dark levels and polaritons versus polarization angle at fixed k.

    The cavity is held fixed (tuned to the dark level at theta = 0 unless
    ``base.L`` is given); only the on-site coupling follows theta.
    """
    thetas = list(theta_grid)
    if not thetas:
        raise DomainError("theta grid is empty")
    system = resolve_system(base, tune_to="antisymmetric")
    omega_c = photon_dispersion(k, system.mode)
    f = system.f_at(k)

    def row(theta):
        J_on = couplings.onsite_angle(base.mu, base.R_onsite, theta)
        omega_s, omega_a = exciton.site_energies(base.omega_A, J_on)
        sol = diagonalize_two_mode(omega_c, omega_s, f, k=k, omega_dark=omega_a)
        return ThetaRow(theta, J_on, omega_s, omega_a, omega_c, sol)

    return list(map_fn(row, thetas))
