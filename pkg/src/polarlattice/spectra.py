"""Transmission/reflection of the driven cavity (linear input-output model).

Symmetric two-mirror cavity, per-mirror field decay gamma (empty-cavity
HWHM = gamma, FWHM = 2 gamma), bright exciton as one internal oscillator of
full width Gamma_s:

    D(w) = i(w_c - w) + gamma + f^2 / (i(w_s - w) + Gamma_s/2)
    t = gamma / D,  r = t - 1

Absorption is evaluated from the exciton loss channel directly, so
T + R + A = 1 is an identity to check rather than a definition.
"""
from dataclasses import dataclass, field, replace
import math
import warnings

import numpy as np

from . import couplings, exciton
from .errors import DomainError
from .polariton import antisym_coupling, diagonalize_two_mode, photon_dispersion

MODEL_NOTE = (
    "two-port input-output model; gamma = per-mirror HWHM (empty-cavity FWHM = 2*gamma); "
    "Gamma_s = full exciton width entering as Gamma_s/2"
)


@dataclass(frozen=True)
class LineWidths:
    gamma_mirror: float
    Gamma_s: float | None = None  # defaults to 2 * Gamma_atom
    Gamma_atom: float = 5e-8
    Gamma_a: float = 0.0  # dark state, only used with a dark coupling

    def __post_init__(self):
        if self.Gamma_s is None:
            object.__setattr__(self, "Gamma_s", 2.0 * self.Gamma_atom)
        for name in ("gamma_mirror", "Gamma_s", "Gamma_atom", "Gamma_a"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")


@dataclass
class SpectrumCurve:
    omega_grid: np.ndarray
    T: np.ndarray
    R: np.ndarray
    A: np.ndarray
    peaks_T: list = field(default_factory=list)
    dips_R: list = field(default_factory=list)
    theta: float | None = None


def _denominators(omega, omega_c, omega_s, f, lw, omega_a, f_a):
    """Return (num, N) with t = gamma * num / N and A = gamma * loss / |N|^2.

    Cleared of the oscillator denominators E = i(w_x - w) + Gamma_x/2 so a
    lossless oscillator driven exactly on resonance stays finite.
    """
    cav = 1j * (omega_c - omega) + lw.gamma_mirror
    # an underflowed f^2 is the decoupled limit
    if f_a * f_a == 0:
        f_a = 0.0
    if f * f == 0 and not f_a:
        one = np.ones_like(cav)
        return one, cav, np.zeros(np.shape(cav))
    E1 = 1j * (omega_s - omega) + 0.5 * lw.Gamma_s
    if not f_a:
        return E1, cav * E1 + f * f, f * f * lw.Gamma_s * np.ones(np.shape(cav))
    E2 = 1j * (omega_a - omega) + 0.5 * lw.Gamma_a
    num = E1 * E2
    N = cav * num + f * f * E2 + f_a * f_a * E1
    loss = f * f * lw.Gamma_s * np.abs(E2) ** 2 + f_a * f_a * lw.Gamma_a * np.abs(E1) ** 2
    return num, N, loss


def _check_gamma(lw):
    if lw.gamma_mirror == 0:
        raise DomainError("mirror line width gamma must be > 0 for an open cavity")


def response_amplitudes(omega, omega_c, omega_s, f, lw, omega_a=None, f_a=0.0):
    """Complex transmission and reflection amplitudes; ``omega`` may be an array."""
    _check_gamma(lw)
    omega = np.asarray(omega, dtype=float)
    num, N, _ = _denominators(omega, omega_c, omega_s, f, lw, omega_a, f_a)
    t = lw.gamma_mirror * num / N
    return t, t - 1.0


def absorption(omega, omega_c, omega_s, f, lw, omega_a=None, f_a=0.0):
    """Power lost to the exciton channel(s), 2 gamma Re(self-energy) / |D|^2."""
    _check_gamma(lw)
    omega = np.asarray(omega, dtype=float)
    _, N, loss = _denominators(omega, omega_c, omega_s, f, lw, omega_a, f_a)
    return lw.gamma_mirror * loss / np.abs(N) ** 2


def _refine(x, y, i):
    """Vertex of the parabola through samples i-1, i, i+1."""
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0:
        return float(x[i])
    shift = 0.5 * (y0 - y2) / denom
    return float(x[i] + shift * (x[i + 1] - x[i]))


def local_maxima(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    idx = np.nonzero((y[1:-1] > y[:-2]) & (y[1:-1] >= y[2:]))[0] + 1
    return [_refine(x, y, i) for i in idx]


def _validate_grid(omega_grid):
    grid = np.asarray(omega_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise DomainError("omega grid needs at least 2 points")
    if not np.all(np.diff(grid) > 0):
        raise DomainError("omega grid must be strictly increasing")
    return grid


def spectrum(omega_grid, omega_c, omega_s, f, lw, omega_a=None, f_a=0.0, theta=None):
    grid = _validate_grid(omega_grid)
    if f > 0:
        splitting = diagonalize_two_mode(omega_c, omega_s, f).splitting
        step = float(np.max(np.diff(grid)))
        if step > splitting / 50:
            warnings.warn(
                f"omega grid step {step:.3g} eV exceeds splitting/50 = {splitting / 50:.3g} eV; "
                "peak positions may be unreliable",
                stacklevel=2,
            )
    t, r = response_amplitudes(grid, omega_c, omega_s, f, lw, omega_a, f_a)
    T = np.abs(t) ** 2
    R = np.abs(r) ** 2
    A = absorption(grid, omega_c, omega_s, f, lw, omega_a, f_a)
    return SpectrumCurve(grid, T, R, A, local_maxima(grid, T), local_maxima(grid, -R), theta)


def spectrum_at_theta(system, theta, omega_grid, k=(0.0, 0.0)):
    """Spectrum of a resolved system with the on-site coupling evaluated at ``theta``.

    The bright level is the k = 0 symmetric band energy (flat-exciton
    approximation), the same reference the cavity is tuned against.
    """
    p = system.params
    lattice = replace(system.lattice, J_on=couplings.onsite_angle(p.mu, p.R_onsite, theta))
    k_s = (0.0, 0.0) if p.flat_exciton else k
    omega_s = exciton.dispersion(exciton.Branch.SYMMETRIC, k_s, lattice)
    omega_a = exciton.dispersion(exciton.Branch.ANTISYMMETRIC, k, lattice)
    omega_c = photon_dispersion(k, system.mode)
    f = system.f_at(k)
    f_a = antisym_coupling(f, k, p.d_sep) if p.three_mode else 0.0
    lw = LineWidths(p.gamma_mirror, p.Gamma_s, p.Gamma_atom)
    return spectrum(omega_grid, omega_c, omega_s, f, lw, omega_a if f_a else None, f_a, theta)


def peak_visibility(curve):
    """Peak-to-valley contrast of T between the two outermost transmission peaks."""
    if len(curve.peaks_T) < 2:
        raise DomainError("contrast needs at least two transmission peaks")
    grid = curve.omega_grid
    lo = int(np.argmin(np.abs(grid - curve.peaks_T[0])))
    hi = int(np.argmin(np.abs(grid - curve.peaks_T[-1])))
    window = curve.T[lo:hi + 1]
    valley = float(window.min())
    peak = float(window.max())
    if valley == 0:
        return math.inf
    return peak / valley
