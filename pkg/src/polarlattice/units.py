"""Natural units: energies in eV, lengths in Angstrom, dipoles in e*Angstrom.

Every "frequency" in this package is stored as the energy hbar*omega.
"""
import math

from .errors import DomainError

HBAR_C = 1973.269804  # eV * Angstrom
COULOMB_E2 = 14.399645  # e^2 / (4 pi eps0), eV * Angstrom


def photon_wavenumber(energy):
    """Vacuum wavenumber q (1/Angstrom) of a photon with energy ``energy`` (eV)."""
    if not energy > 0:
        raise DomainError(f"photon energy must be positive, got {energy!r}")
    return energy / HBAR_C


def dipole_energy_scale(mu, R):
    """mu^2 / (4 pi eps0 R^3) in eV for a dipole ``mu`` (e*A) at distance ``R`` (A)."""
    if mu < 0:
        raise DomainError(f"dipole magnitude must be >= 0, got {mu!r}")
    if R == 0:
        raise DomainError("dipole separation R = 0 is singular")
    if R < 0:
        raise DomainError(f"dipole separation must be positive, got {R!r}")
    return COULOMB_E2 * mu**2 / R**3


def deg(theta_rad):
    return math.degrees(theta_rad)


def rad(theta_deg):
    return math.radians(theta_deg)
