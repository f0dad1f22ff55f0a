"""Physical constants in SI units.

Values are CODATA 2018 (e, h, c exact by SI definition; m0 recommended).
Constants are passed around explicitly so tests can substitute synthetic values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import DomainError

KEV = 1.0e3  # eV per keV


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable bundle of the constants used by every calculation.

    Attributes
    ----------
    e : float
        Elementary charge (C).
    hbar : float
        Reduced Planck constant (J s).
    h : float
        Planck constant (J s). Must equal ``2*pi*hbar``.
    m0 : float
        Electron rest mass (kg).
    c : float
        Speed of light (m/s).
    """

    e: float
    hbar: float
    h: float
    m0: float
    c: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{f.name} must be positive and finite, got {value!r}")
        if not math.isclose(self.h, 2 * math.pi * self.hbar, rel_tol=1e-12, abs_tol=0.0):
            raise DomainError("h must equal 2*pi*hbar to 1e-12 relative")

    @classmethod
    def from_hbar(cls, e: float, hbar: float, m0: float, c: float) -> PhysicalConstants:
        """Build a constant set with ``h`` derived from ``hbar``."""
        return cls(e=e, hbar=hbar, h=2 * math.pi * hbar, m0=m0, c=c)

    @property
    def rest_energy(self) -> float:
        """Electron rest energy m0 c^2 (J)."""
        return self.m0 * self.c**2


_H_2018 = 6.62607015e-34

CODATA_2018 = PhysicalConstants(
    e=1.602176634e-19,
    hbar=_H_2018 / (2 * math.pi),
    h=_H_2018,
    m0=9.1093837015e-31,
    c=299792458.0,
)


def mu_bohr(k: PhysicalConstants = CODATA_2018) -> float:
    """Bohr magneton e*hbar/(2*m0) in J/T."""
    return k.e * k.hbar / (2 * k.m0)


def flux_quantum(k: PhysicalConstants = CODATA_2018) -> float:
    """Magnetic flux quantum h/e in T m^2."""
    return k.h / k.e


def omega_from_energy(energy: float, k: PhysicalConstants = CODATA_2018) -> float:
    """Angular frequency (rad/s) of a quantum with energy ``energy`` (J)."""
    if not energy > 0:
        raise DomainError(f"energy must be positive, got {energy!r}")
    return energy / k.hbar


def energy_from_omega(omega: float, k: PhysicalConstants = CODATA_2018) -> float:
    """Energy hbar*omega (J) of a quantum with angular frequency ``omega``."""
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    return k.hbar * omega


def kev_to_joule(energy_kev: float, k: PhysicalConstants = CODATA_2018) -> float:
    return energy_kev * KEV * k.e


def joule_to_kev(energy: float, k: PhysicalConstants = CODATA_2018) -> float:
    return energy / (KEV * k.e)
