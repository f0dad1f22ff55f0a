"""Per-photon intrinsic properties from angular frequency and helicity.

The magnetic moment ``mu_z = +/- e c^2 / omega`` follows from the antiparallel
pair moment ``+/- 2 mu_B`` with ``m0 c^2 = hbar omega``. It is applied here at
any ``omega``, which extrapolates beyond the annihilation frequency where it
was obtained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .annihilation import HELICITY_STATE_NAMES, named_state, spin_expectation
from .constants import CODATA_2018, PhysicalConstants, energy_from_omega, flux_quantum
from .errors import DomainError


class Helicity(str, Enum):
    RH = "rh"
    LH = "lh"

    @property
    def sign(self) -> int:
        return 1 if self is Helicity.RH else -1


@dataclass(frozen=True)
class Photon:
    omega: float
    helicity: Helicity

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"omega must be positive and finite, got {self.omega!r}")
        object.__setattr__(self, "helicity", Helicity(self.helicity))

    def energy(self, k: PhysicalConstants = CODATA_2018) -> float:
        return energy_from_omega(self.omega, k)

    def wavenumber(self, k: PhysicalConstants = CODATA_2018) -> float:
        return self.omega / k.c

    def wavelength(self, k: PhysicalConstants = CODATA_2018) -> float:
        return 2 * math.pi * k.c / self.omega


def annihilation_photon(helicity: Helicity | str, k: PhysicalConstants = CODATA_2018) -> Photon:
    """Photon carrying the electron rest energy, omega = m0 c^2 / hbar."""
    return Photon(omega=k.rest_energy / k.hbar, helicity=Helicity(helicity))


def magnetic_moment(p: Photon, k: PhysicalConstants = CODATA_2018) -> float:
    """mu_z in J/T: +e c^2/omega for rh, -e c^2/omega for lh."""
    if not p.omega > 0:
        raise DomainError(f"omega must be positive, got {p.omega!r}")
    return p.helicity.sign * k.e * k.c**2 / p.omega


def spin_z(p: Photon) -> float:
    """Spin z-component (hbar) of the helicity's antiparallel pair state; zero for both."""
    return spin_expectation(named_state(HELICITY_STATE_NAMES[p.helicity.value]))


def quantum_flux(p: Photon, k: PhysicalConstants = CODATA_2018) -> float:
    """Intrinsic flux +Phi_0 (rh) or -Phi_0 (lh) in T m^2, independent of omega."""
    return p.helicity.sign * flux_quantum(k)
