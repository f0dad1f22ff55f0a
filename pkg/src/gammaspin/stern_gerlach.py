"""Stern-Gerlach splitting of a photon beam.

Model assumptions (none of them come with the moment formula itself):

* inertia ``m_eff = hbar*omega / c**2``;
* longitudinal speed stays ``c``, so the magnet is crossed in ``L/c`` and the
  drift region in ``D/c``;
* the force ``mu_z * dBz/dz`` is uniform inside the magnet and zero outside;
* small deflections, no feedback of transverse position on the field.

Under these the detector-plane displacement is::

    y = mu_z * G / (hbar*omega) * (L**2/2 + L*D)
      = +/- e c^2 G / (hbar omega^2) * (L**2/2 + L*D)

so splitting grows as ``omega**-2`` toward low photon energies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import CODATA_2018, PhysicalConstants
from .errors import DomainError
from .photon import Helicity, Photon, magnetic_moment


@dataclass(frozen=True)
class SGEConfig:
    """Ideal magnet geometry.

    gradient : dBz/dz in T/m, any sign.
    magnet_length : L in m, > 0.
    drift_length : D in m from magnet exit to detector, >= 0.
    """

    gradient: float
    magnet_length: float
    drift_length: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.gradient):
            raise DomainError(f"gradient must be finite, got {self.gradient!r}")
        if not (math.isfinite(self.magnet_length) and self.magnet_length > 0):
            raise DomainError(f"magnet_length must be positive, got {self.magnet_length!r}")
        if not (math.isfinite(self.drift_length) and self.drift_length >= 0):
            raise DomainError(f"drift_length must be non-negative, got {self.drift_length!r}")


@dataclass(frozen=True)
class Deflection:
    photon: Photon
    force: float  # N
    transverse_kick: float  # kg m/s
    displacement: float  # m, signed, at the detector plane


@dataclass(frozen=True)
class BeamResult:
    deflections: tuple[Deflection, ...]
    separation: float  # m


def force_on(p: Photon, cfg: SGEConfig, k: PhysicalConstants = CODATA_2018) -> float:
    return magnetic_moment(p, k) * cfg.gradient


def effective_mass(p: Photon, k: PhysicalConstants = CODATA_2018) -> float:
    return k.hbar * p.omega / k.c**2


def deflect(p: Photon, cfg: SGEConfig, k: PhysicalConstants = CODATA_2018) -> Deflection:
    force = force_on(p, cfg, k)
    L, D = cfg.magnet_length, cfg.drift_length
    displacement = force / (k.hbar * p.omega) * (0.5 * L * L + L * D)
    return Deflection(
        photon=p,
        force=force,
        transverse_kick=force * L / k.c,
        displacement=displacement,
    )


def simulate_beam(photons: Sequence[Photon], cfg: SGEConfig, k: PhysicalConstants = CODATA_2018) -> BeamResult:
    if len(photons) == 0:
        raise DomainError("beam must contain at least one photon")
    deflections = tuple(deflect(p, cfg, k) for p in photons)
    ys = [d.displacement for d in deflections]
    return BeamResult(deflections=deflections, separation=max(ys) - min(ys))


def sweep_omega(
    omega_min: float,
    omega_max: float,
    steps: int,
    helicity_pair: bool,
    cfg: SGEConfig,
    k: PhysicalConstants = CODATA_2018,
) -> list[tuple[float, float]]:
    """Separation versus omega on a logarithmic grid.

    With ``helicity_pair`` each sample is an (rh, lh) beam and the separation
    is the distance between the two sub-beams. Without it each sample is a
    single rh photon and the reported value is its distance from the
    undeflected axis (an rh-only beam has no sub-beam spacing).
    """
    if not (math.isfinite(omega_min) and math.isfinite(omega_max) and 0 < omega_min < omega_max):
        raise DomainError(f"need 0 < omega_min < omega_max, got {omega_min!r}, {omega_max!r}")
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps!r}")
    omegas = np.geomspace(omega_min, omega_max, int(steps))
    omegas[0], omegas[-1] = omega_min, omega_max
    rows = []
    for w in omegas:
        w = float(w)
        if helicity_pair:
            beam = [Photon(w, Helicity.RH), Photon(w, Helicity.LH)]
            sep = simulate_beam(beam, cfg, k).separation
        else:
            sep = abs(deflect(Photon(w, Helicity.RH), cfg, k).displacement)
        rows.append((w, sep))
    return rows
