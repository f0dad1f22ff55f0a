"""Spin and magnetic-moment expectation values for the two gamma photons of
electron-positron annihilation, and a Stern-Gerlach model of the resulting
photon beam splitting."""

from .annihilation import (
    ConservationReport,
    EntangledPair,
    Sign,
    Stage,
    annihilate,
    build_pair,
    exchange_energy,
    moment_expectation,
    named_state,
    spin_expectation,
)
from .constants import (
    CODATA_2018,
    PhysicalConstants,
    energy_from_omega,
    flux_quantum,
    mu_bohr,
    omega_from_energy,
)
from .errors import DegenerateStateError, DomainError, HermiticityError, NormalizationError
from .photon import Helicity, Photon, annihilation_photon, magnetic_moment, quantum_flux, spin_z
from .spin import (
    SpinOperator,
    SpinZ,
    TwoSpinState,
    basis_state,
    expectation,
    inner_product,
    s1_dot_s2,
    superpose,
    total_mu_z,
    total_sz,
)
from .stern_gerlach import BeamResult, Deflection, SGEConfig, deflect, force_on, simulate_beam, sweep_omega

__version__ = "0.1.0"
