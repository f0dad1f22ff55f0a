"""Entangled initial/final pair states and the annihilation conservation audit.

Before annihilation the pair sits in an equal-weight superposition of the two
parallel-spin product states; afterwards in an equal-weight superposition of
the two antiparallel ones. The relative sign of each superposition is left to
the caller since nothing in the model fixes it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .constants import CODATA_2018, PhysicalConstants, mu_bohr
from .errors import DomainError
from .spin import (
    SpinZ,
    TwoSpinState,
    basis_state,
    expectation,
    s1_dot_s2,
    superpose,
    total_mu_z,
    total_sz,
)

DEFAULT_TOLERANCE = 1e-12

_D, _U = SpinZ.DOWN, SpinZ.UP

_NAMED = {
    "phi_a": (_D, _D),
    "phi_b": (_U, _U),
    "phi_a_prime": (_D, _U),
    "phi_b_prime": (_U, _D),
}

PRODUCT_STATE_NAMES = tuple(_NAMED)


class Stage(str, Enum):
    INITIAL = "initial"
    FINAL = "final"


class Sign(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> int:
        return 1 if self is Sign.PLUS else -1


def named_state(name: str) -> TwoSpinState:
    """Product ket by name: ``phi_a`` = |dd>, ``phi_b`` = |uu>,
    ``phi_a_prime`` = |du>, ``phi_b_prime`` = |ud> (electron first)."""
    try:
        electron, positron = _NAMED[name]
    except KeyError:
        raise DomainError(f"unknown state {name!r}; expected one of {PRODUCT_STATE_NAMES}") from None
    return basis_state(electron, positron)


@dataclass(frozen=True)
class EntangledPair:
    state: TwoSpinState
    stage: Stage
    relative_sign: Sign


def build_pair(stage: Stage | str, relative_sign: Sign | str = Sign.PLUS) -> EntangledPair:
    """(first +/- second)/sqrt(2) over the parallel (initial) or antiparallel
    (final) product kets."""
    stage, relative_sign = Stage(stage), Sign(relative_sign)
    first, second = ("phi_a", "phi_b") if stage is Stage.INITIAL else ("phi_a_prime", "phi_b_prime")
    amp = 1 / math.sqrt(2)
    state = superpose([(amp, named_state(first)), (relative_sign.factor * amp, named_state(second))])
    return EntangledPair(state=state, stage=stage, relative_sign=relative_sign)


def spin_expectation(state: TwoSpinState) -> float:
    """<sum S_z> in units of hbar."""
    return expectation(total_sz(), state)


def moment_expectation(state: TwoSpinState, k: PhysicalConstants = CODATA_2018) -> float:
    """<sum mu_z> in J/T."""
    return expectation(total_mu_z(k), state)


def exchange_energy(J: float, state: TwoSpinState) -> float:
    """Heisenberg exchange energy -2 J <S1.S2>; J > 0 favours parallel spins."""
    return -2.0 * J * expectation(s1_dot_s2(), state)


@dataclass(frozen=True)
class ConservationReport:
    """Spin and moment expectations before and after annihilation.

    ``spin_conserved`` compares the spin expectations (hbar) against
    ``tolerance`` absolutely; ``moment_conserved`` compares the moments against
    ``tolerance * moment_scale`` where ``moment_scale`` is 2 mu_B.
    """

    sz_initial: float
    sz_final: float
    mu_initial: float
    mu_final: float
    spin_conserved: bool
    moment_conserved: bool
    tolerance: float
    moment_scale: float


def annihilate(
    relative_sign_initial: Sign | str = Sign.PLUS,
    relative_sign_final: Sign | str = Sign.PLUS,
    k: PhysicalConstants = CODATA_2018,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ConservationReport:
    if not tolerance > 0:
        raise DomainError(f"tolerance must be positive, got {tolerance!r}")
    initial = build_pair(Stage.INITIAL, relative_sign_initial)
    final = build_pair(Stage.FINAL, relative_sign_final)
    sz_i, sz_f = spin_expectation(initial.state), spin_expectation(final.state)
    mu_i, mu_f = moment_expectation(initial.state, k), moment_expectation(final.state, k)
    scale = 2 * mu_bohr(k)
    return ConservationReport(
        sz_initial=sz_i,
        sz_final=sz_f,
        mu_initial=mu_i,
        mu_final=mu_f,
        spin_conserved=abs(sz_i - sz_f) <= tolerance,
        moment_conserved=abs(mu_i - mu_f) <= tolerance * scale,
        tolerance=tolerance,
        moment_scale=scale,
    )


# rh <-> phi_a_prime, lh <-> phi_b_prime: an identification taken as given
HELICITY_STATE_NAMES = {"rh": "phi_a_prime", "lh": "phi_b_prime"}
