"""Two-particle spin-1/2 state space for an (electron, positron) pair.

Basis ordering is electron-major::

    index = 2 * electron + positron,   down = 0, up = 1

giving (|dd>, |du>, |ud>, |uu>) where the first arrow is the electron.
Spin operators are expressed in units of hbar (hbar^2 for S1.S2); magnetic
moment operators in J/T.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .constants import CODATA_2018, PhysicalConstants, mu_bohr
from .errors import DegenerateStateError, HermiticityError, NormalizationError

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
IMAG_ERROR_TOL = 1e-9

DIM = 4


class SpinZ(Enum):
    """Single-particle S_z eigenstate; value is the eigenvalue in units of hbar."""

    DOWN = -0.5
    UP = 0.5

    @property
    def bit(self) -> int:
        return 0 if self is SpinZ.DOWN else 1


def basis_index(electron: SpinZ, positron: SpinZ) -> int:
    return 2 * electron.bit + positron.bit


def _basis_labels() -> list[tuple[SpinZ, SpinZ]]:
    # itertools.product order matches basis_index order
    return list(itertools.product((SpinZ.DOWN, SpinZ.UP), repeat=2))


BASIS = tuple(_basis_labels())


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class TwoSpinState:
    """Normalized ket in the 4-dimensional (electron, positron) spin space."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(self.amplitudes)
        if amps.shape != (DIM,):
            raise ValueError(f"expected {DIM} amplitudes, got shape {amps.shape}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NormalizationError(f"state norm^2 = {norm2!r} differs from 1 by more than {NORM_TOL}")
        object.__setattr__(self, "amplitudes", amps)

    def amplitude(self, electron: SpinZ, positron: SpinZ) -> complex:
        return complex(self.amplitudes[basis_index(electron, positron)])

    def allclose(self, other: TwoSpinState, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.amplitudes, other.amplitudes, rtol=0.0, atol=atol))

    def __repr__(self):
        terms = []
        for (el, po), a in zip(BASIS, self.amplitudes):
            if a != 0:
                arrows = ("d" if el is SpinZ.DOWN else "u") + ("d" if po is SpinZ.DOWN else "u")
                terms.append(f"({a:.6g})|{arrows}>")
        return f"TwoSpinState({' + '.join(terms)})"


@dataclass(frozen=True, eq=False)
class SpinOperator:
    """Hermitian 4x4 operator on :class:`TwoSpinState` amplitudes.

    Hermiticity is checked elementwise against ``HERMITIAN_TOL`` scaled by the
    largest matrix element, so moment operators (~1e-23 J/T) are held to the
    same relative standard as dimensionless spin operators.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.shape != (DIM, DIM):
            raise ValueError(f"expected a {DIM}x{DIM} matrix, got shape {m.shape}")
        scale = _scale(m)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL * scale:
            raise HermiticityError("operator matrix is not Hermitian")
        object.__setattr__(self, "matrix", m)

    def apply(self, state: TwoSpinState) -> np.ndarray:
        """Raw (unnormalized) image of ``state``."""
        return self.matrix @ state.amplitudes

    def commutator(self, other: SpinOperator) -> np.ndarray:
        return self.matrix @ other.matrix - other.matrix @ self.matrix


def _scale(m: np.ndarray) -> float:
    peak = float(np.max(np.abs(m)))
    return peak if peak > 0 else 1.0


def basis_state(electron: SpinZ, positron: SpinZ) -> TwoSpinState:
    amps = np.zeros(DIM, dtype=complex)
    amps[basis_index(electron, positron)] = 1.0
    return TwoSpinState(amps)


def superpose(terms: Iterable[tuple[complex, TwoSpinState]]) -> TwoSpinState:
    """Normalized linear combination ``sum(c * state)``.

    Coefficients that already produce a unit vector (to ``NORM_TOL``) are kept
    verbatim; otherwise the sum is rescaled to unit norm.

    Raises
    ------
    DegenerateStateError
        If the combination vanishes.
    """
    total = np.zeros(DIM, dtype=complex)
    for coeff, state in terms:
        total = total + complex(coeff) * state.amplitudes
    norm2 = float(np.vdot(total, total).real)
    if norm2 <= NORM_TOL**2:
        raise DegenerateStateError("linear combination has zero norm")
    if abs(norm2 - 1.0) > NORM_TOL:
        total = total / np.sqrt(norm2)
    return TwoSpinState(total)


def inner_product(bra: TwoSpinState, ket: TwoSpinState) -> complex:
    """<bra|ket>, conjugate-linear in ``bra``."""
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def gram_matrix(states: Sequence[TwoSpinState]) -> np.ndarray:
    return np.array([[inner_product(a, b) for b in states] for a in states])


def expectation(op: SpinOperator | np.ndarray, state: TwoSpinState) -> float:
    """<state|op|state> as a real number.

    A raw matrix is accepted so that non-Hermitian input reaches the
    imaginary-part check rather than failing at operator construction.

    Raises
    ------
    HermiticityError
        If the imaginary part exceeds ``IMAG_ERROR_TOL`` relative to the
        operator's largest element.
    """
    m = op.matrix if isinstance(op, SpinOperator) else np.asarray(op, dtype=complex)
    psi = state.amplitudes
    # elementwise products, not vdot: BLAS fused multiply-add leaves ~1e-17
    # residues where equal-weight terms should cancel exactly
    value = complex(np.sum(psi.conj() * (m @ psi)))
    scale = _scale(m)
    if abs(value.imag) > IMAG_ERROR_TOL * scale:
        raise HermiticityError(f"expectation has imaginary part {value.imag!r}")
    # imaginary residue between the two tolerances is rounding noise; dropped
    return value.real + 0.0


def total_sz() -> SpinOperator:
    """(S1)_z + (S2)_z in units of hbar."""
    diag = [el.value + po.value for el, po in BASIS]
    return SpinOperator(np.diag(diag))


def total_mu_z(k: PhysicalConstants = CODATA_2018, g: float = 2.0) -> SpinOperator:
    """Total z magnetic moment of the pair in J/T.

    The electron contributes ``-g*mu_B*(S1)_z`` and the positron
    ``+g*mu_B*(S2)_z``.
    """
    mu_b = mu_bohr(k)
    diag = [-g * mu_b * el.value + g * mu_b * po.value for el, po in BASIS]
    return SpinOperator(np.diag(diag))


def _raise(s: SpinZ) -> SpinZ | None:
    return SpinZ.UP if s is SpinZ.DOWN else None


def _lower(s: SpinZ) -> SpinZ | None:
    return SpinZ.DOWN if s is SpinZ.UP else None


def s1_dot_s2() -> SpinOperator:
    """S1.S2 = S1z S2z + (S1+ S2- + S1- S2+)/2 in units of hbar^2.

    Built by acting with the ladder operators on each product ket. For spin 1/2
    every nonzero ladder matrix element is 1 (Condon-Shortley phases).
    """
    m = np.zeros((DIM, DIM), dtype=complex)
    for el, po in BASIS:
        col = basis_index(el, po)
        m[col, col] += el.value * po.value
        for step_e, step_p in ((_raise, _lower), (_lower, _raise)):
            new_el, new_po = step_e(el), step_p(po)
            if new_el is not None and new_po is not None:
                m[basis_index(new_el, new_po), col] += 0.5
    return SpinOperator(m)
