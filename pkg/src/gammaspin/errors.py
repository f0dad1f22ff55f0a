"""Exception types raised across the package."""


class DomainError(ValueError):
    """An input lies outside the physical domain of an operation."""


class NormalizationError(DomainError):
    """A state vector is not unit-normalized within tolerance."""


class DegenerateStateError(DomainError):
    """A linear combination of states has zero norm."""


class HermiticityError(ValueError):
    """An operator (or its expectation value) is not Hermitian within tolerance."""
