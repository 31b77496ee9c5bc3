"""Exception hierarchy.

Every concrete error is also a ``ValueError`` so callers that only know
about the builtin keep working.
"""


class PhasentropyError(Exception):
    """Base class for all errors raised by phasentropy."""


class StateValidationError(PhasentropyError, ValueError):
    """A state or spectrum violates a structural invariant (shape, trace, norm)."""


class PositivityError(StateValidationError):
    """A density matrix has an eigenvalue below the clamping tolerance."""


class DegeneracyError(PhasentropyError, ValueError):
    """The eigen-sum formula was asked to evaluate a degenerate spectrum."""


class DomainError(PhasentropyError, ValueError):
    """A dimension or moment order lies outside the admissible domain."""


class SamplingConfigError(PhasentropyError, ValueError):
    """A sample budget or step size lies outside the admissible range."""
