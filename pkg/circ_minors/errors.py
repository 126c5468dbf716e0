"""Exceptions raised by circ_minors.

Every exception carries a stable ``code`` that the command-line interface prints
as its diagnostic. Input errors map to exit status 2, everything else to 1.
"""

from typing import Any, Optional

__all__ = [
    "CircMinorsError",
    "InputError",
    "DomainError",
    "TheoremViolation",
    "MissingFileError",
    "MalformedDocumentError",
    "AmbiguousStepError",
    "IndexOutOfRangeError",
    "InvalidParameterError",
    "NonCircularRowError",
    "DominatingRowError",
    "ZeroRowOrColumnError",
    "RowTooSmallError",
    "FullRowError",
    "EmptyResultError",
    "UnknownArcError",
    "NotClosedError",
    "RepeatedVertexError",
    "NoRowArcError",
    "ZeroWindingError",
    "OverlapError",
    "NonUniformParametersError",
    "JumpSetCollisionError",
    "JumpCountViolationError",
    "BlockStructureViolationError",
    "BadArcPresentError",
    "VerificationFailedError",
    "NotCirculantMinorError",
    "EmptyWindowError",
    "NotAFixpointError",
    "DecompositionMismatchError",
    "PreconditionViolatedError",
    "BoundExceededError",
    "CapExceededError",
]


class CircMinorsError(Exception):
    """Base class for all errors raised by the library."""

    code = "CircMinorsError"


# --- Roots. ---


class InputError(CircMinorsError):
    """Raised when an input document cannot be read or interpreted."""

    code = "InputError"


class DomainError(CircMinorsError):
    """Raised when an input violates an invariant of the domain."""

    code = "DomainError"


class TheoremViolation(DomainError):
    """Raised when a property guaranteed by the theory fails.

    Valid inputs never trigger it, so it signals corrupted input or a bug.
    """

    code = "TheoremViolation"


# --- Input errors. ---


class MissingFileError(InputError):
    code = "MissingFile"


class MalformedDocumentError(InputError):
    code = "MalformedDocument"


class AmbiguousStepError(InputError):
    code = "AmbiguousStep"


# --- Ground set and matrices. ---


class IndexOutOfRangeError(DomainError):
    code = "IndexOutOfRange"


class InvalidParameterError(DomainError):
    code = "InvalidParameter"


class NonCircularRowError(DomainError):
    code = "NonCircularRow"


class DominatingRowError(DomainError):
    code = "DominatingRow"


class ZeroRowOrColumnError(DomainError):
    code = "ZeroRowOrColumn"


class RowTooSmallError(DomainError):
    code = "RowTooSmall"


class FullRowError(DomainError):
    code = "FullRow"


class EmptyResultError(DomainError):
    code = "EmptyResult"


# --- Digraphs and circuits. ---


class UnknownArcError(DomainError):
    code = "UnknownArc"


class NotClosedError(DomainError):
    code = "NotClosed"


class RepeatedVertexError(DomainError):
    code = "RepeatedVertex"


class NoRowArcError(DomainError):
    code = "NoRowArc"


class ZeroWindingError(DomainError):
    code = "ZeroWinding"


class OverlapError(DomainError):
    code = "Overlap"


class NonUniformParametersError(DomainError):
    code = "NonUniformParameters"


class JumpSetCollisionError(TheoremViolation):
    code = "JumpSetCollision"


class JumpCountViolationError(TheoremViolation):
    code = "JumpCountViolation"


class BlockStructureViolationError(TheoremViolation):
    code = "BlockStructureViolation"


# --- Synthesis. ---


class BadArcPresentError(DomainError):
    code = "BadArcPresent"


class VerificationFailedError(TheoremViolation):
    code = "VerificationFailed"


class NotCirculantMinorError(DomainError):
    code = "NotCirculantMinor"


class EmptyWindowError(DomainError):
    code = "EmptyWindow"


class NotAFixpointError(TheoremViolation):
    code = "NotAFixpoint"


class DecompositionMismatchError(TheoremViolation):
    code = "DecompositionMismatch"


class PreconditionViolatedError(DomainError):
    code = "PreconditionViolated"


# --- Oracle. ---


class BoundExceededError(DomainError):
    code = "BoundExceeded"


class CapExceededError(DomainError):
    """Raised when an enumeration hits its cap.

    Parameters
    ----------
    message : str

    partial : Any, optional
        The deterministic prefix of the result computed before the cap was hit.
    """

    code = "CapExceeded"

    def __init__(self, message: str, partial: Optional[Any] = None):
        super(CapExceededError, self).__init__(message)
        self.partial = partial
