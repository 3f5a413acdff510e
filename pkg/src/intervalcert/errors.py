"""Exception types raised across the package.

User-facing errors derive from :class:`IntervalCertError` and, where it
makes sense, also from ``ValueError`` so callers can catch broadly.
Errors under :class:`InternalContractError` signal a broken internal
contract (a solver or extractor bug), never bad user input.
"""


class IntervalCertError(Exception):
    """Base class for every error raised by intervalcert."""


class DuplicateElementError(IntervalCertError, ValueError):
    """An element identifier occurs more than once."""


class UnknownElementError(IntervalCertError, ValueError):
    """An element identifier is not part of the poset."""


class CycleInRelationError(IntervalCertError, ValueError):
    """Transitive closure of the input pairs would relate an element to itself."""


class NotCoverRelationError(IntervalCertError, ValueError):
    """In ``covers`` mode, an input pair is already implied by the others."""


class InvalidSizeError(IntervalCertError, ValueError):
    """A size or count parameter is out of its allowed range."""


class SizeTooLargeError(IntervalCertError, ValueError):
    """Exhaustive enumeration was requested beyond the supported ground-set size."""


class InvalidKError(IntervalCertError, ValueError):
    """The length bound k must be a positive integer."""


class InvalidBoundsError(IntervalCertError, ValueError):
    """Length bounds must satisfy 1 <= min_len <= max_len."""


class InvalidScaleError(IntervalCertError, ValueError):
    """An explicit scale must be at least 2n + 1 for a poset on n elements."""


class ElementMismatchError(IntervalCertError, ValueError):
    """A representation does not cover exactly the elements of the poset."""


class ParseError(IntervalCertError, ValueError):
    """A poset or representation file is malformed.

    Carries the 1-based source line number when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalContractError(IntervalCertError, RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""


class InfeasiblePotentialError(InternalContractError):
    """A potential failed its defensive re-check against the digraph arcs."""


class NonMinimalCycleError(InternalContractError):
    """A cycle handed to the extractor took a branch only non-minimal cycles can take."""
