"""Exception hierarchy shared across the package.

Domain errors are conditions a caller can provoke with legal-looking but
semantically bad input (mismatched arities, zero characters, rank-deficient
lattices, exhausted resource caps).  The CLI maps them to exit code 2.
"""


class DomainError(Exception):
    """Base class for input conditions outside an operation's domain."""


class ArityMismatchError(DomainError):
    """Operands built over different family parameters n."""


class ZeroCharacterError(DomainError):
    """A nonzero character was required."""


class ConjectureRequiredError(DomainError):
    """Decision needs the open higher-dimensional Sigma description.

    The closed-form complement of Sigma^m is established for m <= 2 (any n)
    and for all m when n = 2.  For n >= 3 and m >= 3 callers must opt in
    explicitly.
    """


class RankDeficientError(DomainError):
    """Rows were expected to span a full-rank sublattice."""


class ResourceLimitError(DomainError):
    """A configured cap (index growth, enumeration size, orbit size) was hit."""


class InvariantViolationError(Exception):
    """A checked internal invariant failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """Malformed textual input (word syntax, character vectors, lattices)."""
