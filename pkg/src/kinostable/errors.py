"""Exception types shared across the package."""


class KinostableError(ValueError):
    """Base class for all input-validation failures."""


class DegenerateInputError(KinostableError):
    """Raised when a point set is too degenerate to describe (all points coincide)."""


class DomainError(KinostableError):
    """Raised when an argument falls outside a function's mathematical domain."""


class FileFormatError(KinostableError):
    """Raised when a trajectory or run file fails schema validation."""
