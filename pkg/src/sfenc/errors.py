"""Exception types shared across the package."""


class SfencError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(SfencError):
    """Operands act on different qubit counts."""


class StructureError(SfencError):
    """A graph, path, or encoding is malformed for the requested operation."""


class PreconditionError(SfencError):
    """Input violates a documented precondition of the operation."""


class ResourceError(SfencError):
    """Request exceeds a hard resource guard (qubit count, search weight, matrix size)."""


class ConsistencyError(SfencError):
    """An internal invariant failed; indicates a bug upstream of the caller."""


class CompileError(SfencError):
    """A fermionic term cannot be realized against the given encoding."""


class ValidationError(SfencError):
    """Malformed user input (indices, masks, JSON contents)."""
