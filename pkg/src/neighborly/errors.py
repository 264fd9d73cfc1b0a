"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat
and specific.
"""


class NeighborlyError(Exception):
    """Base class for all package errors."""


class DimensionError(NeighborlyError, ValueError):
    """Operands have mismatched or invalid vector lengths."""


class DomainError(NeighborlyError, ValueError):
    """Parameters outside the range a formula or builder is defined on."""


class ValidationError(NeighborlyError, ValueError):
    """A family violates the pairwise-distance constraint (or duplicates)."""


class ParseError(NeighborlyError, ValueError):
    """A family file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ResourceError(NeighborlyError, RuntimeError):
    """A configured memory or size budget would be exceeded."""


class InconsistencyError(NeighborlyError, RuntimeError):
    """A computed result contradicts embedded reference data (implementation bug)."""
