"""Exception hierarchy shared by every module."""


class ZeroForceError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ZeroForceError, ValueError):
    """Malformed or out-of-range input."""


class LoopError(InputError):
    """An edge joins a vertex to itself."""


class FormatError(InputError):
    """Text encoding (graph6, edge list, family spec, grid) could not be decoded."""


class DomainError(InputError):
    """Input is well formed but outside the domain of the requested operation."""


class BudgetError(ZeroForceError):
    """A vertex-count or wall-clock budget was exceeded."""
