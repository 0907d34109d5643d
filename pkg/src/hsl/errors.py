"""Exception types shared across the package."""


class HSLError(Exception):
    """Base class for all package errors."""


class CapacityError(HSLError):
    """A degree or size cap was exceeded."""


class DomainError(HSLError, ValueError):
    """An argument lies outside the admissible domain."""


class UsageError(HSLError, ValueError):
    """Invalid combination of arguments (field mismatch, unknown name, ...)."""


class ModeUnavailableError(UsageError):
    """The requested evaluation mode is not available for the given parameters."""
