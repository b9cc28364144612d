"""Exception types shared across the package."""


class SrCodesError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(SrCodesError, TypeError):
    """Operands belong to different field contexts."""


class UnsupportedEmbeddingError(SrCodesError, ValueError):
    """No field embedding exists between the requested contexts."""


class CodeError(SrCodesError, ValueError):
    """Invalid code parameters or malformed code input."""


class EnumerationCapError(SrCodesError, RuntimeError):
    """An exhaustive scan would exceed the configured enumeration cap."""


class ContractError(SrCodesError, ValueError):
    """A decoder precondition does not hold for the given code."""


class ConfigError(SrCodesError, ValueError):
    """Malformed configuration or text input."""
