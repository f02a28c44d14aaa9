class InputError(ValueError):
    """Raised for invalid user-supplied arguments (bad n, mismatched shapes, ...)."""


class VerificationError(RuntimeError):
    """Raised when an internal exact cross-check fails, signalling corrupt data."""
