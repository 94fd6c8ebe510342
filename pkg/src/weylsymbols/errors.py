"""Exception hierarchy shared by all weylsymbols modules.

Every error raised on purpose by this package derives from WeylSymbolsError,
so callers can catch one type at the CLI boundary and map it to an exit code.
"""

from __future__ import annotations


class WeylSymbolsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(WeylSymbolsError):
    """A sequence or label fails its structural invariants."""


class DomainError(WeylSymbolsError):
    """Structurally valid input lies outside an operation's domain."""


class ResourceError(WeylSymbolsError):
    """An enumeration request exceeds the configured size caps."""


class InvariantError(WeylSymbolsError):
    """An internal identity that should hold unconditionally failed."""


class NotFoundError(WeylSymbolsError):
    """A lookup key matches no stored row."""


class OracleError(WeylSymbolsError):
    """Character-theoretic cross-check reached an inconsistent state."""
