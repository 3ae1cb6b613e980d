"""Weak ascent sequences, the four families they encode, and their enumeration."""

from .errors import (
    DomainError,
    InternalConsistencyError,
    InvalidInputError,
    PosetRejection,
    ResourceLimitError,
    WeakAscentError,
)
from .sequences import children, generate, stats, validate, wasc

__version__ = "0.1.0"
