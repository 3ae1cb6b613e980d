"""Exception types shared across the package."""


class WeakAscentError(Exception):
    """Base class for all errors raised by :mod:`weakascent`."""


class InvalidInputError(WeakAscentError, ValueError):
    """The argument is malformed or out of its admissible range."""


class DomainError(WeakAscentError, ValueError):
    """The argument is well formed but not a member of the required class."""


class ResourceLimitError(WeakAscentError):
    """A brute-force routine was asked to exceed its configured cutoff."""


class InternalConsistencyError(WeakAscentError, AssertionError):
    """An identity that must hold exactly was violated; indicates a bug."""


class PosetRejection(DomainError):
    """A factorial poset contains a special 3+1.

    ``witness`` holds the offending quadruple ``(i, j, j + 1, k)``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
