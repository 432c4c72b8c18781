"""Exception hierarchy shared by every module of the package."""


class SchurCheckError(Exception):
    """Base class for all errors raised by schurcheck."""


class NotAPartition(SchurCheckError, ValueError):
    pass


class DoesNotFit(SchurCheckError, ValueError):
    """A partition is too long or has a part too large for the fixed layout."""


class PredicateDomain(SchurCheckError, ValueError):
    pass


class MaxMismatch(SchurCheckError, ValueError):
    pass


class PreconditionViolated(SchurCheckError):
    """Raised by the plain conjugate routine when a requires-clause fails.

    ``clause`` holds the stable annotation id (e.g. ``requires.b_zero``).
    """

    def __init__(self, clause, message):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class IndexOutOfRange(SchurCheckError, IndexError):
    pass


class EntryOutOfRange(SchurCheckError, ValueError):
    pass


class NotSymmetric(SchurCheckError, ValueError):
    pass


class NotHomogeneous(SchurCheckError, ValueError):
    pass


class ArityMismatch(SchurCheckError, ValueError):
    pass
