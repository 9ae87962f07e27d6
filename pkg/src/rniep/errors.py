"""Exception hierarchy shared by every module."""


class RniepError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(RniepError, ValueError):
    pass


class ParseError(RniepError, ValueError):
    pass


class NotASublist(RniepError, ValueError):
    pass


class NotInContext(RniepError, ValueError):
    """The list is not in the candidate context (sorted, sum >= 0, rho = first entry)."""

    def __init__(self, message, *, sigma_ok=True, rho_ok=True):
        super().__init__(message)
        self.sigma_ok = sigma_ok
        self.rho_ok = rho_ok


class SearchTooLarge(RniepError):
    """An exact search would exceed its configured bound."""


class BadMove(RniepError, ValueError):
    pass


class InvalidCertificate(RniepError, ValueError):
    pass


class UnsupportedK(RniepError, ValueError):
    pass


class MissingWitness(RniepError, ValueError):
    pass


class NotSuleimanova(RniepError, ValueError):
    pass


class InternalCoefficientViolation(RniepError, AssertionError):
    """A self-check that should be unreachable has fired."""


class RejectionStall(RniepError):
    pass


class InvariantViolation(RniepError, AssertionError):
    """A state that the theory says is unreachable was reached."""
