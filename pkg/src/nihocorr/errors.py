"""Exception hierarchy.

Precondition failures derive from :class:`PreconditionError`; failures that
indicate a disagreement between two computations derive from
:class:`VerificationError`.  The CLI maps these to exit codes 2 and 3.
"""


class NihoError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(NihoError, ValueError):
    pass


class VerificationError(NihoError, AssertionError):
    pass


class NonPrime(PreconditionError):
    pass


class EvenCharacteristic(PreconditionError):
    pass


class SmallCharacteristic(PreconditionError):
    pass


class BadCharacteristic(PreconditionError):
    pass


class DegenerateLeadingCoefficient(PreconditionError):
    pass


class ZeroInput(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class GcdViolation(PreconditionError):
    pass


class PatternTooLarge(PreconditionError):
    pass


class UnknownPattern(PreconditionError):
    pass


class UnsupportedD(PreconditionError):
    pass


class AmbiguousRepresentation(VerificationError):
    pass


class IntegralityFailure(VerificationError):
    pass


class NegativeFrequency(VerificationError):
    pass


class MismatchError(VerificationError):
    pass
