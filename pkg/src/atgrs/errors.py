"""Exception types raised across the toolkit."""


class AtgrsError(ValueError):
    """Base class for every error raised by this package."""


class NotPrime(AtgrsError):
    pass


class NotIrreducible(AtgrsError):
    pass


class OrderTooLarge(AtgrsError):
    pass


class FieldMismatch(AtgrsError):
    pass


class DivisionByZero(AtgrsError, ZeroDivisionError):
    pass


class DuplicateRoots(AtgrsError):
    pass


class ZeroEvaluationPoint(AtgrsError):
    pass


class ZeroRootNegativePower(AtgrsError):
    """A negative power of zero was requested (w_t with t < 0 and 0 among the points)."""


class Singular(AtgrsError):
    pass


class NotSquare(AtgrsError):
    pass


class LeadingNotOne(AtgrsError):
    pass


class LengthMismatch(AtgrsError):
    pass


class IndexOutOfRange(AtgrsError):
    pass


class InvalidSpec(AtgrsError):
    pass


class MethodDisagreement(AtgrsError):
    """Criterion and brute-force verdicts differ; always an implementation bug."""


class NotSingleTwist(AtgrsError):
    pass


class ZeroTwist(AtgrsError):
    pass


class SearchSpaceTooLarge(AtgrsError):
    pass
