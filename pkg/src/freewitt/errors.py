"""Domain errors raised by the algebra layers.

Every error corresponds to a violated precondition of some operation; the
CLI maps them to exit code 2 and reports the class name.
"""


class DomainError(Exception):
    """Base class for all precondition violations."""

    @property
    def name(self) -> str:
        return type(self).__name__


class DivisionByNonUnit(DomainError):
    pass


class InnerConstantTermNonzero(DomainError):
    pass


class ZeroLinearTerm(DomainError):
    pass


class ConstantTermNotOne(DomainError):
    pass


class ConstantTermNotZero(DomainError):
    pass


class NotStrict(DomainError):
    pass


class NotPositiveDerivation(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class InsufficientLength(DomainError):
    pass


class MeanZero(DomainError):
    pass


class NotMeanOne(DomainError):
    pass


class GeneratorMismatch(DomainError):
    pass


class DegreeCapTooSmall(DomainError):
    pass


class ZeroConstantTerm(DomainError):
    pass


class UnknownName(DomainError):
    pass


class NotStrictAutomorphism(DomainError):
    pass


class ReductionFailure(DomainError):
    pass
