class GStructureError(Exception):
    pass


class DomainError(GStructureError, ValueError):
    """An operation was called outside its precondition."""


class OutOfDomainError(DomainError):
    """A reduction query violates a hypothesis of the classification theorem."""

    SPHERE_DIMENSION = 'sphere-dimension'
    GROUP_DIMENSION = 'group-dimension'
    SOURCE_RANK = 'source-rank'

    def __init__(self, hypothesis: str, message: str):
        super().__init__('%s: %s' % (hypothesis, message))
        self.hypothesis = hypothesis


class NotARepresentationError(DomainError):
    """The weight is a representation of the spin cover only."""


class NonUnitError(DomainError):
    pass


class EnumerationOverflowError(GStructureError):
    def __init__(self, cap: int):
        super().__init__('enumeration result set exceeds the safety cap of %d weights' % cap)
        self.cap = cap


class VerificationError(GStructureError, AssertionError):
    def __init__(self, message: str, offender=None):
        if offender is not None:
            message = '%s (offending: %s)' % (message, offender)
        super().__init__(message)
        self.offender = offender


class WeylIntegralityError(VerificationError):
    pass
