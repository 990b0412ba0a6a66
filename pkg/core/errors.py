__all__ = ['LockingError', 'CouplingSpecError', 'ConstantFunctionError', 'NoZeroCrossingError',
           'OutOfRangeError', 'AboveThresholdError', 'NoSolutionError', 'NoSymmetricZeroError',
           'DimensionTooLargeError', 'NonFiniteStateError', 'BadBracketError', 'NotApplicableError',
           'NotLockedError']


class LockingError(Exception):
    pass


class CouplingSpecError(LockingError, ValueError):
    pass


class ConstantFunctionError(LockingError):
    pass


class NoZeroCrossingError(LockingError):
    pass


class OutOfRangeError(LockingError, ValueError):
    pass


class AboveThresholdError(LockingError):
    pass


class NoSolutionError(LockingError):
    pass


class NoSymmetricZeroError(LockingError):
    pass


class DimensionTooLargeError(LockingError):
    pass


class NonFiniteStateError(LockingError):
    pass


class BadBracketError(LockingError):
    pass


class NotApplicableError(LockingError):
    pass


class NotLockedError(LockingError):
    pass
