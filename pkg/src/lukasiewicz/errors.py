"""Exception hierarchy shared by every module of the package."""


class LukaError(Exception):
    """Base class for all errors raised by this package."""


# paths
class InvalidPath(LukaError, ValueError):
    pass


class StepOutOfRange(InvalidPath):
    pass


class NegativeHeight(InvalidPath):
    pass


class NonzeroFinalHeight(InvalidPath):
    pass


class ResourceLimit(LukaError):
    """Raised when an enumeration would exceed the configured path cap."""


# exact algebra
class VariableMismatch(LukaError, ValueError):
    pass


class ZeroPolynomial(LukaError, ValueError):
    pass


class DegenerateMap(LukaError, ValueError):
    pass


class NoPositiveRoot(LukaError):
    pass


class MultipleSignChanges(LukaError):
    pass


# models
class InfiniteEll(LukaError, ValueError):
    """The operation needs a polynomial system, i.e. a finite ell."""


class DegenerateModel(LukaError, ValueError):
    pass


class DomainError(LukaError, ValueError):
    pass


class WrongModel(LukaError, ValueError):
    pass


# bijections
class RiseRestrictionViolated(LukaError, ValueError):
    pass


class NotAJumpStep(LukaError, ValueError):
    pass
