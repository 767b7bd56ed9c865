"""Exception hierarchy shared by every module."""


class BalancedError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class ParseError(BalancedError, ValueError):
    pass


class DisconnectedError(BalancedError, ValueError):
    pass


class SelfLoopError(BalancedError, ValueError):
    pass


class UnknownFamily(BalancedError, ValueError):
    pass


class BadParameter(BalancedError, ValueError):
    pass


class DimensionMismatch(BalancedError, ValueError):
    pass


class NotAMeasure(BalancedError, ValueError):
    """Weights are negative or do not sum to exactly one."""


class NotBalancedError(BalancedError, ValueError):
    pass


class BadCoefficients(BalancedError, ValueError):
    pass


class HypothesisError(BalancedError, ValueError):
    """The pair (mu, nu) does not satisfy the one-sided extrapolation setup."""


class DegenerateError(BalancedError, ValueError):
    pass


class UnboundedError(BalancedError, ArithmeticError):
    pass


class BadSubsets(BalancedError, ValueError):
    pass


class TooLarge(BalancedError, ValueError):
    pass


class BadSpec(BalancedError, ValueError):
    pass


class EmptyChoice(BalancedError, ValueError):
    pass


class OutOfRange(BalancedError, ValueError):
    pass


class BadPermutation(BalancedError, ValueError):
    pass
