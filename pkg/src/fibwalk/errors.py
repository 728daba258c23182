class FibWalkError(Exception):
    pass


class DomainError(FibWalkError, ValueError):
    """An argument lies outside the operation's domain (bad index, non-Fibonacci start, ...)."""


class ConfigError(FibWalkError, ValueError):
    """Battery configuration outside the supported envelope."""


class ArithmeticInconsistency(FibWalkError, ArithmeticError):
    """An exact computation produced a result that should be impossible."""
