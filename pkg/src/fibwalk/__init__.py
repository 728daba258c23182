"""Digit-append walks on the Fibonacci sequence, with exact verification tooling."""

from fibwalk.errors import ArithmeticInconsistency, ConfigError, DomainError, FibWalkError
from fibwalk.fibcore import FibTable, fib, fib_table_up_to, is_fibonacci
from fibwalk.zphi import PHI, SQRT5, ZPhi
from fibwalk.walks import AppendRule, TheoremBound, Walk, WalkStep

__version__ = "0.1.0"

__all__ = [
    "AppendRule",
    "ArithmeticInconsistency",
    "ConfigError",
    "DomainError",
    "FibTable",
    "FibWalkError",
    "PHI",
    "SQRT5",
    "TheoremBound",
    "Walk",
    "WalkStep",
    "ZPhi",
    "__version__",
    "fib",
    "fib_table_up_to",
    "is_fibonacci",
]
