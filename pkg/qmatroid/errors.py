"""Exception types raised by qmatroid.

Every error carries the process exit code the CLI reports for it. Anything else
that escapes a command exits with EXIT_UNEXPECTED.
"""

EXIT_UNEXPECTED = 4


class QMatroidError(Exception):
    """Base class for all qmatroid errors."""

    exit_code = 2


class ConfigError(QMatroidError, ValueError):
    pass


class ParseError(QMatroidError, ValueError):
    pass


class NotPrime(QMatroidError, ValueError):
    pass


class EvenCharacteristic(QMatroidError, ValueError):
    pass


class ReducibleModulus(QMatroidError, ValueError):
    pass


class DegreeMismatch(QMatroidError, ValueError):
    pass


class FieldTooLarge(QMatroidError, ValueError):
    pass


class FieldMismatch(QMatroidError, ValueError):
    pass


class DivisionByZero(QMatroidError, ZeroDivisionError):
    pass


class ZeroCoefficient(QMatroidError, ValueError):
    pass


class EnumerationBudgetExceeded(QMatroidError, RuntimeError):
    exit_code = 3


class NotSquare(QMatroidError, ValueError):
    pass


class NotSymmetric(QMatroidError, ValueError):
    pass


class IndexOutOfRange(QMatroidError, IndexError):
    pass


class UnknownLabel(QMatroidError, ValueError):
    pass


class RankAxiomViolation(QMatroidError, ValueError):
    pass


class ZeroArgument(QMatroidError, ArithmeticError):
    pass


class LoopOrIsthmus(QMatroidError, ValueError):
    pass


class ZeroPropagatorConstant(QMatroidError, ArithmeticError):
    pass


class InvalidQ(QMatroidError, ValueError):
    pass


class RepresentationCollapse(QMatroidError, ValueError):
    pass
