"""Exception types raised by the kernel and the verification pipelines."""


class QSchwarzError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(QSchwarzError, ZeroDivisionError):
    pass


class PoleAtConstant(QSchwarzError, ZeroDivisionError):
    """Composition with a constant map lands on a pole."""


class SingularMatrix(QSchwarzError, ArithmeticError):
    pass


class SingularGauge(SingularMatrix):
    pass


class SingularInput(SingularMatrix):
    pass


class SingularFrameChange(SingularMatrix):
    pass


class NonUnitSeries(QSchwarzError, ArithmeticError):
    pass


class NonNilpotentExponent(QSchwarzError, ArithmeticError):
    pass


class ConstantInput(QSchwarzError, ValueError):
    pass


class ZeroEccentricity(QSchwarzError, ValueError):
    pass


class ZeroWeight(QSchwarzError, ValueError):
    pass


class DegenerateCoupling(QSchwarzError, ValueError):
    pass


class UnsupportedWeight(QSchwarzError, ValueError):
    pass


class NonPositiveStiffness(QSchwarzError, ValueError):
    pass


class PoleOnPath(QSchwarzError, ValueError):
    pass


class NonMonotoneClock(QSchwarzError, ValueError):
    pass


class ConstantPhase(QSchwarzError, ValueError):
    pass
