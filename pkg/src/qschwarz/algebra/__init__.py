"""Exact arithmetic kernel: Q[t], Q(t), matrices over Q(t) and truncated q-series.

Besides the classes, the module offers small functional entry points
(``rf_arith``, ``mat_inverse``, ``qs_arith`` ...) for callers that prefer to
name the operation explicitly.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import RatMat
from .poly import Poly, as_fraction, poly_gcd
from .qseries import QSeries
from .ratfunc import RatFunc, rf, t

__all__ = [
    "Fraction",
    "Poly",
    "QSeries",
    "RatFunc",
    "RatMat",
    "as_fraction",
    "mat_arith",
    "mat_charpoly",
    "mat_derivative",
    "mat_inverse",
    "mat_trace",
    "poly_gcd",
    "qs_arith",
    "qs_derive",
    "rf",
    "rf_arith",
    "rf_compose",
    "rf_derivative",
    "t",
]


def rf_arith(op: str, x, y) -> RatFunc:
    x, y = RatFunc.coerce(x), RatFunc.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def rf_derivative(x) -> RatFunc:
    return RatFunc.coerce(x).derivative()


def rf_compose(f, g) -> RatFunc:
    return RatFunc.coerce(f).compose(g)


def mat_arith(op: str, X: RatMat, Y: RatMat) -> RatMat:
    if op == "add":
        return X + Y
    if op == "mul":
        return X * Y
    raise ValueError(f"unknown operation {op!r}")


def mat_inverse(X: RatMat) -> RatMat:
    return X.inverse()


def mat_derivative(X: RatMat) -> RatMat:
    return X.derivative()


def mat_trace(X: RatMat) -> RatFunc:
    return X.trace()


def mat_charpoly(X: RatMat) -> list[RatFunc]:
    return X.charpoly()


def qs_arith(op: str, x: QSeries, y: QSeries | None = None) -> QSeries:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "invert":
        return x.invert()
    if op == "exp":
        return x.exp()
    raise ValueError(f"unknown operation {op!r}")


def qs_derive(x: QSeries) -> QSeries:
    return x.derive()
