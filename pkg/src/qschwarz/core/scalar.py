"""Scalar Schwarzian, coordinate maps and scalar second-order equations.

Second-order equations are written ``y'' = 2 p y' + q y`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from ..algebra import RatFunc, RatMat, as_fraction
from ..errors import ConstantInput, DegenerateCoupling

__all__ = [
    "CoordMap",
    "ScalarODE",
    "coord_change_scalar_ode",
    "eliminate_to_scalar",
    "scalar_schwarzian",
    "schwarzian_chain_rule_check",
    "wronskian",
    "wronskian_weight_check",
]


def scalar_schwarzian(f) -> RatFunc:
    """``S(f) = (f''/f')' - (f''/f')^2 / 2``."""
    f = RatFunc.coerce(f)
    d1 = f.derivative()
    if d1.is_zero():
        raise ConstantInput("Schwarzian of a constant function is undefined")
    r = d1.derivative() / d1
    return r.derivative() - r * r * Fraction(1, 2)


@dataclass(frozen=True)
class CoordMap:
    """A change of coordinate ``t = lam(tau)``."""

    lam: RatFunc

    def __post_init__(self):
        lam = RatFunc.coerce(self.lam)
        object.__setattr__(self, "lam", lam)
        if lam.is_constant():
            raise ConstantInput("coordinate change must be nonconstant")

    @classmethod
    def mobius(cls, a, b, c, d) -> "CoordMap":
        a, b, c, d = (as_fraction(x) for x in (a, b, c, d))
        if a * d - b * c == 0:
            raise ConstantInput("Mobius map needs ad - bc != 0")
        tau = RatFunc.variable()
        return cls((tau * a + b) / (tau * c + d))

    @classmethod
    def identity(cls) -> "CoordMap":
        return cls(RatFunc.variable())

    @cached_property
    def d1(self) -> RatFunc:
        return self.lam.derivative()

    @cached_property
    def d2(self) -> RatFunc:
        return self.d1.derivative()

    @cached_property
    def log_d1(self) -> RatFunc:
        """``lam'' / lam'``."""
        return self.d2 / self.d1

    @cached_property
    def schwarzian(self) -> RatFunc:
        return scalar_schwarzian(self.lam)

    def pullback(self, f):
        """``f o lam`` for a rational function or entrywise for a matrix."""
        if isinstance(f, RatMat):
            return f.compose(self.lam)
        return RatFunc.coerce(f).compose(self.lam)

    def __call__(self, x):
        return self.lam(x)


def schwarzian_chain_rule_check(f, lam: CoordMap) -> bool:
    """``S(f o lam) == lam'^2 (S(f) o lam) + S(lam)`` exactly."""
    f = RatFunc.coerce(f)
    lhs = scalar_schwarzian(f.compose(lam.lam))
    rhs = lam.d1 * lam.d1 * scalar_schwarzian(f).compose(lam.lam) + lam.schwarzian
    return lhs == rhs


@dataclass(frozen=True)
class ScalarODE:
    """``y'' = 2 p y' + q y``."""

    p: RatFunc
    q: RatFunc

    def __post_init__(self):
        object.__setattr__(self, "p", RatFunc.coerce(self.p))
        object.__setattr__(self, "q", RatFunc.coerce(self.q))

    @classmethod
    def from_standard_form(cls, b1, b0) -> "ScalarODE":
        """From ``y'' + b1 y' + b0 y = 0``."""
        return cls(-RatFunc.coerce(b1) * Fraction(1, 2), -RatFunc.coerce(b0))

    def standard_form(self) -> tuple[RatFunc, RatFunc]:
        """Coefficients ``(b1, b0)`` of ``y'' + b1 y' + b0 y = 0``."""
        return -2 * self.p, -self.q

    def projective_curvature(self) -> RatFunc:
        """``2 (p' - p^2 - q)``, the Schwarzian of a ratio of two solutions."""
        return 2 * (self.p.derivative() - self.p * self.p - self.q)


def coord_change_scalar_ode(ode: ScalarODE, lam: CoordMap) -> ScalarODE:
    """Equation satisfied by ``y o lam`` when ``y`` solves ``ode``."""
    p = ode.p.compose(lam.lam) * lam.d1 + lam.log_d1 * Fraction(1, 2)
    q = ode.q.compose(lam.lam) * lam.d1 * lam.d1
    return ScalarODE(p, q)


def eliminate_to_scalar(M: RatMat) -> ScalarODE:
    """Scalar equation for ``y`` where ``(y, z)' = M (y, z)``.

    Substituting ``z = (y' - a y)/b`` into the second row gives
    ``y'' = (a + d + b'/b) y' + (a' + bc - ad - a b'/b) y``; for the trace-free
    form ``d = -a`` this is ``2p = b'/b``.
    """
    if M.n != 2:
        raise ValueError("elimination needs a 2 x 2 system")
    (a, b), (c, d) = M.rows
    if b.is_zero():
        raise DegenerateCoupling("b == 0: first component decouples")
    lb = b.derivative() / b
    two_p = a + d + lb
    q = a.derivative() + b * c - a * d - a * lb
    return ScalarODE(two_p * Fraction(1, 2), q)


def wronskian(fs: Sequence) -> RatFunc:
    """Determinant of the matrix ``(f, f', ..., f^(n-1))`` of a vector ``f``."""
    fs = [RatFunc.coerce(f) for f in fs]
    n = len(fs)
    if n < 1:
        raise ValueError("Wronskian needs at least one function")
    rows = []
    for f in fs:
        row = [f]
        for _ in range(n - 1):
            row.append(row[-1].derivative())
        rows.append(row)
    return RatMat(rows).det()


def wronskian_weight_check(fs: Sequence, lam: CoordMap) -> bool:
    """``W(f o lam) == lam'^(n(n-1)/2) (W(f) o lam)``."""
    n = len(fs)
    lhs = wronskian([lam.pullback(f) for f in fs])
    rhs = lam.d1 ** (n * (n - 1) // 2) * wronskian(fs).compose(lam.lam)
    return lhs == rhs
