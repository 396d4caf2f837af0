"""Reduced rational functions in one variable over Q.

Canonical form: ``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic.  Two
rational functions are equal iff their canonical forms coincide, which is what
lets identities be asserted with ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational

from ..errors import DivisionByZero, PoleAtConstant
from .poly import Poly, as_fraction, gcd_cofactors

__all__ = ["RatFunc", "t", "rf"]


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            # quotient of two rational functions: fold into polynomial form
            a, b = RatFunc.coerce(num), RatFunc.coerce(den)
            if b.is_zero():
                raise DivisionByZero("rational function with zero denominator")
            num, den = a.num * b.den, a.den * b.num
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = RatFunc._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
        if num.is_zero():
            return num, Poly.constant(1)
        if not den.is_constant():
            g, n1, d1 = gcd_cofactors(num, den)
            if g.degree > 0:
                num, den = n1, d1
        lc = den.lc
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        return num, den

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFunc":
        return cls(num, den, _reduced=True)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls._make(x, Poly.constant(1))
        if isinstance(x, (int, Rational, str)):
            return cls._make(Poly.constant(x), Poly.constant(1))
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls._make(Poly.variable(), Poly.constant(1))

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num[0]

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # field operations -------------------------------------------------
    def __add__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        if b.is_constant() and d.is_constant():
            return RatFunc._make(a + c, b)
        # Henrici: with g = gcd(b, d) only g can share factors with the numerator
        g, b1, d1 = gcd_cofactors(b, d)
        if g.degree == 0:
            return RatFunc._make(a * d + c * b, b * d)
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFunc()
        h, n1, g1 = gcd_cofactors(n, g)
        if h.degree > 0:
            n, g = n1, g1
        return RatFunc._make(n, b1 * d1 * g)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self.num, self.den)

    def __pos__(self) -> "RatFunc":
        return self

    def __sub__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Rational)) and not isinstance(other, RatFunc):
            f = as_fraction(other)
            if f == 0:
                return RatFunc()
            return RatFunc._make(self.num * f, self.den)
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc()
        a, b, c, d = self.num, self.den, other.num, other.den
        if not d.is_constant():
            _, a, d = gcd_cofactors(a, d)
        if not b.is_constant():
            _, c, b = gcd_cofactors(c, b)
        num, den = a * c, b * d
        lc = den.lc
        if lc != 1:
            num, den = num * (1 / lc), den.monic()
        return RatFunc._make(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("division by the zero rational function")
        num, den = self.den, self.num
        lc = den.lc
        return RatFunc._make(num * (1 / lc), den.monic())

    def __truediv__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._make(self.num ** k, self.den ** k)

    # calculus ---------------------------------------------------------
    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        if d.is_constant():
            return RatFunc._make(n.derivative(), d)
        # (n/d)' = (n'd - nd')/d^2; only gcd(d, d') can cancel
        dd = d.derivative()
        _, d1, dd1 = gcd_cofactors(d, dd)
        top = n.derivative() * d1 - n * dd1
        return RatFunc(top, d1 * d)

    def compose(self, g) -> "RatFunc":
        """``self(g(t))``; raises :class:`PoleAtConstant` for a constant ``g`` at a pole."""
        g = RatFunc.coerce(g)
        if g.is_constant():
            return RatFunc.coerce(self(g.constant_value()))
        P, Q = g.num, g.den

        dn, dd = max(self.num.degree, 0), max(self.den.degree, 0)
        top_deg = max(dn, dd)
        Ppow = [Poly.constant(1)]
        Qpow = [Poly.constant(1)]
        for _ in range(top_deg):
            Ppow.append(Ppow[-1] * P)
            Qpow.append(Qpow[-1] * Q)

        def homog(p: Poly) -> Poly:
            # Q^top_deg * p(P/Q)
            out = Poly()
            for i, c in enumerate(p.coeffs):
                if c:
                    out = out + Ppow[i] * Qpow[top_deg - i] * c
            return out

        return RatFunc(homog(self.num), homog(self.den))

    def __call__(self, x):
        if isinstance(x, (RatFunc, Poly)):
            return self.compose(x)
        if isinstance(x, float) or not isinstance(x, (int, Rational)):
            return self.num(x) / self.den(x)
        x = as_fraction(x)
        d = self.den(x)
        if d == 0:
            raise PoleAtConstant(f"pole at {x}")
        return self.num(x) / d

    # display ----------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        if self.den == Poly.constant(1):
            return self.num.to_str(var)
        # clear denominators so both sides print with integer coefficients
        (nc, nd), (dc, dd) = self.num.int_coeffs(), self.den.int_coeffs()
        nc = [c * dd for c in nc]
        dc = [c * nd for c in dc]
        g = reduce(gcd, nc + dc)
        n = Poly([c // g for c in nc]).to_str(var)
        d = Poly([c // g for c in dc]).to_str(var)
        if " " in n:
            n = f"({n})"
        if " " in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RatFunc({self.to_str()})"


t = RatFunc.variable()


def rf(num, den=1) -> RatFunc:
    """Build a reduced rational function from coefficient lists or constants."""
    if isinstance(num, (list, tuple)):
        num = Poly(num)
    if isinstance(den, (list, tuple)):
        den = Poly(den)
    return RatFunc(num, den)
