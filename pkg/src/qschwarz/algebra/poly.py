"""Dense univariate polynomials with exact rational coefficients.

:class:`Poly` is a thin immutable wrapper around FLINT's ``fmpq_poly``: the
heavy lifting (multiplication, division, gcd) happens in C, while this class
supplies hashing, ``Fraction`` interop, display and exact real-root counting.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

import flint

from ..errors import DivisionByZero

__all__ = ["Poly", "gcd_cofactors", "poly_gcd", "as_fraction"]

_fmpq = flint.fmpq
_fpoly = flint.fmpq_poly


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, _fmpq):
        return Fraction(int(x.p), int(x.q))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _to_fmpq(x) -> _fmpq:
    if isinstance(x, int):
        return _fmpq(x)
    f = as_fraction(x)
    return _fmpq(f.numerator, f.denominator)


class Poly:
    """Immutable polynomial over Q in one variable.

    Coefficients are indexed by degree; ``Poly([1, 0, 2])`` is ``1 + 2 t^2``.
    The zero polynomial has degree ``-1``.
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self._p = _fpoly([_to_fmpq(x) for x in coeffs])
        self._hash = None

    @classmethod
    def _wrap(cls, p: _fpoly) -> "Poly":
        obj = object.__new__(cls)
        obj._p = p
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def constant(cls, value) -> "Poly":
        return cls._wrap(_fpoly([_to_fmpq(value)]))

    @classmethod
    def variable(cls) -> "Poly":
        return cls._wrap(_fpoly([0, 1]))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        return cls._wrap(_fpoly([0] * degree + [_to_fmpq(coeff)]))

    # basic properties -------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(as_fraction(c) for c in self._p.coeffs())

    @property
    def degree(self) -> int:
        return self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    @property
    def lc(self) -> Fraction:
        return as_fraction(self._p[self._p.degree()]) if not self._p.is_zero() else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return as_fraction(self._p[k]) if 0 <= k <= self._p.degree() else Fraction(0)

    def __len__(self) -> int:
        return self._p.degree() + 1

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._p == other._p
        if isinstance(other, (int, Rational)):
            return self._p == _fpoly([_to_fmpq(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            c, d = self.int_coeffs()
            self._hash = hash((c, d))
        return self._hash

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _other(x):
        if isinstance(x, Poly):
            return x._p
        if isinstance(x, int):
            return x
        if isinstance(x, Rational):
            return _to_fmpq(x)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        o = Poly._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self._p + o)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap(-self._p)

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other) -> "Poly":
        o = Poly._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self._p - o)

    def __rsub__(self, other) -> "Poly":
        o = Poly._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(o - self._p)

    def __mul__(self, other) -> "Poly":
        o = Poly._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly._wrap(self._p * o)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(self._p**k)

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        o = Poly._other(other)
        if o is NotImplemented:
            return NotImplemented
        if not isinstance(o, _fpoly):
            o = _fpoly([o])
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = divmod(self._p, o)
        return Poly._wrap(q), Poly._wrap(r)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient when ``other`` is known to divide ``self``."""
        quot, rem = divmod(self, other)
        if rem:
            raise ArithmeticError("polynomial does not divide exactly")
        return quot

    def monic(self) -> "Poly":
        if self._p.is_zero():
            return self
        return Poly._wrap(self._p / self._p[self._p.degree()])

    def primitive_part(self) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if self._p.is_zero():
            return self
        z = self._p.numer()
        c = z.content()
        if z[z.degree()] < 0:
            c = -c
        return Poly._wrap(_fpoly(z) / c)

    def int_coeffs(self) -> tuple[tuple[int, ...], int]:
        """``(integer numerators, common denominator)`` with the denominator positive and minimal."""
        return tuple(int(c) for c in self._p.numer().coeffs()), int(self._p.denom())

    # calculus and evaluation -----------------------------------------
    def derivative(self) -> "Poly":
        return Poly._wrap(self._p.derivative())

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        if isinstance(x, float) or not isinstance(x, (int, Rational)):
            acc = 0.0
            for v in reversed(self.coeffs):
                acc = acc * x + float(v)
            return acc
        return as_fraction(self._p(_to_fmpq(x)))

    def compose(self, g: "Poly") -> "Poly":
        return Poly._wrap(self._p(g._p))

    def float_coeffs(self) -> list[float]:
        """Coefficients as floats, highest degree first (``numpy.polyval`` order)."""
        return [float(v) for v in reversed(self.coeffs)]

    # real roots -------------------------------------------------------
    def count_real_roots(self, lo, hi) -> int:
        """Number of distinct real roots in the closed interval ``[lo, hi]`` (Sturm sequence)."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinitely many roots")
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            lo, hi = hi, lo
        sqf = self.exact_div(poly_gcd(self, self.derivative()))
        if sqf.degree < 1:
            return 0
        seq = [sqf, sqf.derivative()]
        while seq[-1].degree > 0:
            r = -(seq[-2] % seq[-1])
            if r.is_zero():
                break
            seq.append(r)

        def variations(x):
            signs = [s for s in (p(x) for p in seq) if s != 0]
            return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

        # Sturm counts roots in (lo, hi]; add lo separately
        return variations(lo) - variations(hi) + (1 if sqf(lo) == 0 else 0)

    # display ----------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        cs = self.coeffs
        if not cs:
            return "0"
        terms = []
        for i in range(len(cs) - 1, -1, -1):
            c = cs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``poly_gcd(0, 0)`` is the zero polynomial."""
    return Poly._wrap(a._p.gcd(b._p))


def gcd_cofactors(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """``(g, a/g, b/g)`` with ``g`` the monic gcd of two nonzero polynomials."""
    if a.is_zero() or b.is_zero():
        raise ValueError("cofactors need nonzero inputs")
    g = a._p.gcd(b._p)
    if g.degree() == 0:
        return Poly._wrap(g), a, b
    return Poly._wrap(g), Poly._wrap(a._p // g), Poly._wrap(b._p // g)
