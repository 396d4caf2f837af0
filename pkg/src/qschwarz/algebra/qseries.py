"""Truncated power series with exact rational coefficients.

A :class:`QSeries` of order ``N`` knows the coefficients of ``q^0 .. q^(N-1)``;
everything from ``q^N`` on is unknown (not zero).  Binary operations return the
smaller of the two orders.  The only derivation exposed is the normalized one,
``D = q d/dq``, which leaves the order unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

from ..errors import NonNilpotentExponent, NonUnitSeries
from .poly import as_fraction

__all__ = ["QSeries"]


class QSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [as_fraction(x) for x in coeffs]
        if order is None:
            order = len(c)
        if order < 1:
            raise ValueError("truncation order must be positive")
        c = c[:order] + [Fraction(0)] * (order - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def _wrap(cls, coeffs: list, order: int) -> "QSeries":
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.order = order
        return obj

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def q(cls, order: int) -> "QSeries":
        """The series variable itself."""
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient q^{k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return QSeries._wrap(list(self.coeffs[:order]), order)

    def valuation(self) -> int | None:
        """Index of the first nonzero known coefficient (``None`` if all vanish)."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # arithmetic -------------------------------------------------------
    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Rational)):
            c = list(self.coeffs)
            c[0] += as_fraction(other)
            return QSeries._wrap(c, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries._wrap([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._wrap([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Rational, QSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Rational)):
            f = as_fraction(other)
            return QSeries._wrap([a * f for a in self.coeffs], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return QSeries._wrap(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.invert() ** (-k)
        result = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self) -> "QSeries":
        a = self.coeffs
        if a[0] == 0:
            raise NonUnitSeries("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order):
            s = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(-s * inv0)
        return QSeries._wrap(out, self.order)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Rational)):
            return self * (1 / as_fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.invert()

    def exp(self) -> "QSeries":
        a = self.coeffs
        if a[0] != 0:
            raise NonNilpotentExponent("exp needs a series with zero constant term")
        # n e_n = sum_{k=1..n} k a_k e_{n-k}
        out = [Fraction(1)]
        for n in range(1, self.order):
            s = sum((k * a[k] * out[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
            out.append(s / n)
        return QSeries._wrap(out, self.order)

    def derive(self) -> "QSeries":
        """Normalized derivation ``D = q d/dq`` (``D q^n = n q^n``)."""
        return QSeries._wrap([n * c for n, c in enumerate(self.coeffs)], self.order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k`` (``k >= 0``); the order grows by ``k``."""
        return QSeries._wrap([Fraction(0)] * k + list(self.coeffs), self.order + k)

    def unshift(self, k: int) -> "QSeries":
        """Divide by ``q^k``; the first ``k`` coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise NonUnitSeries(f"series is not divisible by q^{k}")
        if k >= self.order:
            raise ValueError("no coefficients left after division")
        return QSeries._wrap(list(self.coeffs[k:]), self.order - k)

    def log_derivative(self) -> "QSeries":
        """``D(f)/f`` for ``f = q^v u`` with ``u(0) != 0``; equals ``v + D(u)/u``.

        The result has order ``N - v``.
        """
        v = self.valuation()
        if v is None:
            raise NonUnitSeries("logarithmic derivative of a series with no known nonzero term")
        u = self.unshift(v)
        return u.derive() / u + v

    # display ----------------------------------------------------------
    def to_list(self) -> list[Fraction]:
        return list(self.coeffs)

    def to_str(self, var: str = "q", terms: int | None = None) -> str:
        parts = []
        for n, c in enumerate(self.coeffs[: terms if terms is not None else self.order]):
            if c == 0:
                continue
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            s = "0"
        else:
            s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                s += f" {sign} {body}"
        if terms is not None and terms < self.order:
            return f"{s} + ..."
        return f"{s} + O({var}^{self.order})"

    def __str__(self) -> str:
        return self.to_str(terms=8)

    def __repr__(self) -> str:
        return f"QSeries({self.to_str(terms=8)})"
