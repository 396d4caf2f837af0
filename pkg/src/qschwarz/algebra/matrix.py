"""Square matrices with rational-function entries."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence

import numpy as np

from ..errors import SingularMatrix
from .ratfunc import RatFunc

__all__ = ["RatMat"]


class RatMat:
    """Immutable ``n x n`` matrix over Q(t)."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(RatFunc.coerce(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("RatMat must be square and non-empty")
        self.rows = rows
        self.n = n
        self._hash = None

    @classmethod
    def _wrap(cls, rows) -> "RatMat":
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.n = len(obj.rows)
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        one, zero = RatFunc(1), RatFunc(0)
        return cls._wrap([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "RatMat":
        zero = RatFunc(0)
        return cls._wrap([[zero] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "RatMat":
        n = len(entries)
        zero = RatFunc(0)
        return cls._wrap(
            [[RatFunc.coerce(entries[i]) if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def scalar(cls, value, n: int) -> "RatMat":
        return cls.diag([value] * n)

    # access -----------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> RatFunc:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterable[RatFunc]:
        for r in self.rows:
            yield from r

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "RatMat":
        return RatMat._wrap([[fn(x) for x in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def is_constant(self) -> bool:
        return all(x.is_constant() for x in self.entries())

    def transpose(self) -> "RatMat":
        return RatMat._wrap(list(zip(*self.rows)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    # arithmetic -------------------------------------------------------
    def _check(self, other: "RatMat") -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other) -> "RatMat":
        if not isinstance(other, RatMat):
            return NotImplemented
        self._check(other)
        return RatMat._wrap([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other) -> "RatMat":
        if not isinstance(other, RatMat):
            return NotImplemented
        self._check(other)
        return RatMat._wrap([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "RatMat":
        return self.map(lambda x: -x)

    def __mul__(self, other) -> "RatMat":
        if isinstance(other, RatMat):
            self._check(other)
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = RatFunc(0)
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return RatMat._wrap(out)
        if isinstance(other, (RatFunc, int, Rational)):
            s = RatFunc.coerce(other)
            return self.map(lambda x: x * s)
        return NotImplemented

    def __rmul__(self, other) -> "RatMat":
        if isinstance(other, (RatFunc, int, Rational)):
            s = RatFunc.coerce(other)
            return self.map(lambda x: s * x)
        return NotImplemented

    __matmul__ = __mul__

    def __pow__(self, k: int) -> "RatMat":
        if k < 0:
            return self.inverse() ** (-k)
        result = RatMat.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # linear algebra ---------------------------------------------------
    def det(self) -> RatFunc:
        n = self.n
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        m = [list(r) for r in self.rows]
        det = RatFunc(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                return RatFunc(0)
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = -det
            p = m[k][k]
            det = det * p
            inv = p.inverse()
            for i in range(k + 1, n):
                if m[i][k]:
                    f = m[i][k] * inv
                    m[i] = [x - f * y if j >= k else x for j, (x, y) in enumerate(zip(m[i], m[k]))]
        return det

    def inverse(self) -> "RatMat":
        n = self.n
        if n == 2:
            (a, b), (c, d) = self.rows
            det = a * d - b * c
            if det.is_zero():
                raise SingularMatrix("matrix is singular (det = 0)")
            s = det.inverse()
            return RatMat._wrap([[d * s, -b * s], [-c * s, a * s]])
        one, zero = RatFunc(1), RatFunc(0)
        m = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                raise SingularMatrix("matrix is singular (det = 0)")
            m[k], m[piv] = m[piv], m[k]
            inv = m[k][k].inverse()
            m[k] = [x * inv for x in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [x - f * y if y else x for x, y in zip(m[i], m[k])]
        return RatMat._wrap([r[n:] for r in m])

    def derivative(self) -> "RatMat":
        return self.map(lambda x: x.derivative())

    def trace(self) -> RatFunc:
        acc = RatFunc(0)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def charpoly(self) -> list[RatFunc]:
        """Coefficients ``[c_0, ..., c_n]`` of ``det(x I - M)``, lowest degree first.

        Faddeev-LeVerrier recursion; exact because the base field has characteristic 0.
        """
        n = self.n
        coeffs = [RatFunc(0)] * (n + 1)
        coeffs[n] = RatFunc(1)
        ident = RatMat.identity(n)
        mk = RatMat.zeros(n)
        for k in range(1, n + 1):
            mk = self * mk + ident * coeffs[n - k + 1]
            coeffs[n - k] = (self * mk).trace() * Fraction(-1, k)
        return coeffs

    def conjugate_by(self, g: "RatMat") -> "RatMat":
        """``g^{-1} M g``."""
        return g.inverse() * self * g

    def compose(self, lam) -> "RatMat":
        return self.map(lambda x: x.compose(lam))

    def evaluate(self, x: float) -> np.ndarray:
        return np.array([[float(e.num(x) / e.den(x)) for e in r] for r in self.rows])

    # display ----------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        return "[" + "; ".join("[" + ", ".join(e.to_str(var) for e in r) + "]" for r in self.rows) + "]"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RatMat({self.to_str()})"
