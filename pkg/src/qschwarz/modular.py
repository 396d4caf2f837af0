"""Level-one q-expansions: Eisenstein series, the discriminant, Serre derivative, Chazy.

All derivatives are the normalized derivation ``D = q d/dq``.  Identities are
checked on every coefficient below the truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

from .algebra import QSeries
from .errors import UnsupportedWeight
from .report import CheckReport, series_check

__all__ = [
    "DEFAULT_ORDER",
    "ModularCurvature",
    "ModularSeries",
    "bernoulli",
    "chazy_check",
    "delta",
    "eisenstein",
    "modular_covariant_derivative",
    "modular_curvature",
    "modular_curvature_checks",
    "ramanujan_check",
    "serre_derivative",
    "sigma",
    "wronskian_series",
]

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class ModularSeries:
    series: QSeries
    weight: int
    label: str

    @property
    def order(self) -> int:
        return self.series.order

    def __getitem__(self, k: int) -> Fraction:
        return self.series[k]


def sigma(r: int, n: int) -> int:
    """Divisor power sum ``sum_{d | n} d^r``."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**r
            e = n // d
            if e != d:
                total += e**r
    return total


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    return B[n]


def eisenstein(k: int, N: int = DEFAULT_ORDER) -> ModularSeries:
    """``E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n`` for ``k`` in {2, 4, 6}."""
    if k not in (2, 4, 6):
        raise UnsupportedWeight(f"weight {k} not supported (use 2, 4 or 6)")
    if N < 2:
        raise ValueError("order must be at least 2")
    c = -2 * k / bernoulli(k)
    coeffs = [Fraction(1)] + [c * sigma(k - 1, n) for n in range(1, N)]
    return ModularSeries(QSeries(coeffs, N), k, f"E{k}")


def _euler_product(N: int) -> QSeries:
    # prod_{n >= 1} (1 - q^n) to order N; each factor is a sparse update
    c = [Fraction(0)] * N
    c[0] = Fraction(1)
    for n in range(1, N):
        for k in range(N - 1, n - 1, -1):
            c[k] -= c[k - n]
    return QSeries(c, N)


def delta(N: int = DEFAULT_ORDER, method: str = "product") -> ModularSeries:
    """Discriminant ``q prod (1 - q^n)^24`` or ``(E4^3 - E6^2)/1728``."""
    if N < 2:
        raise ValueError("order must be at least 2")
    if method == "product":
        s = (_euler_product(N) ** 24).shift(1).truncate(N)
    elif method == "eisenstein":
        e4, e6 = eisenstein(4, N).series, eisenstein(6, N).series
        s = (e4 * e4 * e4 - e6 * e6) / 1728
    else:
        raise ValueError(f"unknown method {method!r}")
    return ModularSeries(s, 12, "Delta")


def modular_covariant_derivative(f: ModularSeries, a: QSeries, e=1) -> ModularSeries:
    """``D f - (k / 2e) a f`` for a weight-``k`` form and a connection ``a`` of eccentricity ``e``."""
    coeff = Fraction(f.weight) / (2 * Fraction(e))
    return ModularSeries(f.series.derive() - a * f.series * coeff, f.weight + 2, f"nabla({f.label})")


def serre_derivative(f: ModularSeries) -> ModularSeries:
    """``D f - (k/12) E2 f``, raising the weight by 2."""
    a = eisenstein(2, f.order).series / 6
    out = modular_covariant_derivative(f, a, 1)
    return ModularSeries(out.series, out.weight, f"serre({f.label})")


def ramanujan_check(N: int = DEFAULT_ORDER) -> list[CheckReport]:
    if N < 8:
        raise ValueError("order must be at least 8")
    e2, e4, e6 = (eisenstein(k, N).series for k in (2, 4, 6))
    anchor = "Ramanujan differential identities"
    return [
        series_check("modular", "ramanujan E2", e2.derive(), (e2 * e2 - e4) / 12, anchor),
        series_check("modular", "ramanujan E4", e4.derive(), (e2 * e4 - e6) / 3, anchor),
        series_check("modular", "ramanujan E6", e6.derive(), (e2 * e6 - e4 * e4) / 2, anchor),
    ]


def chazy_check(N: int = DEFAULT_ORDER) -> list[CheckReport]:
    """Scalar and covariant forms of the Chazy equation for ``E2``.

    Covariant form: ``A = E2/6`` of eccentricity 1, ``F_A = A' - A^2/2`` and
    ``nabla_A^2 F_A + 12 F_A^2 = 0``.
    """
    if N < 8:
        raise ValueError("order must be at least 8")
    E2, E4, E6 = (eisenstein(k, N) for k in (2, 4, 6))
    u = E2.series
    u1 = u.derive()
    u2 = u1.derive()
    u3 = u2.derive()
    zero = QSeries([], N)
    anchor = "Chazy equation for E2"
    reports = [
        series_check("chazy", "scalar 2u''' - 2uu'' + 3u'^2 = 0", u3 * 2 - u * u2 * 2 + u1 * u1 * 3, zero, anchor)
    ]
    A = u / 6
    F = ModularSeries(A.derive() - A * A / 2, 4, "F_A")
    nF = modular_covariant_derivative(F, A, 1)
    nnF = modular_covariant_derivative(nF, A, 1)
    e4, e6 = E4.series, E6.series
    reports += [
        series_check("chazy", "F_A = -E4/72", F.series, e4 * Fraction(-1, 72), anchor),
        series_check("chazy", "nabla F_A = E6/216", nF.series, e6 / 216, anchor),
        series_check("chazy", "nabla^2 F_A = -E4^2/432", nnF.series, e4 * e4 * Fraction(-1, 432), anchor),
        series_check("chazy", "nabla^2 F_A + 12 F_A^2 = 0", nnF.series + F.series * F.series * 12, zero, anchor),
    ]
    return reports


def _series_det(m: Sequence[Sequence[QSeries]]) -> QSeries:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _series_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def wronskian_series(components: Sequence[QSeries]) -> QSeries:
    """``det(f, Df, ..., D^(n-1) f)`` for a tuple of series."""
    n = len(components)
    rows = []
    for f in components:
        row = [f]
        for _ in range(n - 1):
            row.append(row[-1].derive())
        rows.append(row)
    return _series_det(rows)


@dataclass(frozen=True)
class ModularCurvature:
    wronskian: ModularSeries
    connection: QSeries
    curvature: ModularSeries


def modular_curvature(components: Sequence, m: int) -> ModularCurvature:
    """Curvature of the Maurer-Cartan connection of a Wronskian.

    For ``n`` components of weight ``2m`` the Wronskian has weight
    ``N = 2mn + n(n-1)``; ``A = (2/N) D(Wr)/Wr`` has eccentricity 1 and
    ``F_A = A' - A^2/2`` has weight 4.
    """
    series = [c.series if isinstance(c, ModularSeries) else c for c in components]
    n = len(series)
    weight = 2 * m * n + n * (n - 1)
    wr = wronskian_series(series)
    A = wr.log_derivative() * Fraction(2, weight)
    F = A.derive() - A * A / 2
    return ModularCurvature(ModularSeries(wr, weight, "Wr"), A, ModularSeries(F, 4, "F_A"))


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Q for a square system; ``None`` if singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def modular_curvature_checks(N: int = DEFAULT_ORDER) -> list[CheckReport]:
    """Consistency of the Wronskian curvature construction.

    For ``(E4, E6)`` with ``m = 2`` the Wronskian weight is 10, ``Wr`` matches its
    Ramanujan closed form and ``A Wr = (2/10) D Wr``.  For the weight-12 pair
    ``(E4^3, Delta)`` the Wronskian is ``Delta E4^2 E6`` and ``F_A E4^2 E6^2``
    must be a weight-24 form, i.e. a combination of ``E4^6, E4^3 E6^2, E6^4``.
    """
    if N < 8:
        raise ValueError("order must be at least 8")
    E2, E4, E6 = (eisenstein(k, N + 1).series for k in (2, 4, 6))
    anchor = "modular curvature of a Wronskian"
    out = []
    mc = modular_curvature([E4, E6], 2)
    closed = E2 * E4 * E6 / 6 - E4 * E4 * E4 / 2 + E6 * E6 / 3
    out.append(
        CheckReport(
            "modular", "wronskian weight (E4, E6)", "pass" if mc.wronskian.weight == 10 else "fail", "10",
            str(mc.wronskian.weight), anchor,
        )
    )
    out.append(series_check("modular", "wronskian (E4, E6) closed form", mc.wronskian.series, closed, anchor))
    wr = mc.wronskian.series.unshift(1)
    out.append(
        series_check(
            "modular", "A Wr = (2/10) D Wr", mc.connection * wr, (wr.derive() + wr) * Fraction(1, 5), anchor
        )
    )
    d = delta(N + 1).series
    mc2 = modular_curvature([E4 * E4 * E4, d], 6)
    out.append(series_check("modular", "wronskian (E4^3, Delta)", mc2.wronskian.series, d * E4 * E4 * E6, anchor))
    target = (mc2.curvature.series * E4 * E4 * E6 * E6).truncate(N)
    basis = [(E4**6).truncate(N), (E4**3 * E6 * E6).truncate(N), (E6**4).truncate(N)]
    coef = _solve_exact([[b[k] for b in basis] for k in range(3)], [target[k] for k in range(3)])
    fit = basis[0] * coef[0] + basis[1] * coef[1] + basis[2] * coef[2]
    out.append(series_check("modular", "F_A E4^2 E6^2 in M_24", target, fit, anchor))
    return out
