"""Matrix connections with an eccentricity: curvature, covariant derivative, gauge action."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import RatFunc, RatMat, as_fraction
from ..errors import SingularGauge, SingularInput, SingularMatrix, ZeroEccentricity, ZeroWeight
from .scalar import CoordMap

__all__ = [
    "Connection",
    "coord_change_connection",
    "covariant_derivative",
    "curvature",
    "curvature_anomaly_check",
    "curvature_covariance_defect",
    "gauge_act_connection",
    "maurer_cartan",
]


def _as_mat(x) -> RatMat:
    if isinstance(x, RatMat):
        return x
    return RatMat([[x]])


@dataclass(frozen=True)
class Connection:
    """Coefficient matrix ``A`` of a connection of eccentricity ``e``.

    Under ``t = lam(tau)`` it transforms as ``lam' (A o lam) + e (lam''/lam') I``.
    """

    A: RatMat
    e: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "A", _as_mat(self.A))
        object.__setattr__(self, "e", as_fraction(self.e))

    @property
    def n(self) -> int:
        return self.A.n


def _inverse(g: RatMat) -> RatMat:
    try:
        return g.inverse()
    except SingularMatrix as exc:
        raise SingularGauge("gauge matrix has identically vanishing determinant") from exc


def curvature(C: Connection) -> RatMat:
    """``F_A = A' - A^2 / (2e)``."""
    if C.e == 0:
        raise ZeroEccentricity("curvature needs e != 0")
    return C.A.derivative() - (C.A * C.A) * (1 / (2 * C.e))


def coord_change_connection(C: Connection, lam: CoordMap) -> Connection:
    ident = RatMat.identity(C.n)
    A = lam.pullback(C.A) * lam.d1 + ident * (lam.log_d1 * C.e)
    return Connection(A, C.e)


def curvature_anomaly_check(C: Connection, lam: CoordMap) -> bool:
    """``F_{A_j} == lam'^2 (F_{A_i} o lam) + e S(lam) I`` with ``A_j`` the transformed connection."""
    lhs = curvature(coord_change_connection(C, lam))
    rhs = lam.pullback(curvature(C)) * (lam.d1 * lam.d1) + RatMat.identity(C.n) * (
        lam.schwarzian * C.e
    )
    return lhs == rhs


def covariant_derivative(C: Connection, psi, m) -> RatMat:
    """``psi' - (m/e) A psi`` on a weight-``m`` coefficient ``psi``."""
    if C.e == 0:
        raise ZeroEccentricity("covariant derivative needs e != 0")
    psi = _as_mat(psi)
    return psi.derivative() - (C.A * psi) * (as_fraction(m) / C.e)


def gauge_act_connection(g: RatMat, C: Connection) -> Connection:
    """``g . A = g A g^-1 + g' g^-1`` (same eccentricity)."""
    g = _as_mat(g)
    gi = _inverse(g)
    return Connection(g * C.A * gi + g.derivative() * gi, C.e)


def curvature_covariance_defect(g: RatMat, C: Connection) -> RatMat:
    """``F_{g.A} - g F_A g^-1``; nonzero in general for noncommuting data."""
    g = _as_mat(g)
    return curvature(gauge_act_connection(g, C)) - g * curvature(C) * _inverse(g)


def maurer_cartan(psi, m) -> Connection:
    """Left Maurer-Cartan connection ``(1/m) psi^-1 psi'`` of eccentricity 1."""
    m = as_fraction(m)
    if m == 0:
        raise ZeroWeight("Maurer-Cartan connection needs m != 0")
    psi = _as_mat(psi)
    try:
        inv = psi.inverse()
    except SingularMatrix as exc:
        raise SingularInput("psi has identically vanishing determinant") from exc
    return Connection((inv * psi.derivative()) * (1 / m), Fraction(1))
