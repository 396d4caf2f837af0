"""Damped mass-spring systems ``psi'' = p psi' + q psi`` under changes of clock.

The symbolic side (reparametrization, projective curvature) is exact.  The
numeric side integrates with the classical fourth-order Runge-Kutta method in
double precision and compares trajectories across clocks.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

import numpy as np

from .algebra import Poly, QSeries, RatFunc, RatMat, as_fraction
from .core import CoordMap
from .core.connection import _as_mat
from .errors import ConstantPhase, NonMonotoneClock, NonPositiveStiffness, PoleOnPath
from .report import CheckReport, series_check

__all__ = [
    "SpringSystem",
    "Trajectory",
    "clock_invariance_check",
    "harmonic_quantum_check",
    "integrate_system",
    "projective_curvature",
    "reparametrize_system",
    "tensor_law_check",
    "two_mass_stiffness",
]


@dataclass(frozen=True)
class SpringSystem:
    """Damping ``p`` and stiffness ``q`` of ``psi'' = p psi' + q psi``."""

    p: RatMat
    q: RatMat

    def __post_init__(self):
        object.__setattr__(self, "p", _as_mat(RatFunc.coerce(self.p) if not isinstance(self.p, RatMat) else self.p))
        object.__setattr__(self, "q", _as_mat(RatFunc.coerce(self.q) if not isinstance(self.q, RatMat) else self.q))
        if self.p.n != self.q.n:
            raise ValueError("p and q must have the same dimension")

    @property
    def n(self) -> int:
        return self.p.n

    @classmethod
    def undamped(cls, q: RatMat) -> "SpringSystem":
        q = _as_mat(q)
        return cls(RatMat.zeros(q.n), q)


def two_mass_stiffness(k1, k2) -> RatMat:
    """Stiffness matrix of two masses on a chain of two springs (unit masses)."""
    k1, k2 = as_fraction(k1), as_fraction(k2)
    if k1 <= 0 or k2 <= 0:
        raise NonPositiveStiffness("spring constants must be positive")
    return RatMat([[-k1 - k2, k2], [k2, -k2]])


def reparametrize_system(S: SpringSystem, lam: CoordMap) -> SpringSystem:
    """Coefficients in the clock ``tau`` where ``t = lam(tau)``."""
    ident = RatMat.identity(S.n)
    p = lam.pullback(S.p) * lam.d1 + ident * lam.log_d1
    q = lam.pullback(S.q) * (lam.d1 * lam.d1)
    return SpringSystem(p, q)


def projective_curvature(S: SpringSystem) -> RatMat:
    """Traceless part of ``F_A - q`` with ``A = p/2`` and ``F_A = A' - A^2``."""
    A = S.p * Fraction(1, 2)
    M = A.derivative() - A * A - S.q
    return M - RatMat.identity(S.n) * (M.trace() * Fraction(1, S.n))


def tensor_law_check(S: SpringSystem, lam: CoordMap) -> bool:
    """The projective curvature transforms by ``lam'^2`` with no anomaly."""
    lhs = projective_curvature(reparametrize_system(S, lam))
    rhs = lam.pullback(projective_curvature(S)) * (lam.d1 * lam.d1)
    return lhs == rhs


# numerics -------------------------------------------------------------------


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray

    def __post_init__(self):
        if not (len(self.times) == len(self.psi) == len(self.dpsi)):
            raise ValueError("times and states must have equal lengths")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    def to_csv(self, out: TextIO) -> None:
        """Write ``time, psi_1.., dpsi_1..`` rows."""
        n = self.psi.shape[1]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["time"] + [f"psi_{i + 1}" for i in range(n)] + [f"dpsi_{i + 1}" for i in range(n)])
        for tk, x, v in zip(self.times, self.psi, self.dpsi):
            w.writerow([repr(float(tk))] + [repr(float(c)) for c in x] + [repr(float(c)) for c in v])


def _check_no_poles(M: RatMat, lo, hi) -> None:
    lo, hi = Fraction(lo), Fraction(hi)
    for e in M.entries():
        if e.den.degree > 0 and e.den.count_real_roots(lo, hi) > 0:
            raise PoleOnPath(f"coefficient {e} has a pole in [{float(lo)}, {float(hi)}]")


def _compile(M: RatMat):
    """Fast float evaluator ``t -> ndarray`` for a matrix of rational functions."""
    if M.is_constant():
        const = M.evaluate(0.0)
        return lambda _t: const
    n = M.n
    table = [(np.array(e.num.float_coeffs() or [0.0]), np.array(e.den.float_coeffs())) for e in M.entries()]

    def ev(x):
        return np.array([np.polyval(a, x) / np.polyval(b, x) for a, b in table]).reshape(n, n)

    return ev


class _Stepper:
    def __init__(self, S: SpringSystem):
        self.p = _compile(S.p)
        self.q = _compile(S.q)

    def rhs(self, x, y, v):
        return v, self.p(x) @ v + self.q(x) @ y

    def step(self, x, y, v, h):
        k1y, k1v = self.rhs(x, y, v)
        k2y, k2v = self.rhs(x + h / 2, y + h / 2 * k1y, v + h / 2 * k1v)
        k3y, k3v = self.rhs(x + h / 2, y + h / 2 * k2y, v + h / 2 * k2v)
        k4y, k4v = self.rhs(x + h, y + h * k3y, v + h * k3v)
        y = y + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
        v = v + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
        return y, v

    def advance(self, x0, x1, y, v, h):
        """Go from ``x0`` to ``x1`` (either direction) in equal steps of size at most ``h``."""
        m = max(1, math.ceil(abs(x1 - x0) / h - 1e-9))
        dx = (x1 - x0) / m
        for k in range(m):
            y, v = self.step(x0 + k * dx, y, v, dx)
        return y, v


def _vec(v, n: int) -> np.ndarray:
    arr = np.asarray(v, dtype=float).reshape(-1)
    if arr.shape != (n,):
        raise ValueError(f"expected a vector of length {n}")
    return arr


def integrate_system(S: SpringSystem, psi0, v0, t0: float, t1: float, h: float) -> Trajectory:
    """Fourth-order Runge-Kutta on the first-order companion system.

    The step is shrunk slightly so that the grid lands exactly on ``t1``.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    if not t1 > t0:
        raise ValueError("need t1 > t0")
    _check_no_poles(S.p, t0, t1)
    _check_no_poles(S.q, t0, t1)
    m = max(1, math.ceil((t1 - t0) / h - 1e-9))
    times = np.linspace(t0, t1, m + 1)
    dt = (t1 - t0) / m
    y, v = _vec(psi0, S.n), _vec(v0, S.n)
    st = _Stepper(S)
    ys, vs = [y], [v]
    for k in range(m):
        y, v = st.step(times[k], y, v, dt)
        ys.append(y)
        vs.append(v)
    return Trajectory(times, np.array(ys), np.array(vs))


def _check_monotone(lam: CoordMap, lo, hi) -> None:
    lo, hi = Fraction(lo), Fraction(hi)
    d1 = lam.d1
    if d1.num.count_real_roots(lo, hi) > 0:
        raise NonMonotoneClock("clock derivative vanishes on the window")
    if d1.den.degree > 0 and d1.den.count_real_roots(lo, hi) > 0:
        raise NonMonotoneClock("clock has a pole on the window")


def clock_invariance_check(
    S: SpringSystem,
    lam: CoordMap,
    window: tuple[float, float] = (0.0, 1.0),
    h: float = 1e-3,
    psi0: Sequence[float] | None = None,
    v0: Sequence[float] | None = None,
) -> float:
    """Max deviation between the system in clock ``tau`` and the original read through ``lam``.

    Initial data are matched by the chain rule: ``psi~(tau0) = psi(lam(tau0))``
    and ``psi~'(tau0) = lam'(tau0) psi'(lam(tau0))``.  The original system is
    integrated between consecutive images ``lam(tau_k)`` with steps of size at
    most ``h``, so the identity clock reproduces the same arithmetic.
    """
    tau0, tau1 = window
    if not tau1 > tau0:
        raise ValueError("window must have tau1 > tau0")
    _check_monotone(lam, tau0, tau1)
    n = S.n
    psi0 = np.ones(n) if psi0 is None else _vec(psi0, n)
    v0 = np.zeros(n) if v0 is None else _vec(v0, n)
    St = reparametrize_system(S, lam)
    traj = integrate_system(St, psi0, float(lam.d1(Fraction(tau0))) * v0, tau0, tau1, h)
    images = [float(lam(Fraction(x))) for x in traj.times]
    _check_no_poles(S.p, min(images), max(images))
    _check_no_poles(S.q, min(images), max(images))
    st = _Stepper(S)
    y, v = psi0, v0
    worst = float(np.max(np.abs(traj.psi[0] - y)))
    for k in range(1, len(images)):
        y, v = st.advance(images[k - 1], images[k], y, v, h)
        worst = max(worst, float(np.max(np.abs(traj.psi[k] - y))))
    return worst


# harmonic example -------------------------------------------------------------


def _poly_series(p: Poly, order: int) -> QSeries:
    return QSeries(p.coeffs, order)


def harmonic_quantum_check(omega, f, N: int = 32) -> list[CheckReport]:
    """``Y = exp(+-omega f)`` against ``f' Y'' - f'' Y' - omega^2 f'^3 Y = 0`` as series in ``t``.

    Only ``D = t d/dt`` is available on series, so the residual is multiplied
    by ``t^2``: ``t^2 Y'' = D^2 Y - D Y`` and ``t Y' = D Y``.  ``Y`` is expanded
    to order ``N + 2`` so the residual itself is checked through ``t^(N-1)``.
    """
    f = f if isinstance(f, Poly) else Poly(f)
    omega = as_fraction(omega)
    if f.degree < 1:
        raise ConstantPhase("phase f must be nonconstant")
    if f[0] != 0:
        raise ValueError("phase must vanish at 0 for the series exponential")
    M = N + 2
    d1, d2 = f.derivative(), f.derivative().derivative()
    t = Poly.variable()
    a = _poly_series(d1, M)
    b = _poly_series(t * d2, M)
    c = _poly_series(t * t * d1**3 * omega**2, M)
    phase = _poly_series(f, M)

    def residual(Y: QSeries) -> QSeries:
        DY = Y.derive()
        return a * (DY.derive() - DY) - b * DY - c * Y

    zero = QSeries([], M)
    anchor = "exponential solutions of the harmonic second-order equation"
    plus, minus = (phase * omega).exp(), (phase * -omega).exp()
    return [
        series_check("mass-spring", "harmonic exp(+wf)", residual(plus), zero, anchor),
        series_check("mass-spring", "harmonic exp(-wf)", residual(minus), zero, anchor),
        series_check("mass-spring", "harmonic exp(wf) + exp(-wf)", residual(plus + minus), zero, anchor),
    ]
