from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qschwarz import RatFunc, RatMat, t
from qschwarz.core import (
    Connection,
    CoordMap,
    coord_change_connection,
    covariant_derivative,
    curvature,
    curvature_anomaly_check,
    curvature_covariance_defect,
    gauge_act_connection,
    maurer_cartan,
    scalar_schwarzian,
)
from qschwarz.errors import SingularGauge, SingularInput, ZeroEccentricity, ZeroWeight

from oracles import nonconstant, ratfuncs, same, to_sympy

mats2 = st.lists(ratfuncs, min_size=4, max_size=4).map(lambda e: RatMat([e[:2], e[2:]]))
eccentricities = st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)])


def test_curvature_examples():
    assert curvature(Connection(RatMat.zeros(2))).is_zero()
    A = RatMat([[1 / t, 0], [0, 0]])
    assert curvature(Connection(A, Fraction(1, 2))) == RatMat([[-2 / t**2, 0], [0, 0]])
    with pytest.raises(ZeroEccentricity):
        curvature(Connection(A, 0))


@given(nonconstant)
def test_curvature_of_log_derivative_is_schwarzian(f):
    # A = f''/f' at e = 1 has curvature S(f)
    a = f.derivative().derivative() / f.derivative()
    assert curvature(Connection(a, 1))[0, 0] == scalar_schwarzian(f)


@settings(max_examples=25)
@given(mats2, eccentricities)
def test_curvature_against_sympy(A, e):
    F = curvature(Connection(A, e))
    S = to_sympy(A)
    import sympy as sp

    ref = S.diff(sp.Symbol("t")) - S * S / (2 * sp.Rational(e.numerator, e.denominator))
    assert same(F, ref)


@given(mats2, eccentricities, nonconstant)
def test_anomaly_law(A, e, lam):
    assert curvature_anomaly_check(Connection(A, e), CoordMap(lam))


def test_anomaly_special_cases():
    lam = CoordMap(t**3 + 2 * t)
    for e in (Fraction(1, 2), 1, 2):
        C = coord_change_connection(Connection(RatMat.zeros(2), e), lam)
        assert curvature(C) == RatMat.identity(2) * (lam.schwarzian * Fraction(e))
    A = RatMat([[t, 1], [t**2, 0]])
    assert curvature_anomaly_check(Connection(A), CoordMap(t**2))
    mob = CoordMap.mobius(2, 1, 1, 3)
    C = coord_change_connection(Connection(A), mob)
    assert curvature(C) == mob.pullback(curvature(Connection(A))) * mob.d1**2


def test_covariant_derivative():
    psi = RatMat([[t**2, 1], [0, t]])
    assert covariant_derivative(Connection(RatMat.zeros(2)), psi, 3) == psi.derivative()
    A = RatMat([[t, 0], [0, 1]])
    assert covariant_derivative(Connection(A, Fraction(1, 2)), psi, 0) == psi.derivative()
    got = covariant_derivative(Connection(A, 1), psi, 4)
    assert got == psi.derivative() - A * psi * 4


def test_gauge_action_examples():
    A = RatMat([[t, 1], [2, 1 / t]])
    assert gauge_act_connection(RatMat.identity(2), Connection(A)).A == A
    g = RatMat.diag([t, 1])
    assert gauge_act_connection(g, Connection(RatMat.zeros(2))).A == RatMat.diag([1 / t, 0])
    with pytest.raises(SingularGauge):
        gauge_act_connection(RatMat([[t, t], [1, 1]]), Connection(A))


@given(mats2, mats2, mats2)
def test_gauge_left_action(g, h, A):
    if g.det().is_zero() or h.det().is_zero():
        return
    C = Connection(A)
    assert gauge_act_connection(g * h, C) == gauge_act_connection(g, gauge_act_connection(h, C))


def test_non_covariance_witness():
    defect = curvature_covariance_defect(RatMat.diag([t, 1]), Connection(RatMat([[0, 1], [0, 0]])))
    assert defect == RatMat([[-2 / t**2, 0], [0, 0]])


def test_maurer_cartan():
    assert maurer_cartan(RatMat.identity(2), 1).A.is_zero()
    f = t**3 + t
    C = maurer_cartan(f.derivative(), 1)
    assert C.e == 1 and C.A[0, 0] == f.derivative().derivative() / f.derivative()
    assert maurer_cartan(RatMat.diag([t, t**2]), 1).A == RatMat.diag([1 / t, 2 / t])
    with pytest.raises(ZeroWeight):
        maurer_cartan(RatMat.identity(2), 0)
    with pytest.raises(SingularInput):
        maurer_cartan(RatMat([[1, t], [1, t]]), 1)
