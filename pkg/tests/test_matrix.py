from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from qschwarz import RatMat, t
from qschwarz.algebra import mat_arith, mat_charpoly, mat_derivative, mat_inverse, mat_trace
from qschwarz.errors import SingularMatrix

from oracles import ratfuncs, same, to_sympy

mats2 = st.lists(ratfuncs, min_size=4, max_size=4).map(lambda e: RatMat([e[:2], e[2:]]))
mats3 = st.lists(ratfuncs, min_size=9, max_size=9).map(lambda e: RatMat([e[:3], e[3:6], e[6:]]))


def test_inverse_examples():
    assert mat_inverse(RatMat.identity(2)) == RatMat.identity(2)
    assert mat_inverse(RatMat([[t, 0], [0, 1]])) == RatMat([[1 / t, 0], [0, 1]])


def test_singular():
    with pytest.raises(SingularMatrix):
        RatMat([[t, 1], [t**2, t]]).inverse()
    with pytest.raises(SingularMatrix):
        RatMat([[1, 2, 3], [2, 4, 6], [t, 1, 0]]).inverse()


def test_companion_charpoly():
    p, q = t**2 + 1, 3 / t
    assert mat_charpoly(RatMat([[0, 1], [-q, -p]])) == [q, p, 1]


def test_trace_derivative_arith():
    X = RatMat([[t, 1], [0, t**2]])
    assert mat_trace(X) == t + t**2
    assert mat_derivative(X) == RatMat([[1, 0], [0, 2 * t]])
    assert mat_arith("add", X, X) == X * 2
    assert mat_arith("mul", X, RatMat.identity(2)) == X


@given(mats2)
def test_inverse_2x2(X):
    if X.det().is_zero():
        return
    assert X.inverse() * X == RatMat.identity(2)


def _sample_points(X, k=3):
    """Rational points where every entry of ``X`` is defined."""
    pts, x = [], Fraction(1, 7)
    while len(pts) < k:
        if all(e.den(x) != 0 for e in X.entries()):
            pts.append(x)
        x += Fraction(5, 3)
    return pts


def _at(X, x):
    return sp.Matrix([[sp.Rational(*(lambda f: (f.numerator, f.denominator))(e(x))) for e in row] for row in X.rows])


@settings(max_examples=25)
@given(mats3)
def test_inverse_and_det_3x3(X):
    d = X.det()
    for x in _sample_points(X):
        ref = _at(X, x).det()
        if d.den(x) != 0:
            assert d(x) == Fraction(int(sp.numer(ref)), int(sp.denom(ref)))
    if not d.is_zero():
        assert X * X.inverse() == RatMat.identity(3)


@settings(max_examples=25)
@given(mats3)
def test_charpoly_against_sympy(X):
    lam = sp.Symbol("lam")
    got = X.charpoly()
    assert len(got) == 4 and got[3] == 1
    for x in _sample_points(X):
        ref = sp.Poly(_at(X, x).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
        for g, r in zip(got, ref):
            if g.den(x) != 0:
                assert g(x) == Fraction(int(sp.numer(r)), int(sp.denom(r)))


@given(mats2, mats2)
def test_product_rule(X, Y):
    assert (X * Y).derivative() == X.derivative() * Y + X * Y.derivative()


def test_evaluate_and_str():
    X = RatMat([[t, 1 / t], [0, 2]])
    assert X.evaluate(2.0).tolist() == [[2.0, 0.5], [0.0, 2.0]]
    assert str(RatMat.identity(2)) == "[[1, 0]; [0, 1]]"
