import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from qschwarz import RatFunc, RatMat, t
from qschwarz.core import (
    CoordMap,
    ScalarODE,
    coord_change_scalar_ode,
    eliminate_to_scalar,
    scalar_schwarzian,
    schwarzian_chain_rule_check,
    wronskian,
    wronskian_weight_check,
)
from qschwarz.errors import ConstantInput, DegenerateCoupling
from qschwarz.sampling import random_ratfunc

from oracles import T, nonconstant, ratfuncs, same, sympy_schwarzian, to_sympy

mobius_coeffs = st.tuples(*[st.integers(-5, 5)] * 4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


def test_schwarzian_examples():
    assert scalar_schwarzian((2 * t + 1) / (3 * t - 4)) == 0
    assert scalar_schwarzian(t**2) == Fraction(-3, 2) / t**2
    # S(t^n) = (1 - n^2) / (2 t^2); for n = 3 this is -4/t^2
    assert scalar_schwarzian(t**3) == -4 / t**2
    with pytest.raises(ConstantInput):
        scalar_schwarzian(RatFunc(7))


@pytest.mark.parametrize("n", [2, 3, 4, 5, -1, -2])
def test_schwarzian_of_powers(n):
    assert scalar_schwarzian(t**n) == Fraction(1 - n * n, 2) / t**2


@settings(max_examples=25)
@given(nonconstant)
def test_schwarzian_against_sympy(f):
    assert same(scalar_schwarzian(f), sympy_schwarzian(to_sympy(f)))


@given(nonconstant, mobius_coeffs)
def test_mobius_invariance(f, m):
    a, b, c, d = m
    assert scalar_schwarzian((a * f + b) / (c * f + d)) == scalar_schwarzian(f)


@given(nonconstant, nonconstant)
def test_chain_rule(f, lam):
    assert schwarzian_chain_rule_check(f, CoordMap(lam))


def test_chain_rule_examples():
    assert schwarzian_chain_rule_check(t**2, CoordMap.mobius(1, 2, 3, 4))
    assert schwarzian_chain_rule_check(t**3, CoordMap(t**2))
    assert schwarzian_chain_rule_check((t + 1) / (t - 1), CoordMap(t**3 + t))


def test_coord_map():
    lam = CoordMap(t**2)
    assert lam.d1 == 2 * t and lam.log_d1 == 1 / t
    assert lam.schwarzian == Fraction(-3, 2) / t**2
    assert CoordMap.identity().schwarzian == 0
    assert lam(Fraction(3)) == 9
    with pytest.raises(ConstantInput):
        CoordMap(RatFunc(2))
    with pytest.raises(ConstantInput):
        CoordMap.mobius(1, 2, 2, 4)


def test_scalar_ode_coordinate_change():
    ode = coord_change_scalar_ode(ScalarODE(0, 0), CoordMap(t**2))
    assert ode.p == 1 / (2 * t) and ode.q == 0


@given(ratfuncs, ratfuncs, nonconstant)
def test_projective_curvature_transformation(p, q, lam):
    lam = CoordMap(lam)
    new = coord_change_scalar_ode(ScalarODE(p, q), lam)
    expected = lam.pullback(ScalarODE(p, q).projective_curvature()) * lam.d1**2 + lam.schwarzian
    assert new.projective_curvature() == expected


def test_standard_form_round_trip():
    ode = ScalarODE.from_standard_form(1 / t, t)
    assert ode.p == -1 / (2 * t) and ode.q == -t
    assert ode.standard_form() == (1 / t, t)


def test_elimination_companion():
    q0 = Fraction(5, 2)
    ode = eliminate_to_scalar(RatMat([[0, 1], [q0, 0]]))
    assert ode.p == 0 and ode.q == q0
    with pytest.raises(DegenerateCoupling):
        eliminate_to_scalar(RatMat([[t, 0], [1, t]]))


def _rk4_system(M, y0, x0, x1, steps=2000):
    f = lambda x, y: M.evaluate(x) @ y
    h = (x1 - x0) / steps
    y, x = np.array(y0, float), x0
    for _ in range(steps):
        k1 = f(x, y)
        k2 = f(x + h / 2, y + h / 2 * k1)
        k3 = f(x + h / 2, y + h / 2 * k2)
        k4 = f(x + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        x += h
    return y


def test_elimination_numeric_oracle():
    # integrate the first-order system, then test the scalar equation on its first component
    rng = random.Random(3)
    done = 0
    while done < 5:
        a, b, c, d = (random_ratfunc(rng) for _ in range(4))
        M = RatMat([[a, b], [c, d]])
        if b.is_zero():
            continue
        x0, x1 = 0.3, 0.6
        grid = [Fraction(k, 100) for k in range(30, 61)]
        if any(e.den(x) == 0 for e in M.entries() for x in grid) or any(b(x) == 0 for x in grid):
            continue
        if any(abs(float(e.den(x))) < 0.2 for e in M.entries() for x in grid):
            continue
        ode = eliminate_to_scalar(M)
        y, z = _rk4_system(M, [1.0, 0.5], x0, x1)
        x = x1
        fa, fb, fc, fd = (float(e(x)) for e in (a, b, c, d))
        da, db = float(a.derivative()(x)), float(b.derivative()(x))
        y1 = fa * y + fb * z
        z1 = fc * y + fd * z
        y2 = da * y + fa * y1 + db * z + fb * z1
        res = y2 - 2 * float(ode.p(x)) * y1 - float(ode.q(x)) * y
        assert abs(res) < 1e-8 * max(1.0, abs(y2))
        done += 1


def test_wronskian_examples():
    assert wronskian([1, t]) == 1
    assert wronskian([1, t, t**2]) == 2
    assert same(wronskian([t, t**3, 1 / t]), sp.wronskian([T, T**3, 1 / T], T))


@given(st.lists(ratfuncs, min_size=2, max_size=3), mobius_coeffs)
def test_wronskian_weight_mobius(fs, m):
    assert wronskian_weight_check(fs, CoordMap.mobius(*m))


@given(st.lists(ratfuncs, min_size=2, max_size=3), nonconstant)
def test_wronskian_weight_any_map(fs, lam):
    # the law holds for every coordinate change, not only Mobius maps
    assert wronskian_weight_check(fs, CoordMap(lam))
