"""
Scalar and matrix Schwarzians over Q(t)
=======================================

Everything below is exact: rational functions are reduced fractions of
polynomials with rational coefficients, so identities hold with equality,
not up to a tolerance.
"""

from fractions import Fraction

from qschwarz import RatMat, t
from qschwarz.core import (
    Connection,
    CoordMap,
    Pair,
    conjugation_law_check,
    curvature,
    curvature_covariance_defect,
    gauge_transform_pair,
    matrix_schwarzian,
    scalar_schwarzian,
    star_act,
)

# the Schwarzian of a power map, and of the same map after a Mobius change
f = t**3
print("S(t^3)            =", scalar_schwarzian(f))
m = CoordMap.mobius(2, 1, 1, 1).lam
print("S((2f+1)/(f+1))   =", scalar_schwarzian(m.compose(f)))

# curvature of a 2x2 connection with eccentricity 1/2
A = RatMat([[t, 1], [0, -t]])
C = Connection(A, Fraction(1, 2))
print("F_A =", curvature(C))

# curvature alone is not gauge covariant ...
g = RatMat.diag([t, 1])
print("F_{g.A} - g F_A g^-1 =", curvature_covariance_defect(g, Connection(RatMat([[0, 1], [0, 0]]), Fraction(1, 2))))

# ... but F_A - q is, once q transforms along with A
P = Pair(A, RatMat([[1, t], [t**2, 0]]))
g = RatMat([[1, t], [0, 1 + t]])
print("conjugation law holds:", conjugation_law_check(g, P))
print("matrix Schwarzian after gauge:", matrix_schwarzian(gauge_transform_pair(g, P)))

# the star action shifts A and q but leaves the matrix Schwarzian alone
u = RatMat([[t, 0], [1, 2]])
print("star invariance:", matrix_schwarzian(star_act(u, P)) == matrix_schwarzian(P))
