"""Seeded random instances for the property suites.

Entries are ratios of integer polynomials with coefficients in ``[-5, 5]`` and
degree at most 2.  Everything is driven by an explicit ``random.Random`` so a
seed reproduces a run exactly.
"""

from __future__ import annotations

import random

from .algebra import Poly, RatFunc, RatMat
from .core import CoordMap

COEFF_RANGE = 5
MAX_DEGREE = 2


def random_poly(rng: random.Random, max_degree: int = MAX_DEGREE, nonzero: bool = False) -> Poly:
    while True:
        p = Poly([rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(max_degree + 1)])
        if not nonzero or not p.is_zero():
            return p


def random_ratfunc(rng: random.Random, max_degree: int = MAX_DEGREE) -> RatFunc:
    return RatFunc(random_poly(rng, max_degree), random_poly(rng, max_degree, nonzero=True))


def random_nonconstant(rng: random.Random, max_degree: int = MAX_DEGREE) -> RatFunc:
    while True:
        f = random_ratfunc(rng, max_degree)
        if not f.is_constant():
            return f


def random_ratmat(rng: random.Random, n: int = 2, max_degree: int = MAX_DEGREE) -> RatMat:
    return RatMat([[random_ratfunc(rng, max_degree) for _ in range(n)] for _ in range(n)])


def random_gauge(rng: random.Random, n: int = 2, max_degree: int = MAX_DEGREE) -> RatMat:
    """Random matrix with ``det`` not identically zero (rejection sampling)."""
    while True:
        g = random_ratmat(rng, n, max_degree)
        if not g.det().is_zero():
            return g


def random_mobius(rng: random.Random) -> CoordMap:
    while True:
        a, b, c, d = (rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(4))
        if a * d - b * c != 0:
            return CoordMap.mobius(a, b, c, d)


def random_coord_map(rng: random.Random, max_degree: int = MAX_DEGREE) -> CoordMap:
    return CoordMap(random_nonconstant(rng, max_degree))
