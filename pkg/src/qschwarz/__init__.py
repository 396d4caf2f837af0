"""Exact non-abelian Schwarzian calculus over Q(t) and q-series."""

from .algebra import Poly, QSeries, RatFunc, RatMat, rf, t

__version__ = "0.1.0"

__all__ = ["Poly", "QSeries", "RatFunc", "RatMat", "rf", "t", "__version__"]
