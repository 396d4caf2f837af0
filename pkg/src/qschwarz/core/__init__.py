"""Schwarzians, curvature, gauge and star actions over Q(t)."""

from .connection import (
    Connection,
    coord_change_connection,
    covariant_derivative,
    curvature,
    curvature_anomaly_check,
    curvature_covariance_defect,
    gauge_act_connection,
    maurer_cartan,
)
from .pair import (
    Pair,
    characteristic_invariants,
    conjugation_law_check,
    coord_change_pair,
    gauge_star_compat_check,
    gauge_transform_pair,
    solution_gauge_curvature_check,
    matrix_schwarzian,
    pair_anomaly_check,
    solution_potential,
    star_act,
)
from .scalar import (
    CoordMap,
    ScalarODE,
    coord_change_scalar_ode,
    eliminate_to_scalar,
    scalar_schwarzian,
    schwarzian_chain_rule_check,
    wronskian,
    wronskian_weight_check,
)

__all__ = [
    "Connection",
    "CoordMap",
    "Pair",
    "ScalarODE",
    "characteristic_invariants",
    "conjugation_law_check",
    "coord_change_connection",
    "coord_change_pair",
    "coord_change_scalar_ode",
    "covariant_derivative",
    "curvature",
    "curvature_anomaly_check",
    "curvature_covariance_defect",
    "eliminate_to_scalar",
    "gauge_act_connection",
    "gauge_star_compat_check",
    "gauge_transform_pair",
    "solution_gauge_curvature_check",
    "maurer_cartan",
    "matrix_schwarzian",
    "pair_anomaly_check",
    "scalar_schwarzian",
    "schwarzian_chain_rule_check",
    "solution_potential",
    "star_act",
    "wronskian",
    "wronskian_weight_check",
]
