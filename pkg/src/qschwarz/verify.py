"""Verification suites, run in a fixed order and reported as :class:`CheckReport` records.

Randomized suites draw from ``random.Random(f"{seed}:{suite}")`` so a suite gives
the same instances whether it runs alone or as part of ``all``; the seed is
written into every randomized record.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import modular, periods, springs
from .algebra import QSeries, RatFunc, RatMat, t
from .core import (
    Connection,
    CoordMap,
    Pair,
    characteristic_invariants,
    conjugation_law_check,
    curvature_anomaly_check,
    curvature_covariance_defect,
    gauge_act_connection,
    gauge_star_compat_check,
    gauge_transform_pair,
    solution_gauge_curvature_check,
    matrix_schwarzian,
    pair_anomaly_check,
    scalar_schwarzian,
    schwarzian_chain_rule_check,
    star_act,
    wronskian_weight_check,
)
from .report import FAIL, PASS, CheckReport
from .sampling import (
    random_coord_map,
    random_gauge,
    random_mobius,
    random_nonconstant,
    random_ratfunc,
    random_ratmat,
)

__all__ = ["SUITES", "VerifyOptions", "run_suite", "run_suites"]


@dataclass(frozen=True)
class VerifyOptions:
    order: int = 64
    trials: int = 200
    seed: int = 1729
    step: float = 1e-3


def _rng(opts: VerifyOptions, suite: str) -> random.Random:
    return random.Random(f"{opts.seed}:{suite}")


def _trials(suite: str, check: str, opts: VerifyOptions, anchor: str, n: int, instance: Callable[[], bool]):
    """Run ``instance`` ``n`` times; report the first failing trial index."""
    for k in range(n):
        if not instance():
            return CheckReport(
                suite, check, FAIL, f"identity holds on all {n} instances",
                f"fails at trial {k} (seed {opts.seed})", anchor,
            )
    return CheckReport(suite, check, PASS, f"identity holds on all {n} instances", f"{n}/{n} exact (seed {opts.seed})", anchor)


def _bool_report(suite: str, check: str, ok: bool, expected: str, actual: str, anchor: str) -> CheckReport:
    return CheckReport(suite, check, PASS if ok else FAIL, expected, actual, anchor)


# suites ---------------------------------------------------------------------


def suite_core(opts: VerifyOptions) -> list[CheckReport]:
    rng = _rng(opts, "core")
    out = []

    def mobius_invariance():
        f = random_nonconstant(rng)
        m = random_mobius(rng).lam
        return scalar_schwarzian(m.compose(f)) == scalar_schwarzian(f)

    out.append(_trials("core", "schwarzian mobius invariance", opts, "Mobius invariance of S", opts.trials, mobius_invariance))
    out.append(
        _trials(
            "core", "schwarzian chain rule", opts, "Schwarzian cocycle", opts.trials,
            lambda: schwarzian_chain_rule_check(random_nonconstant(rng), random_coord_map(rng)),
        )
    )
    for e in (Fraction(1, 2), Fraction(1), Fraction(2)):
        out.append(
            _trials(
                "core", f"curvature anomaly e={e}", opts, "curvature coordinate change", opts.trials,
                lambda e=e: curvature_anomaly_check(Connection(random_ratmat(rng), e), random_coord_map(rng)),
            )
        )

    def pair_anomaly():
        P = Pair(random_ratmat(rng), random_ratmat(rng))
        T = RatMat([[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
        if T.det().is_zero():
            T = RatMat.identity(2)
        return pair_anomaly_check(P, random_coord_map(rng), T)

    out.append(_trials("core", "matrix schwarzian anomaly", opts, "matrix Schwarzian coordinate change", opts.trials, pair_anomaly))

    # one explicit pair (A, g) for which the curvature is not gauge covariant
    A = RatMat([[0, 1], [0, 0]])
    g = RatMat.diag([t, 1])
    defect = curvature_covariance_defect(g, Connection(A, Fraction(1, 2)))
    out.append(
        _bool_report(
            "core", "curvature non-covariance witness", not defect.is_zero(), "F_{g.A} - g F_A g^-1 != 0",
            f"A=[[0,1],[0,0]], g=diag(t,1): defect {defect}", "curvature is not gauge covariant",
        )
    )
    return out


def _random_pair(rng) -> Pair:
    return Pair(random_ratmat(rng), random_ratmat(rng))


def suite_gauge(opts: VerifyOptions) -> list[CheckReport]:
    rng = _rng(opts, "gauge")
    n = opts.trials
    out = [
        _trials(
            "gauge", "conjugation law", opts, "gauge conjugation of F_A - q", n,
            lambda: conjugation_law_check(random_gauge(rng), _random_pair(rng)),
        )
    ]

    def schwarzian_covariance():
        g, P = random_gauge(rng), _random_pair(rng)
        return matrix_schwarzian(gauge_transform_pair(g, P)) == g.inverse() * matrix_schwarzian(P) * g

    out.append(_trials("gauge", "matrix schwarzian covariance", opts, "gauge conjugation of the matrix Schwarzian", n, schwarzian_covariance))

    def left_action():
        g1, g2 = random_gauge(rng), random_gauge(rng)
        C = Connection(random_ratmat(rng))
        return gauge_act_connection(g1, gauge_act_connection(g2, C)) == gauge_act_connection(g1 * g2, C)

    out.append(_trials("gauge", "left action", opts, "gauge action on connections", n, left_action))
    out.append(
        _trials(
            "gauge", "solution gauge curvature", opts, "curvature of the gauged connection", n,
            lambda: solution_gauge_curvature_check(random_gauge(rng), Connection(random_ratmat(rng))),
        )
    )

    def invariants():
        g, P = random_gauge(rng), _random_pair(rng)
        before = characteristic_invariants(matrix_schwarzian(P), 2)
        after = characteristic_invariants(matrix_schwarzian(gauge_transform_pair(g, P)), 2)
        return before == after

    out.append(_trials("gauge", "characteristic invariants", opts, "trace invariants", n, invariants))
    return out


def suite_star(opts: VerifyOptions) -> list[CheckReport]:
    rng = _rng(opts, "star")
    n = opts.trials

    def group_law():
        u1, u2, P = random_ratmat(rng), random_ratmat(rng), _random_pair(rng)
        return star_act(u1, star_act(u2, P)) == star_act(u1 + u2, P) and star_act(RatMat.zeros(2), P) == P

    def invariance():
        u, P = random_ratmat(rng), _random_pair(rng)
        return matrix_schwarzian(star_act(u, P)) == matrix_schwarzian(P)

    return [
        _trials("star", "additive group law", opts, "star action", n, group_law),
        _trials("star", "schwarzian invariance", opts, "star action preserves the matrix Schwarzian", n, invariance),
        _trials(
            "star", "gauge compatibility", opts, "gauge and star actions commute", n,
            lambda: gauge_star_compat_check(random_ratmat(rng), random_gauge(rng), _random_pair(rng)),
        ),
    ]


def suite_wronskian(opts: VerifyOptions) -> list[CheckReport]:
    rng = _rng(opts, "wronskian")
    out = []
    for size in (2, 3):
        out.append(
            _trials(
                "wronskian", f"weight law n={size} (mobius)", opts, "Wronskian weight", opts.trials,
                lambda size=size: wronskian_weight_check(
                    [random_ratfunc(rng) for _ in range(size)], random_mobius(rng)
                ),
            )
        )
    return out


def _random_series(rng, order: int) -> QSeries:
    return QSeries([rng.randint(-5, 5) for _ in range(order)], order)


def suite_modular(opts: VerifyOptions) -> list[CheckReport]:
    N = opts.order
    out = modular.ramanujan_check(N)
    anchor = "discriminant constructions"
    out.append(
        modular.series_check(
            "modular", "delta product = eisenstein", modular.delta(N, "product").series,
            modular.delta(N, "eisenstein").series, anchor,
        )
    )
    E4, E6 = modular.eisenstein(4, N), modular.eisenstein(6, N)
    serre = "Serre derivative"
    s4, s6, sd = (modular.serre_derivative(f) for f in (E4, E6, modular.delta(N)))
    out.append(modular.series_check("modular", "serre E4 = -E6/3", s4.series, E6.series * Fraction(-1, 3), serre))
    out.append(
        modular.series_check("modular", "serre E6 = -E4^2/2", s6.series, E4.series * E4.series * Fraction(-1, 2), serre)
    )
    out.append(modular.series_check("modular", "serre Delta = 0", sd.series, QSeries([], N), serre))
    weights_ok = (s4.weight, s6.weight, sd.weight) == (6, 8, 14)
    out.append(_bool_report("modular", "serre weights", weights_ok, "6, 8, 14", f"{s4.weight}, {s6.weight}, {sd.weight}", serre))

    rng = _rng(opts, "modular")
    k = max(1, opts.trials // 10)
    order = min(N, 32)

    def leibniz():
        f, g = _random_series(rng, order), _random_series(rng, order)
        return (f * g).derive() == f.derive() * g + f * g.derive()

    out.append(_trials("modular", "leibniz rule for D", opts, "normalized derivation", k, leibniz))
    out += modular.modular_curvature_checks(N)
    return out


def suite_chazy(opts: VerifyOptions) -> list[CheckReport]:
    return modular.chazy_check(opts.order)


def suite_dedekind(opts: VerifyOptions) -> list[CheckReport]:
    return periods.dedekind_pipeline()


def suite_genus2(opts: VerifyOptions) -> list[CheckReport]:
    return periods.genus2_schwarzian_check()


def suite_cubic(opts: VerifyOptions) -> list[CheckReport]:
    return periods.cubic_pipeline()


# mass-spring ----------------------------------------------------------------

CONVERGENCE_STEPS = (0.1, 0.05)


def spring_test_cases():
    """The two clock-invariance cases: undamped two-mass chain and a damped scalar spring."""
    two_mass = springs.SpringSystem.undamped(springs.two_mass_stiffness(1, 1))
    damped = springs.SpringSystem(RatMat([[Fraction(-1, 10)]]), RatMat([[-1]]))
    return [
        ("two-mass, lam = tau + tau^2/4", two_mass, CoordMap(t + t**2 / 4), [1.0, 0.0], [0.0, 0.5]),
        ("damped scalar, lam = tau/(1 - tau/4)", damped, CoordMap(t / (1 - t / 4)), [1.0], [0.3]),
    ]


def suite_mass_spring(opts: VerifyOptions) -> list[CheckReport]:
    rng = _rng(opts, "mass-spring")
    out = []

    def tensor_law():
        S = springs.SpringSystem(random_ratmat(rng), random_ratmat(rng))
        return springs.tensor_law_check(S, random_coord_map(rng))

    out.append(_trials("mass-spring", "projective curvature tensor law", opts, "projective curvature", opts.trials // 4 or 1, tensor_law))
    tol = 1e-6
    for name, S, lam, psi0, v0 in spring_test_cases():
        dev = springs.clock_invariance_check(S, lam, (0.0, 1.0), opts.step, psi0, v0)
        out.append(_bool_report("mass-spring", f"clock invariance: {name}", dev <= tol, f"<= {tol:g}", f"{dev:.3e} at h={opts.step:g}", "change of clock"))
    for name, S, lam, psi0, v0 in spring_test_cases():
        coarse, fine = (springs.clock_invariance_check(S, lam, (0.0, 1.0), h, psi0, v0) for h in CONVERGENCE_STEPS)
        ratio = coarse / fine
        out.append(
            _bool_report(
                "mass-spring", f"convergence order: {name}", ratio >= 12, ">= 12",
                f"{ratio:.2f} (h={CONVERGENCE_STEPS[0]:g} -> {CONVERGENCE_STEPS[1]:g})", "fourth-order integrator",
            )
        )

    unit = springs.SpringSystem.undamped(RatMat([[-1]]))
    tr = springs.integrate_system(unit, [1.0], [0.0], 0.0, float(np.pi), opts.step)
    err = abs(tr.psi[-1, 0] + 1.0)
    out.append(_bool_report("mass-spring", "unit spring psi(pi) = -1", err <= 1e-8, "<= 1e-08", f"{err:.3e}", "single mass on a spring"))

    K = -springs.two_mass_stiffness(1, 1).evaluate(0.0)
    S2 = springs.SpringSystem.undamped(springs.two_mass_stiffness(1, 1))
    tr = springs.integrate_system(S2, [1.0, 0.0], [0.0, 0.5], 0.0, 10.0, opts.step)
    energy = 0.5 * np.einsum("ij,ij->i", tr.dpsi, tr.dpsi) + 0.5 * np.einsum("ij,jk,ik->i", tr.psi, K, tr.psi)
    drift = float(energy.max() - energy.min())
    out.append(_bool_report("mass-spring", "two-mass energy drift", drift <= 1e-6, "<= 1e-06", f"{drift:.3e}", "undamped two-mass system"))

    out += springs.harmonic_quantum_check(2, [0, 1, 1], 32)
    return out


SUITES: dict[str, Callable[[VerifyOptions], list[CheckReport]]] = {
    "core": suite_core,
    "gauge": suite_gauge,
    "star": suite_star,
    "wronskian": suite_wronskian,
    "modular": suite_modular,
    "chazy": suite_chazy,
    "dedekind": suite_dedekind,
    "genus2": suite_genus2,
    "cubic3fold": suite_cubic,
    "mass-spring": suite_mass_spring,
}


def run_suite(name: str, opts: VerifyOptions | None = None) -> list[CheckReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](opts or VerifyOptions())


def run_suites(names, opts: VerifyOptions | None = None) -> list[CheckReport]:
    """Run suites one after another, in the order given."""
    opts = opts or VerifyOptions()
    reports = []
    for name in names:
        reports += run_suite(name, opts)
    return reports
