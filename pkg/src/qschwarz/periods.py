"""Built-in period families and the pipelines that check them.

Three families ship with the package: the Dedekind family of elliptic curves
(parameter ``g``, then ``j`` after pullback), a genus-2 hyperelliptic family
and a cubic threefold deformation (both in ``t``).  Each pipeline takes an
optional :class:`FamilyDataset` so that a modified copy can be checked; the
stored targets are never adjusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any

from .algebra import RatFunc, RatMat
from .core import CoordMap, Pair, ScalarODE, characteristic_invariants, eliminate_to_scalar, matrix_schwarzian
from .core.scalar import coord_change_scalar_ode
from .report import FAIL, PASS, SKIP, CheckReport, equality_check

__all__ = [
    "FamilyDataset",
    "cubic_dataset",
    "cubic_pipeline",
    "dedekind_dataset",
    "dedekind_gm_matrix",
    "dedekind_pipeline",
    "genus2_dataset",
    "genus2_denominator",
    "genus2_pair",
    "genus2_schwarzian_check",
]

x = RatFunc.variable()


@dataclass(frozen=True)
class FamilyDataset:
    """Input data for a family plus the closed-form targets it must reproduce."""

    name: str
    variable: str
    data: Any
    expected: dict = field(default_factory=dict)

    def with_expected(self, **changes) -> "FamilyDataset":
        return replace(self, expected={**self.expected, **changes})


def _ode_str(ode: ScalarODE, var: str) -> str:
    b1, b0 = ode.standard_form()
    return f"y'' + ({b1.to_str(var)}) y' + ({b0.to_str(var)}) y = 0"


# Dedekind family ------------------------------------------------------------


def dedekind_gm_matrix() -> RatMat:
    """Gauss-Manin matrix ``[[a, b], [c, -a]]`` of the Dedekind family in ``g``."""
    g = x
    a = (18 - g) / (4 * g * (g - 27))
    b = Fraction(-3, 2) / (g * (g - 27))
    c = 1 / (8 * (g - 27))
    return RatMat([[a, b], [c, -a]])


def dedekind_dataset() -> FamilyDataset:
    g = j = x
    eliminated = ScalarODE.from_standard_form(
        (2 * g - 27) / (g * (g - 27)), 3 * (g + 4) / (16 * g**2 * (g - 27))
    )
    pulled = ScalarODE.from_standard_form(1 / j, (31 * j - 4) / (144 * j**2 * (1 - j) ** 2))
    three_term = Fraction(3, 8) / (1 - j) ** 2 + Fraction(4, 9) / j**2 + Fraction(23, 72) / (j * (1 - j))
    return FamilyDataset(
        "dedekind",
        "g",
        dedekind_gm_matrix(),
        {
            "eliminated": eliminated,
            "pullback_map": 27 * j / (j - 1),
            "pulled_back": pulled,
            "schwarzian": three_term,
            "schwarzian_single": (36 * j**2 - 41 * j + 32) / (72 * j**2 * (1 - j) ** 2),
        },
    )


def dedekind_pipeline(dataset: FamilyDataset | None = None) -> list[CheckReport]:
    """Elimination to a scalar equation, pullback to ``j``, projective curvature."""
    ds = dataset or dedekind_dataset()
    exp = ds.expected
    ode_g = eliminate_to_scalar(ds.data)
    ode_j = coord_change_scalar_ode(ode_g, CoordMap(exp["pullback_map"]))
    S = matrix_schwarzian(Pair(ode_j.p, ode_j.q))[0, 0]
    return [
        equality_check(
            "dedekind", "elimination", exp["eliminated"], ode_g, "Picard-Fuchs equation in g",
            render=lambda o: _ode_str(o, "g"),
        ),
        equality_check(
            "dedekind", "pullback", exp["pulled_back"], ode_j, "Picard-Fuchs equation in j",
            render=lambda o: _ode_str(o, "j"),
        ),
        equality_check(
            "dedekind", "schwarzian", exp["schwarzian"], S, "projective curvature of the j-equation",
            render=lambda f: f.to_str("j"),
        ),
    ]


# genus-2 family -------------------------------------------------------------


def genus2_denominator() -> RatFunc:
    return 108 * x**5 + 3125


def genus2_pair() -> Pair:
    t = x
    D = genus2_denominator()
    A = RatMat([[-108 * t**4, -675 * t**2], [750 * t, -162 * t**4]]) * (1 / D)
    q = RatMat([[-27 * t**3, Fraction(-275, 2) * t], [Fraction(375, 2) + 0 * t, -33 * t**3]]) * (1 / D)
    return Pair(A, q)


def genus2_dataset() -> FamilyDataset:
    t = x
    D2 = genus2_denominator() ** 2
    S = RatMat(
        [
            [t**3 * (5832 * t**5 - 1518750), 25 * t * (4104 * t**5 - 303125)],
            [1125 * (3125 - 252 * t**5), t**3 * (-10368 * t**5 - 2831250)],
        ]
    ) * (1 / D2)
    return FamilyDataset("genus2", "t", genus2_pair(), {"schwarzian": S})


def genus2_schwarzian_check(dataset: FamilyDataset | None = None) -> list[CheckReport]:
    """Matrix Schwarzian of the genus-2 pair against the stored closed form.

    The traces of the first two powers are recorded without a target, and the
    genericity of the family is recorded as an assumption rather than checked.
    """
    ds = dataset or genus2_dataset()
    S = matrix_schwarzian(ds.data)
    expected = ds.expected["schwarzian"]
    bad = [(i, k) for i in range(S.n) for k in range(S.n) if S[i, k] != expected[i, k]]
    anchor = "matrix Schwarzian of the genus-2 family"
    if bad:
        where = ", ".join(f"({i + 1},{k + 1})" for i, k in bad)
        main = CheckReport(
            "genus2", "matrix schwarzian", FAIL, expected.to_str(),
            f"{S.to_str()}; entries differ at {where}", anchor,
        )
    else:
        main = CheckReport("genus2", "matrix schwarzian", PASS, expected.to_str(), S.to_str(), anchor)
    tr1, tr2 = characteristic_invariants(S, 2)
    note = "no closed-form target; value recorded"
    return [
        main,
        CheckReport("genus2", "tr S", SKIP, note, tr1.to_str(), "characteristic invariants"),
        CheckReport("genus2", "tr S^2", SKIP, note, tr2.to_str(), "characteristic invariants"),
        CheckReport(
            "genus2", "genericity", SKIP, "family is generic",
            "assumed, not re-derived", "generic family",
        ),
    ]


# cubic threefold ------------------------------------------------------------


def cubic_dataset() -> FamilyDataset:
    t = x
    a = 3 * t**2 / (2 * (1 - t**3))
    b = t / (1 - t**3)
    s = t * (t**3 + 8) / (2 * (1 - t**3) ** 2)
    # (a, b, number of zero diagonal slots, number of copies of (a, b))
    return FamilyDataset("cubic3fold", "t", (a, b, 3, 2), {"s": s})


def cubic_pipeline(dataset: FamilyDataset | None = None, rmax: int = 5) -> list[CheckReport]:
    ds = dataset or cubic_dataset()
    a, b, zeros, copies = ds.data
    s_expected = ds.expected["s"]
    anchor = "cubic threefold matrix Schwarzian"
    s = 2 * (a.derivative() - a * a - b)
    P = Pair(RatMat.diag([0] * zeros + [a] * copies), RatMat.diag([0] * zeros + [b] * copies))
    S = matrix_schwarzian(P)
    reports = [
        equality_check("cubic3fold", "scalar schwarzian", s_expected, s, anchor, render=RatFunc.to_str),
        equality_check(
            "cubic3fold", "diagonal schwarzian", RatMat.diag([0] * zeros + [s_expected] * copies), S,
            anchor, render=RatMat.to_str,
        ),
    ]
    for r, tr in enumerate(characteristic_invariants(S, rmax), start=1):
        reports.append(
            equality_check(
                "cubic3fold", f"tr S^{r}", copies * s_expected**r, tr, "trace powers", render=RatFunc.to_str
            )
        )
    return reports
