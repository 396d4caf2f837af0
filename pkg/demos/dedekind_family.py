"""
Periods of the Dedekind elliptic family
=======================================

A 2x2 Gauss-Manin system in the parameter g is reduced to one second-order
equation, moved to the j-line by g = 27j/(j-1), and its projective curvature
is compared with the known three-term form.
"""

from qschwarz.core import CoordMap, Pair, eliminate_to_scalar, matrix_schwarzian
from qschwarz.core.scalar import coord_change_scalar_ode
from qschwarz.periods import dedekind_dataset, dedekind_gm_matrix, dedekind_pipeline

M = dedekind_gm_matrix()
print("Gauss-Manin matrix:", M.to_str("g"))

# eliminate the second component: y'' + b1 y' + b0 y = 0
ode_g = eliminate_to_scalar(M)
b1, b0 = ode_g.standard_form()
print("b1(g) =", b1.to_str("g"))
print("b0(g) =", b0.to_str("g"))

# pull back to the j-line
ds = dedekind_dataset()
ode_j = coord_change_scalar_ode(ode_g, CoordMap(ds.expected["pullback_map"]))
b1, b0 = ode_j.standard_form()
print("b1(j) =", b1.to_str("j"))
print("b0(j) =", b0.to_str("j"))

# projective curvature 2(F_A - q) of the j-equation
S = matrix_schwarzian(Pair(ode_j.p, ode_j.q))[0, 0]
print("2(F_A - q) =", S.to_str("j"))
print("equals the three-term form:", S == ds.expected["schwarzian"])

# the same steps as check records
for r in dedekind_pipeline():
    print(r.status.upper(), r.check)
