"""
Eisenstein series and the Chazy equation
========================================

q-expansions are truncated power series with exact rational coefficients.
D = q d/dq, and the Serre derivative is the covariant derivative for the
connection A = E2/6.
"""

from qschwarz.modular import chazy_check, delta, eisenstein, ramanujan_check, serre_derivative

N = 12


def coeffs(f):
    return ", ".join(str(c) for c in f.series.to_list())


E2, E4, E6 = (eisenstein(k, N) for k in (2, 4, 6))
for f in (E2, E4, E6):
    print(f"{f.label}:", coeffs(f))

# the discriminant two ways
print("Delta (product)   :", coeffs(delta(N, "product")))
print("Delta (E4^3-E6^2) :", coeffs(delta(N, "eisenstein")))

# Serre derivative of E4 is -E6/3; of Delta it vanishes
print("serre(E4)    :", coeffs(serre_derivative(E4)))
print("serre(Delta) :", coeffs(serre_derivative(delta(N))))

# Ramanujan's system and Chazy's equation, checked at order 64
for r in ramanujan_check(64) + chazy_check(64):
    print(r.status.upper(), r.check)
