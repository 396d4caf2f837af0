"""
Mass-spring systems under a change of clock
===========================================

psi'' = p psi' + q psi is rewritten in a new time tau with t = lam(tau).
The traceless projective curvature transforms as a tensor, and numerically
the two clocks trace out the same motion.
"""

import io
import math

import numpy as np

from qschwarz import RatMat, t
from qschwarz.core import CoordMap
from qschwarz.springs import (
    SpringSystem,
    clock_invariance_check,
    harmonic_quantum_check,
    integrate_system,
    projective_curvature,
    reparametrize_system,
    tensor_law_check,
    two_mass_stiffness,
)

# two unit masses on a chain of unit springs
S = SpringSystem.undamped(two_mass_stiffness(1, 1))
lam = CoordMap(t + t**2 / 4)
St = reparametrize_system(S, lam)
print("damping in the new clock:", St.p)
print("projective curvature:", projective_curvature(St))
print("tensor law:", tensor_law_check(S, lam))

# same motion in both clocks, compared along the whole window
dev = clock_invariance_check(S, lam, (0.0, 1.0), 1e-3, [1.0, 0.0], [0.0, 0.5])
print(f"max deviation between clocks: {dev:.3e}")

# halving the step should shrink the deviation by about 2^4
coarse = clock_invariance_check(S, lam, (0.0, 1.0), 0.1, [1.0, 0.0], [0.0, 0.5])
fine = clock_invariance_check(S, lam, (0.0, 1.0), 0.05, [1.0, 0.0], [0.0, 0.5])
print(f"error ratio under step halving: {coarse / fine:.2f}")

# a trajectory as CSV
traj = integrate_system(S, [1.0, 0.0], [0.0, 0.5], 0.0, 0.5, 0.1)
buf = io.StringIO()
traj.to_csv(buf)
print(buf.getvalue())

# a single unit spring returns to -1 after half a period
one = integrate_system(SpringSystem.undamped(RatMat([[-1]])), [1.0], [0.0], 0.0, math.pi, 1e-3)
print("psi(pi) + 1 =", float(one.psi[-1, 0] + 1))
print("max |psi - cos| =", float(np.max(np.abs(one.psi[:, 0] - np.cos(one.times)))))

# exponential solutions of the harmonic equation, as exact series in t
for r in harmonic_quantum_check(2, [0, 1, 1], 32):
    print(r.status.upper(), r.check)
