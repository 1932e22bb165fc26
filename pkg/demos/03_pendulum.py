"""Series solution of u'' + b sin u = 0, u(0) = a, u'(0) = 0.

Run:  python demos/03_pendulum.py
Writes pendulum.dat (t, series, RK4) to the current directory.
"""
import math

import numpy as np

from adomianpoly.adm_series import (
    PendulumProblem,
    evaluate_series,
    pendulum_deviation,
    pendulum_solve,
    reference_trajectory,
)

# At a = pi/2 every sin^(k)(a) is 0 or +-1, so the coefficients are exact rationals.
dev = pendulum_deviation(PendulumProblem(math.pi / 2, 1.0, 10, 20), exact=True)
print("u(t) - pi/2 =", " + ".join(f"({c})*t^{n}" for n, c in enumerate(dev) if c))

# General angle: float coefficients, compared with a Runge-Kutta solution.
problem = PendulumProblem(a=1.0, b=1.0, components=10)
series = pendulum_solve(problem)
t, u_ref, _ = reference_trajectory(problem, 1.0, 1000)
u_series = evaluate_series(series, t)
for ti in (0.25, 0.5, 0.75, 1.0):
    i = int(round(ti * 1000))
    print(f"t={ti:4.2f}  series {u_series[i]:.12f}  RK4 {u_ref[i]:.12f}  diff {abs(u_series[i] - u_ref[i]):.1e}")

np.savetxt("pendulum.dat", np.column_stack([t, u_series, u_ref])[::50], header="t series rk4")

# Small amplitude: the solution approaches a cos(sqrt(b) t).
a = 1e-3
small = pendulum_solve(PendulumProblem(a, 1.0))
print("small angle, u(1)/a =", evaluate_series(small, 1.0) / a, " cos(1) =", math.cos(1.0))
