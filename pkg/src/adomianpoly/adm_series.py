"""Decomposition-series solution of the pendulum ``u'' + b sin(u) = 0``.

With ``u(0) = a`` and ``u'(0) = 0`` the components are

    u_0 = a,    u_{m+1} = -L^{-1}[b A_m],

where L^{-1} integrates twice from 0 and A_m is evaluated with the
components u_1..u_m as truncated series in t and the scalars
F^(k)(a) = sin^(k)(a).  Only a constant u_0 is supported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .adomian import DerivativeOracle, EvaluationContext, adomian, evaluate
from .series import TruncatedSeries

__all__ = [
    "PendulumProblem",
    "sin_derivative",
    "exact_sin_derivative",
    "integrate_twice",
    "pendulum_components",
    "pendulum_deviation",
    "pendulum_solve",
    "evaluate_series",
    "reference_trajectory",
    "reference_integrate",
]


@dataclass(frozen=True)
class PendulumProblem:
    a: float
    b: float = 1.0
    components: int = 10
    order: int | None = None

    def __post_init__(self):
        if self.b <= 0:
            raise ValueError(f"b must be positive, got {self.b}")
        if self.components < 1:
            raise ValueError(f"need at least one component, got {self.components}")
        if self.order is None:
            object.__setattr__(self, "order", 2 * self.components)
        if self.order < 2 * self.components:
            raise ValueError(
                f"order N={self.order} truncates the leading term of u_{self.components}; need N >= {2 * self.components}"
            )


def sin_derivative(k: int, x: float) -> float:
    """k-th derivative of sin at x (float)."""
    return (math.sin, math.cos, lambda y: -math.sin(y), lambda y: -math.cos(y))[k % 4](x)


def exact_sin_derivative(k: int, x: float) -> int:
    """k-th derivative of sin at a multiple of pi/2, as an exact integer.

    Raises ValueError when x is not (to rounding) a multiple of pi/2.
    """
    q = x / (math.pi / 2)
    quarter = round(q)
    if abs(q - quarter) > 1e-12:
        raise ValueError(f"sin derivatives at {x!r} are not rational; exact path needs a multiple of pi/2")
    # sin^(k)(q pi/2) = sin((q + k) pi/2)
    return (0, 1, 0, -1)[(quarter + k) % 4]


def integrate_twice(s: TruncatedSeries) -> TruncatedSeries:
    """``L^{-1}``: c_n t^n -> c_n t^(n+2)/((n+1)(n+2)), truncated."""
    return s.integrate_twice()


def _derivatives(problem: PendulumProblem, oracle: DerivativeOracle | None, exact: bool) -> list:
    if oracle is None:
        oracle = exact_sin_derivative if exact else sin_derivative
    values = [oracle(k, problem.a) for k in range(problem.components)]
    if exact:
        bad = [v for v in values if not isinstance(v, (int, Fraction))]
        if bad:
            raise TypeError(f"exact path needs int/Fraction derivative values, got {bad[0]!r}")
        return [Fraction(v) for v in values]
    return [float(v) for v in values]


def pendulum_components(
    problem: PendulumProblem, oracle: DerivativeOracle | None = None, *, exact: bool = False
) -> list[TruncatedSeries]:
    """The series u_1, ..., u_M (u_0 = a is left out)."""
    M, N = problem.components, problem.order
    derivs = _derivatives(problem, oracle, exact)
    b = Fraction(problem.b) if exact else float(problem.b)
    zero = Fraction(0) if exact else 0.0

    comps: list[TruncatedSeries] = []
    for m in range(M):
        if m == 0:
            A = TruncatedSeries.constant(derivs[0] + zero, N)
        else:
            ctx = EvaluationContext(comps, derivs[1 : m + 1])
            A = evaluate(adomian(m), ctx)
        comps.append(-integrate_twice(b * A))
    return comps


def pendulum_deviation(
    problem: PendulumProblem, oracle: DerivativeOracle | None = None, *, exact: bool = False
) -> TruncatedSeries:
    """``u(t) - a`` as a truncated series."""
    comps = pendulum_components(problem, oracle, exact=exact)
    total = comps[0]
    for c in comps[1:]:
        total = total + c
    return total


def pendulum_solve(
    problem: PendulumProblem, oracle: DerivativeOracle | None = None, *, exact: bool = False
) -> TruncatedSeries:
    """``u(t) = sum_{m=0}^{M} u_m`` truncated at t^N.

    In the exact path every coefficient except c_0 is a Fraction; c_0 is
    ``a`` exactly as given (pi/2 has no rational representation).
    """
    dev = pendulum_deviation(problem, oracle, exact=exact)
    return TruncatedSeries((problem.a,) + dev.coefficients[1:])


def evaluate_series(s: TruncatedSeries, t):
    """Value of the series at ``t`` (scalar or array), as float."""
    if np.ndim(t):
        t = np.asarray(t, dtype=float)
        coeffs = [float(c) for c in s.coefficients]
        return TruncatedSeries(coeffs).evaluate(t)
    return s.evaluate(t)


def reference_trajectory(problem: PendulumProblem, t_end: float, steps: int):
    """Classical RK4 on ``(u, u')``; returns ``(t, u, du)`` arrays of length steps+1.

    Global error is O(h^4) with h = t_end/steps.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    b = float(problem.b)
    h = t_end / steps
    half = 0.5 * h
    sin = math.sin
    us = np.empty(steps + 1)
    vs = np.empty(steps + 1)
    u, v = float(problem.a), 0.0
    us[0], vs[0] = u, v
    # scalar stages: u' = v, v' = -b sin(u)
    for n in range(1, steps + 1):
        a1 = -b * sin(u)
        a2 = -b * sin(u + half * v)
        v2 = v + half * a1
        a3 = -b * sin(u + half * v2)
        v3 = v + half * a2
        a4 = -b * sin(u + h * v3)
        v4 = v + h * a3
        u += (h / 6.0) * (v + 2 * v2 + 2 * v3 + v4)
        v += (h / 6.0) * (a1 + 2 * a2 + 2 * a3 + a4)
        us[n], vs[n] = u, v
    t = np.linspace(0.0, t_end, steps + 1)
    return t, us, vs


def reference_integrate(problem: PendulumProblem, t_end: float, steps: int = 2000) -> float:
    """u(t_end) from the RK4 reference integrator."""
    _, u, _ = reference_trajectory(problem, t_end, steps)
    return float(u[-1])
