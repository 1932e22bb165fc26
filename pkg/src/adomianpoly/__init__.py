"""Adomian polynomials built from reduced polynomials Z_{m,k}.

Z_{m,k} is enumerated from the nonnegative solutions of a two-equation
diophantine system and carries exact rational coefficients; A_m is the sum
of Z_{m,k} F^(k)(u0) over k.  :mod:`adomianpoly.adm_series` applies them to
the pendulum as a truncated power series in t.
"""
from .adm_series import (
    PendulumProblem,
    evaluate_series,
    integrate_twice,
    pendulum_solve,
    reference_integrate,
)
from .adomian import (
    AdomianPolynomial,
    EvaluationContext,
    adomian,
    evaluate,
    generating_series_check,
    monomial_count,
    render,
)
from .diophantine import MultiplicityVector, count, enumerate_full, enumerate_solutions
from .reduced import ReducedPolynomial, closed_form, instantiate, reduced_polynomial
from .series import TruncatedSeries

__version__ = "0.1.0"
