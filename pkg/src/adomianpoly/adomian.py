"""Adomian polynomials ``A_m = sum_k Z_{m,k}(u_1..u_m) F^(k)(u0)``."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .diophantine import count
from .reduced import ReducedPolynomial, reduced_polynomial
from .series import TruncatedSeries

__all__ = [
    "AdomianPolynomial",
    "EvaluationContext",
    "DerivativeOracle",
    "adomian",
    "monomial_count",
    "render",
    "from_json",
    "evaluate",
    "taylor_composition",
    "generating_series_check",
]

# (k, x) -> F^(k)(x); k = 0 gives F(x)
DerivativeOracle = Callable[[int, object], object]


@dataclass(frozen=True)
class AdomianPolynomial:
    m: int
    parts: tuple[tuple[int, ReducedPolynomial], ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        ks = [k for k, _ in self.parts]
        if ks != list(range(1, len(ks) + 1)):
            raise ValueError(f"parts must be k = 1, 2, ... in order, got {ks}")
        for k, z in self.parts:
            if (z.m, z.k) != (self.m, k):
                raise ValueError(f"part k={k} holds Z_{{{z.m},{z.k}}}")

    def part(self, k: int) -> ReducedPolynomial:
        return self.parts[k - 1][1]

    def monomial_count(self) -> int:
        return 1 if self.m == 0 else sum(len(z) for _, z in self.parts)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class EvaluationContext:
    """Values of u_1..u_n and of F'(u0)..F^(n)(u0).

    ``value_at_u0`` (F(u0)) is only needed to evaluate A_0.
    """

    u_values: Sequence
    derivative_values: Sequence
    value_at_u0: object = None


@lru_cache(maxsize=None)
def adomian(m: int) -> AdomianPolynomial:
    """A_m; ``adomian(0)`` is the bare ``F(u0)`` with no parts."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return AdomianPolynomial(m, tuple((k, reduced_polynomial(m, k)) for k in range(1, m + 1)))


def monomial_count(m: int) -> int:
    """Number of monomials in A_m (the partition number p(m); 1 for m = 0)."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m == 0:
        return 1
    return sum(count(m, k) for k in range(1, m + 1))


def _derivative_symbol(k: int) -> str:
    return f"F^({k})(u0)"


def _render_text(a: AdomianPolynomial) -> str:
    if a.m == 0:
        return "F(u0)"
    pieces = []
    for k, z in a.parts:
        body = z.render()
        if len(z) > 1:
            body = f"({body})"
        pieces.append(f"{body}*{_derivative_symbol(k)}")
    return " + ".join(pieces)


def to_dict(a: AdomianPolynomial) -> dict:
    return {"m": a.m, "parts": [{"k": k, "z": z.to_dict()} for k, z in a.parts]}


def from_json(text: str) -> AdomianPolynomial:
    data = json.loads(text)
    parts = tuple((int(p["k"]), ReducedPolynomial.from_dict(p["z"])) for p in data["parts"])
    return AdomianPolynomial(int(data["m"]), parts)


def render(a: AdomianPolynomial, format: str = "text") -> str:
    """Deterministic text or JSON rendering.

    >>> render(adomian(2))
    'u2*F^(1)(u0) + 1/2*u1^2*F^(2)(u0)'
    """
    if format == "text":
        return _render_text(a)
    if format == "json":
        return json.dumps(to_dict(a))
    raise ValueError(f"unknown format {format!r}; expected 'text' or 'json'")


def evaluate(a: AdomianPolynomial, ctx: EvaluationContext):
    """Substitute the context into A_m.

    Exact when every value is a Fraction/int.  The u-values may also be
    :class:`TruncatedSeries`, which is how the pendulum solver uses it.
    """
    if a.m == 0:
        if ctx.value_at_u0 is None:
            raise ValueError("evaluating A_0 needs value_at_u0 = F(u0)")
        return ctx.value_at_u0
    if len(ctx.u_values) < a.m or len(ctx.derivative_values) < a.m:
        raise ValueError(
            f"A_{a.m} needs {a.m} u-values and {a.m} derivative values, "
            f"got {len(ctx.u_values)} and {len(ctx.derivative_values)}"
        )
    total = None
    for k, z in a.parts:
        d = ctx.derivative_values[k - 1]
        term = d * z.evaluate(ctx.u_values)
        total = term if total is None else total + term
    return total


def taylor_composition(oracle: DerivativeOracle, u0, u_values: Sequence, M: int) -> list:
    """Coefficients of eps^0..eps^M in ``F(u0 + sum_i eps^i u_i)``.

    Sums ``F^(k)(u0)/k! * (eps*g)^k`` with truncated series products; the
    diophantine machinery is not involved.
    """
    exact = all(isinstance(v, (int, Fraction)) for v in u_values[:M])
    zero = Fraction(0) if exact else 0.0
    x = TruncatedSeries([zero] + list(u_values[:M]), order=M)
    power = TruncatedSeries.constant(zero + 1, M)
    total = TruncatedSeries.zero(M, exact)
    for k in range(M + 1):
        total = total + (oracle(k, u0) * Fraction(1, factorial(k))) * power
        power = power * x
    return list(total.coefficients)


def generating_series_check(oracle: DerivativeOracle, u0, u_values: Sequence, M: int) -> list[tuple]:
    """Pairs ``(A_m evaluated, eps^m Taylor coefficient)`` for m = 0..M."""
    if M < 1:
        raise ValueError("M must be positive")
    if M > len(u_values):
        raise ValueError(f"need at least M={M} u-values, got {len(u_values)}")
    derivs = [oracle(k, u0) for k in range(1, M + 1)]
    ctx = EvaluationContext(list(u_values), derivs, oracle(0, u0))
    reference = taylor_composition(oracle, u0, u_values, M)
    return [(evaluate(adomian(m), ctx), reference[m]) for m in range(M + 1)]
