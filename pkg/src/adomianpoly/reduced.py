"""Reduced polynomials Z_{m,k}.

Z_{m,k} is the coefficient of F^(k)(u0) in the Adomian polynomial A_m.  It
does not depend on F: one monomial per solution of the diophantine system,
with coefficient 1 / (n_1! n_2! ...).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .diophantine import MultiplicityVector, enumerate_solutions

__all__ = [
    "Monomial",
    "ReducedPolynomial",
    "TemplateTerm",
    "ClosedFormTemplate",
    "reduced_polynomial",
    "closed_form",
    "instantiate",
    "format_fraction",
    "parse_fraction",
]


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass(frozen=True)
class Monomial:
    coefficient: Fraction
    exponents: MultiplicityVector

    def __post_init__(self):
        if self.coefficient == 0:
            raise ValueError("monomial coefficient must be nonzero")

    @classmethod
    def from_solution(cls, v: MultiplicityVector) -> "Monomial":
        return cls(Fraction(1, prod(factorial(n) for _, n in v.entries)), v)

    def evaluate(self, u_values):
        """Substitute ``u_values[i-1]`` for ``u_i``.

        Works for anything with ``*`` and integer ``**`` (numbers,
        :class:`~adomianpoly.series.TruncatedSeries`, ...).
        """
        value = None
        for i, n in self.exponents.entries:
            factor = u_values[i - 1] ** n
            value = factor if value is None else value * factor
        return self.coefficient * value

    def render(self) -> str:
        factors = "*".join(f"u{i}" if n == 1 else f"u{i}^{n}" for i, n in self.exponents.entries)
        c = self.coefficient
        if c == 1:
            return factors
        if c.denominator == 1:
            return f"{c.numerator}*{factors}"
        return f"{format_fraction(c)}*{factors}"


@dataclass(frozen=True)
class ReducedPolynomial:
    m: int
    k: int
    terms: tuple[Monomial, ...]

    def __post_init__(self):
        seen = set()
        for t in self.terms:
            e = t.exponents
            if (e.m, e.k) != (self.m, self.k):
                raise ValueError(f"term {e} does not belong to Z_{{{self.m},{self.k}}}")
            if e in seen:
                raise ValueError(f"duplicate exponents {e}")
            seen.add(e)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict[MultiplicityVector, Fraction]:
        return {t.exponents: t.coefficient for t in self.terms}

    def variables(self) -> set[int]:
        """Indices i such that u_i occurs."""
        return {i for t in self.terms for i, _ in t.exponents.entries}

    def evaluate(self, u_values):
        if len(u_values) < self.m - self.k + 1:
            raise ValueError(f"Z_{{{self.m},{self.k}}} needs {self.m - self.k + 1} u-values, got {len(u_values)}")
        total = None
        for t in self.terms:
            v = t.evaluate(u_values)
            total = v if total is None else total + v
        return total

    def render(self) -> str:
        return " + ".join(t.render() for t in self.terms)

    __str__ = render

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "terms": [
                {"coeff": format_fraction(t.coefficient), "exps": {str(i): n for i, n in t.exponents.entries}}
                for t in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReducedPolynomial":
        m, k = int(data["m"]), int(data["k"])
        terms = tuple(
            Monomial(parse_fraction(t["coeff"]), MultiplicityVector.from_dict(m, k, {int(i): n for i, n in t["exps"].items()}))
            for t in data["terms"]
        )
        return cls(m, k, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _canonical(terms) -> tuple[Monomial, ...]:
    return tuple(sorted(terms, key=lambda t: t.exponents.partition(), reverse=True))


@lru_cache(maxsize=None)
def reduced_polynomial(m: int, k: int) -> ReducedPolynomial:
    """Z_{m,k}, one monomial per diophantine solution.

    >>> print(reduced_polynomial(4, 2))
    u1*u3 + 1/2*u2^2
    """
    if k > m:
        raise ValueError(f"Z_{{m,k}} requires k <= m, got m={m}, k={k}")
    terms = tuple(Monomial.from_solution(v) for v in enumerate_solutions(m, k))
    return ReducedPolynomial(m, k, terms)


# --- closed forms for small j = m - k ------------------------------------


@dataclass(frozen=True)
class TemplateTerm:
    """``u1^(m - u1_offset) * prod(u_i^n_i) / ((m - u1_offset)! * denominator)``"""

    u1_offset: int
    fixed: tuple[tuple[int, int], ...]
    denominator: int = 1


@dataclass(frozen=True)
class ClosedFormTemplate:
    j: int
    terms: tuple[TemplateTerm, ...]


T = TemplateTerm
_TEMPLATES = {
    0: (T(0, ()),),
    1: (T(2, ((2, 1),)),),
    2: (T(3, ((3, 1),)), T(4, ((2, 2),), 2)),
    3: (T(4, ((4, 1),)), T(5, ((2, 1), (3, 1))), T(6, ((2, 3),), 6)),
    4: (
        T(5, ((5, 1),)),
        T(6, ((2, 1), (4, 1))),
        T(6, ((3, 2),), 2),
        T(7, ((2, 2), (3, 1)), 2),
        T(8, ((2, 4),), 24),
    ),
    5: (
        T(6, ((6, 1),)),
        T(7, ((3, 1), (4, 1))),
        T(7, ((2, 1), (5, 1))),
        T(8, ((2, 1), (3, 2)), 2),
        T(8, ((2, 2), (4, 1)), 2),
        T(9, ((2, 3), (3, 1)), 6),
        T(10, ((2, 5),), 120),
    ),
}
del T


def closed_form(j: int) -> ClosedFormTemplate:
    """General-m template of Z_{m,m-j} for 0 <= j <= 5."""
    if j not in _TEMPLATES:
        raise ValueError(f"closed forms exist only for j in 0..5, got {j}")
    return ClosedFormTemplate(j, _TEMPLATES[j])


def instantiate(template: ClosedFormTemplate, m: int) -> ReducedPolynomial:
    """Substitute ``m``; terms with a negative power of u1 are dropped."""
    if m <= template.j:
        raise ValueError(f"instantiating Z_{{m,m-{template.j}}} needs m > {template.j}, got {m}")
    k = m - template.j
    terms = []
    for t in template.terms:
        p1 = m - t.u1_offset
        if p1 < 0:
            continue
        exps = dict(t.fixed)
        if p1:
            exps[1] = p1
        coeff = Fraction(1, factorial(p1) * t.denominator)
        terms.append(Monomial(coeff, MultiplicityVector.from_dict(m, k, exps)))
    return ReducedPolynomial(m, k, _canonical(terms))
