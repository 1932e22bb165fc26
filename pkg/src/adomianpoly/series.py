"""Degree-bounded power series in one variable.

Coefficients may be :class:`fractions.Fraction` (exact) or ``float``; the
arithmetic never converts between them.  Every operation discards terms
above the truncation order.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Number

__all__ = ["TruncatedSeries"]


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N``, with N the truncation ``order``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients, order: int | None = None):
        c = list(coefficients)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = c[: order + 1] + [0] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    @classmethod
    def zero(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        z = Fraction(0) if exact else 0.0
        return cls([z] * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value] + [value * 0] * order)

    @classmethod
    def monomial(cls, value, degree: int, order: int) -> "TruncatedSeries":
        c = [value * 0] * (order + 1)
        if degree <= order:
            c[degree] = value
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self):
        return f"TruncatedSeries({list(self._c)!r})"

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries([a + b for a, b in zip(self._c, other._c)])
        if isinstance(other, Number):
            return TruncatedSeries((self._c[0] + other,) + self._c[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self._c])

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            a, b = self._c, other._c
            N = self.order
            out = []
            for n in range(N + 1):
                acc = a[0] * b[n]
                for i in range(1, n + 1):
                    acc += a[i] * b[n - i]
                out.append(acc)
            return TruncatedSeries(out)
        if isinstance(other, Number):
            return TruncatedSeries([other * a for a in self._c])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = TruncatedSeries.constant(self._c[0] * 0 + 1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def valuation(self) -> int | None:
        """Lowest degree with a nonzero coefficient, None for the zero series."""
        for n, c in enumerate(self._c):
            if c != 0:
                return n
        return None

    def derivative(self) -> "TruncatedSeries":
        """Term-wise d/dt; the top coefficient becomes unknown and is set to zero."""
        c = [n * self._c[n] for n in range(1, len(self._c))]
        return TruncatedSeries(c + [self._c[0] * 0])

    def integrate_twice(self) -> "TruncatedSeries":
        """Double integral from 0: ``c_n t^n -> c_n t^(n+2) / ((n+1)(n+2))``."""
        N = self.order
        zero = self._c[0] * 0
        out = [zero] * (N + 1)
        for n in range(N - 1):
            c = self._c[n]
            if isinstance(c, int):
                c = Fraction(c)
            out[n + 2] = c / ((n + 1) * (n + 2))
        return TruncatedSeries(out)

    def __call__(self, t):
        return self.evaluate(t)

    def evaluate(self, t):
        """Horner evaluation; ``t`` may be a scalar or a numpy array."""
        acc = self._c[-1] * 1
        for c in reversed(self._c[:-1]):
            acc = acc * t + c
        return acc
