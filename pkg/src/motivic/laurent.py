"""Exact Laurent polynomials in the Lefschetz symbol L over the integers.

A LaurentInt is a finitely supported map from integer exponents (negative
allowed) to arbitrary-precision integer coefficients.  The invariant is that
no zero coefficient is ever stored, so structural equality is semantic
equality.  Instances are immutable and hashable; all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeffable = Union["LaurentInt", int]


class LaurentInt:

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            if not isinstance(exp, int) or not isinstance(c, int):
                raise TypeError("LaurentInt wants integer exponents and coefficients")
            if c:
                acc[exp] = acc.get(exp, 0) + c
                if not acc[exp]:
                    del acc[exp]
        self._coeffs = tuple(sorted(acc.items()))

    @classmethod
    def from_int(cls, n: int) -> "LaurentInt":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentInt":
        return cls({exp: coeff})

    def items(self) -> tuple[tuple[int, int], ...]:
        """Coefficients as (exponent, value) pairs, exponents ascending."""
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other: Coeffable) -> "LaurentInt | None":
        if isinstance(other, LaurentInt):
            return other
        if isinstance(other, int):
            return LaurentInt({0: other})
        return None

    def __add__(self, other: Coeffable) -> "LaurentInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentInt(list(self._coeffs) + list(o._coeffs))

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt([(e, -c) for e, c in self._coeffs])

    def __sub__(self, other: Coeffable) -> "LaurentInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Coeffable) -> "LaurentInt":
        return -(self - other)

    def __mul__(self, other: Coeffable) -> "LaurentInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs:
            for e2, c2 in o._coeffs:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentInt(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (LaurentInt, int)) else None
        return o is not None and self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(("LaurentInt", self._coeffs))

    def sum_of_coefficients(self) -> int:
        """Evaluation at L = 1 (the Euler-characteristic specialization)."""
        return sum(c for _, c in self._coeffs)

    def evaluate(self, value: int | Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational value."""
        x = Fraction(value)
        if x == 0 and any(e < 0 for e, _ in self._coeffs):
            raise ZeroDivisionError("negative exponent at 0")
        return sum((Fraction(c) * x ** e for e, c in self._coeffs), Fraction(0))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in reversed(self._coeffs):  # leading exponent first
            if e == 0:
                body = str(abs(c))
            else:
                sym = "L" if e == 1 else f"L^{e}"
                body = sym if abs(c) == 1 else f"{abs(c)}*{sym}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentInt({dict(self._coeffs)!r})"


ZERO = LaurentInt()
ONE = LaurentInt({0: 1})
L = LaurentInt({1: 1})
L_MINUS_1 = LaurentInt({1: 1, 0: -1})
ONE_MINUS_L = LaurentInt({0: 1, 1: -1})
