"""Classes over the affine line supported on finitely many rational points.

An A1Class is a finitely supported map from exact rational base points to
MuClass values; it models the classes that arise as finite sums of
point-pushforwards.  The convolution over the line pushes the pairwise Psi
along addition of base points, its unit is the point class sitting at 0, and
epsilon_push (sum of all fibers) intertwines it with star on the point.

Base points are exact rationals even though the theory runs over an
algebraically closed field: every computation shipped here has rational
critical values, and exactness beats generality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .classes import MuClass
from .convolve import psi_pair, tensor
from .errors import ValidationError
from .laurent import LaurentInt

PointLike = Union[Fraction, int, str]


def as_point(value: PointLike) -> Fraction:
    """Coerce an exact base point; strings use the "p/q" form."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad base point {value!r}") from exc
    raise ValidationError(f"bad base point {value!r}")


def point_str(p: Fraction) -> str:
    return str(p.numerator) if p.denominator == 1 else f"{p.numerator}/{p.denominator}"


class A1Class:
    """Finitely supported map from base points to classes; no zero fibers."""

    __slots__ = ("_support",)

    def __init__(self, support: Mapping[PointLike, MuClass] | Iterable[tuple[PointLike, MuClass]] = ()):
        items = support.items() if isinstance(support, Mapping) else support
        acc: dict[Fraction, MuClass] = {}
        for pt, cls in items:
            pt = as_point(pt)
            if not isinstance(cls, MuClass):
                raise ValidationError(f"fiber at {point_str(pt)} is not a class")
            if pt in acc:
                cls = acc[pt] + cls
            acc[pt] = cls
        self._support = tuple(sorted(((p, c) for p, c in acc.items() if c),
                                     key=lambda item: item[0]))

    @classmethod
    def zero(cls) -> "A1Class":
        return cls()

    def support(self) -> tuple[tuple[Fraction, MuClass], ...]:
        return self._support

    def fiber(self, point: PointLike) -> MuClass:
        pt = as_point(point)
        for p, c in self._support:
            if p == pt:
                return c
        return MuClass.zero()

    def is_zero(self) -> bool:
        return not self._support

    def __bool__(self) -> bool:
        return bool(self._support)

    def __add__(self, other: "A1Class") -> "A1Class":
        if not isinstance(other, A1Class):
            return NotImplemented
        return A1Class(list(self._support) + list(other._support))

    def __neg__(self) -> "A1Class":
        return A1Class([(p, -c) for p, c in self._support])

    def __sub__(self, other: "A1Class") -> "A1Class":
        if not isinstance(other, A1Class):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[int, LaurentInt, MuClass]) -> "A1Class":
        if not isinstance(other, (int, LaurentInt, MuClass)):
            return NotImplemented
        return A1Class([(p, c * other) for p, c in self._support])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, A1Class) and self._support == other._support

    def __hash__(self) -> int:
        return hash(("A1Class", self._support))

    def pushforward(self) -> MuClass:
        """Sum of all fibers: the pushforward along the structure morphism."""
        total = MuClass.zero()
        for _, c in self._support:
            total = total + c
        return total

    def __str__(self) -> str:
        from .jsonio import pretty
        return pretty(self)

    def __repr__(self) -> str:
        return f"A1Class({[(point_str(p), str(c)) for p, c in self._support]!r})"


def a1_unit() -> A1Class:
    """The unit of the line convolution: the point class at 0."""
    return A1Class({0: MuClass.one()})


def a1_star(f: A1Class, g: A1Class) -> A1Class:
    """Convolution over the line: Psi of fibers pushed along point addition."""
    acc: list[tuple[Fraction, MuClass]] = []
    for p, cp in f.support():
        for q, cq in g.support():
            acc.append((p + q, psi_pair(tensor(cp, cq))))
    return A1Class(acc)


def epsilon_push(f: A1Class) -> MuClass:
    return f.pushforward()
