"""Integers and half-integers stored as twice their value."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction


@functools.total_ordering
@dataclass(frozen=True)
class HalfInt:
    twice_value: int

    def __post_init__(self):
        if not isinstance(self.twice_value, int) or isinstance(self.twice_value, bool):
            raise TypeError("twice_value must be an int")

    @classmethod
    def of(cls, x) -> "HalfInt":
        """Accept int, HalfInt, Fraction/float with denominator 1 or 2, or text like '3/2', '1.5'."""
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(x, int):
            return cls(2 * x)
        fx = Fraction(x)
        t = 2 * fx
        if t.denominator != 1:
            raise ValueError(f"{x} is not an integer or half-integer")
        return cls(int(t))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def floor(self) -> int:
        return self.twice_value // 2

    def ceil(self) -> int:
        return -((-self.twice_value) // 2)

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice_value // 2

    def __add__(self, other):
        o = _to(other)
        return NotImplemented if o is None else HalfInt(self.twice_value + o.twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        o = _to(other)
        return NotImplemented if o is None else HalfInt(self.twice_value - o.twice_value)

    def __rsub__(self, other):
        o = _to(other)
        return NotImplemented if o is None else HalfInt(o.twice_value - self.twice_value)

    def __neg__(self):
        return HalfInt(-self.twice_value)

    def __abs__(self):
        return HalfInt(abs(self.twice_value))

    def __eq__(self, other):
        o = _to(other)
        return NotImplemented if o is None else self.twice_value == o.twice_value

    def __lt__(self, other):
        o = _to(other)
        return NotImplemented if o is None else self.twice_value < o.twice_value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.twice_value // 2) if self.is_integer else f"{self.twice_value}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def _to(x):
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return HalfInt(2 * x)
    if isinstance(x, Fraction) and (2 * x).denominator == 1:
        return HalfInt(int(2 * x))
    return None


def hi(x) -> HalfInt:
    return HalfInt.of(x)
