"""Exact rational functions in one symbol ``q``.

Values are kept in lowest terms with integer-coefficient numerator and
denominator and a positive leading coefficient in the denominator, so
structural equality is mathematical equality.  The gcd work is delegated
to sympy's sparse fraction field over ZZ.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from sympy import ZZ
from sympy.polys.fields import field

_K, _Q = field("q", ZZ)

__all__ = [
    "QRat",
    "PoleError",
    "qrat_build",
    "qrat_arith",
    "qrat_eval",
    "parse_qrat",
    "q",
    "qpow",
]


class PoleError(ZeroDivisionError):
    """Evaluation point is a root of the denominator."""


def _coerce(x) -> object:
    if isinstance(x, QRat):
        return x._f
    if isinstance(x, bool):
        raise TypeError("bool is not a QRat operand")
    if isinstance(x, int):
        return _K(x)
    if isinstance(x, Rational):
        return _K(int(x.numerator)) / int(x.denominator)
    return NotImplemented


class QRat:
    """Immutable element of Q(q)."""

    __slots__ = ("_f",)

    def __init__(self, value=0):
        if isinstance(value, QRat):
            f = value._f
        elif type(value) is type(_Q):
            f = value
        else:
            f = _coerce(value)
            if f is NotImplemented:
                raise TypeError(f"cannot build QRat from {type(value).__name__}")
        object.__setattr__(self, "_f", f)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    # -- structure -------------------------------------------------------
    @staticmethod
    def _coeffs(poly) -> dict[int, int]:
        return {int(m[0]): int(c) for m, c in poly.terms()}

    @property
    def numerator(self) -> dict[int, int]:
        """Exponent -> integer coefficient."""
        return self._coeffs(self._f.numer)

    @property
    def denominator(self) -> dict[int, int]:
        return self._coeffs(self._f.denom)

    def is_zero(self) -> bool:
        return not self._f.numer

    def is_polynomial(self) -> bool:
        return self._f.denom.is_ground

    def normalize(self) -> "QRat":
        return QRat(_K.new(self._f.numer, self._f.denom))

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        return NotImplemented if o is NotImplemented else QRat(self._f + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is NotImplemented else QRat(self._f - o)

    def __rsub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is NotImplemented else QRat(o - self._f)

    def __mul__(self, other):
        o = _coerce(other)
        return NotImplemented if o is NotImplemented else QRat(self._f * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.numer:
            raise ZeroDivisionError("division by the zero rational function")
        return QRat(self._f / o)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return QRat(o / self._f)

    def __neg__(self):
        return QRat(-self._f)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return QRat(self._f ** (-n)).__rtruediv__(1)
        return QRat(self._f**n)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._f == o

    def __hash__(self):
        return hash((tuple(sorted(self.numerator.items())), tuple(sorted(self.denominator.items()))))

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation ------------------------------------------------------
    def __call__(self, q0) -> Fraction:
        return qrat_eval(self, q0)

    def subs_eval(self, q0) -> Fraction:
        return qrat_eval(self, q0)

    # -- printing --------------------------------------------------------
    def __str__(self):
        return f"({_poly_str(self.numerator)})/({_poly_str(self.denominator)})"

    def __repr__(self):
        return f"QRat('{self}')"

    def latex(self) -> str:
        num = _poly_str(self.numerator, latex=True)
        if self.is_polynomial() and self.denominator == {0: 1}:
            return num
        return rf"\frac{{{num}}}{{{_poly_str(self.denominator, latex=True)}}}"


def _poly_str(coeffs: dict[int, int], latex: bool = False) -> str:
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            if latex:
                mono = "q" if e == 1 else f"q^{{{e}}}"
            else:
                mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}" if not latex else f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(r"([+-]?)(\d*)\*?(q(?:\^(\d+))?)?")


def _parse_poly(s: str) -> dict[int, int]:
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"malformed polynomial near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        else:
            exp = 0
        out[exp] = out.get(exp, 0) + sign * coef
        pos = m.end()
    return {e: c for e, c in out.items() if c}


def parse_qrat(text: str) -> QRat:
    """Inverse of ``str(QRat)``; also accepts a bare polynomial."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
    if m:
        num, den = _parse_poly(m.group(1)), _parse_poly(m.group(2))
    else:
        num, den = _parse_poly(text), {0: 1}
    if not den:
        raise ValueError("zero denominator")
    return _from_coeffs(num) / _from_coeffs(den)


def _from_coeffs(coeffs: dict[int, int]) -> QRat:
    f = _K(0)
    for e, c in coeffs.items():
        f += c * _Q**e
    return QRat(f)


def qpow(n: int) -> QRat:
    """q**n for any integer n."""
    if n >= 0:
        return QRat(_Q**n)
    return QRat(_K(1) / _Q ** (-n))


q = QRat(_Q)


def qrat_build(terms: Iterable[tuple]) -> QRat:
    """Sum of ``c * q**e`` over ``(c, e)`` pairs; ``e`` may be negative."""
    total = QRat(0)
    for c, e in terms:
        if not isinstance(e, int):
            raise TypeError("exponents must be integers")
        total = total + QRat(Fraction(c)) * qpow(e)
    return total


def qrat_arith(op: str, a: QRat, b: QRat | None = None) -> QRat:
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _poly_at(coeffs: dict[int, int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for e, c in coeffs.items():
        acc += c * x**e
    return acc


def qrat_eval(f: QRat, q0) -> Fraction:
    x = Fraction(q0)
    den = _poly_at(f.denominator, x)
    if den == 0:
        raise PoleError(f"{f} has a pole at q={x}")
    return _poly_at(f.numerator, x) / den
