"""Conjugacy invariants of regular semisimple elements of GL2 over a p-adic field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime, legendre_symbol

from .halfint import HalfInt

SPLIT, UNRAM, RAM = "split", "unramified_elliptic", "ramified_elliptic"
KLASSES = (SPLIT, UNRAM, RAM)
_ALIASES = {
    "split": SPLIT, "hyperbolic": SPLIT, "hyp": SPLIT,
    "unram": UNRAM, "unramified": UNRAM, "unramified_elliptic": UNRAM,
    "ram": RAM, "ramified": RAM, "ramified_elliptic": RAM,
}


@dataclass(frozen=True)
class GammaInvariants:
    klass: str
    depth: HalfInt
    center_color: str | None = None

    def __post_init__(self):
        klass = _ALIASES.get(self.klass)
        if klass is None:
            raise ValueError(f"unknown class {self.klass!r}")
        object.__setattr__(self, "klass", klass)
        d = HalfInt.of(self.depth)
        object.__setattr__(self, "depth", d)
        if d < 0:
            raise ValueError("depth must be nonnegative")
        if (klass == RAM) == d.is_integer:
            raise ValueError(f"{klass} needs {'a strict half-integer' if klass == RAM else 'an integer'} depth")
        if self.center_color is not None and self.center_color not in ("black", "white"):
            raise ValueError(f"unknown color {self.center_color!r}")
        if klass != UNRAM and self.center_color is not None:
            raise ValueError("only unramified elliptic elements carry a center color")

    @property
    def elliptic(self) -> bool:
        return self.klass != SPLIT

    def with_color(self, color: str) -> "GammaInvariants":
        return GammaInvariants(self.klass, self.depth, color)

    def __str__(self):
        short = {SPLIT: "split", UNRAM: "unram", RAM: "ram"}[self.klass]
        tail = f":{self.center_color}" if self.center_color else ""
        return f"{short}:{self.depth}{tail}"


def parse_invariants(text: str) -> GammaInvariants:
    """``split:2``, ``unram:1:black``, ``ram:1/2`` (or ``ram:.5``)."""
    parts = text.strip().split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"expected class:depth[:color], got {text!r}")
    color = parts[2] if len(parts) == 3 else None
    klass = _ALIASES.get(parts[0])
    if klass == UNRAM and color is None:
        color = "black"
    return GammaInvariants(parts[0], HalfInt.of(parts[1]), color)


def val_p(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _is_square_unit(u: Fraction, p: int) -> bool:
    # u has valuation 0; its residue is num * den^{-1} mod p
    r = (u.numerator * pow(u.denominator, -1, p)) % p
    return legendre_symbol(r, p) == 1


def classify_gl2(trace, det, p: int) -> GammaInvariants:
    """Class and depth of an element of GL2(O) with given trace and determinant."""
    t, D = Fraction(trace), Fraction(det)
    if p == 2:
        raise ValueError("p = 2 (wild ramification) is not supported")
    if not isprime(p):
        raise ValueError(f"{p} is not a prime")
    if D == 0 or val_p(D, p) != 0:
        raise ValueError("determinant must be a p-adic unit")
    if t != 0 and val_p(t, p) < 0:
        raise ValueError("trace must be p-integral")
    disc = t * t - 4 * D
    if disc == 0:
        raise ValueError("discriminant vanishes: not regular semisimple")
    v = val_p(disc, p)
    if v % 2:
        return GammaInvariants(RAM, HalfInt(v))
    unit = disc / Fraction(p) ** v
    return GammaInvariants(SPLIT if _is_square_unit(unit, p) else UNRAM, HalfInt(v))


@dataclass(frozen=True)
class EtaleClass:
    """Invariant data of a regular semisimple element of GLn, SL2 or GL2 x_det GL2.

    ``same_field`` only matters for a pair of elliptic factors; when left as
    None it is inferred where the invariants decide it (two unramified
    factors share the unique unramified extension, factors of different
    classes do not).
    """

    group: str
    factors: tuple[GammaInvariants, ...] = ()
    same_field: bool | None = None

    def __post_init__(self):
        if self.group not in ("GLn", "SL2", "GL2xdetGL2"):
            raise ValueError(f"unknown group {self.group!r}")
        want = {"SL2": 1, "GL2xdetGL2": 2}.get(self.group)
        if want is not None and len(self.factors) != want:
            raise ValueError(f"{self.group} needs {want} factor(s)")


def _fields_equal(a: GammaInvariants, b: GammaInvariants, flag: bool | None) -> bool:
    if a.klass != b.klass:
        if flag:
            raise ValueError("factors of different classes cannot share a field")
        return False
    if flag is not None:
        return flag
    if a.klass == UNRAM:
        return True
    raise ValueError("two ramified factors: pass same_field explicitly")


def orbit_count(cls: EtaleClass) -> int:
    """Rational orbits inside the stable orbit."""
    if cls.group == "GLn":
        return 1
    if cls.group == "SL2":
        return 2 if cls.factors[0].elliptic else 1
    a, b = cls.factors
    if a.elliptic and b.elliptic:
        return 1 if _fields_equal(a, b, cls.same_field) else 2
    return 1
