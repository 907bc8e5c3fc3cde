"""Relative orbital integrals for the diagonal GL2 acting on GL2 x GL2.

With the stabilizer normalized to volume one the integral counts the
vertices of X^{gamma_1} ∩ X^{gamma_2}.  The piecewise tables are written out
directly; treecount and the oracle check them from outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .halfint import HalfInt
from .invariants import RAM, SPLIT, UNRAM, GammaInvariants
from .qrat import QRat, q, qpow

CASES = ("A", "B", "C", "D", "E", "F", "G", "h")
CORES = (None, "equal", "shared_ray")


def _exp(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral exponent {x}")
    return int(x)


def _vball(i: Fraction) -> QRat:
    """1 + (1+q)(q^i - 1)/(q - 1)."""
    return 1 + (1 + q) * (qpow(_exp(i)) - 1) / (q - 1)


def _mball(i: Fraction) -> QRat:
    """2(q^i - 1)/(q - 1)."""
    return 2 * (qpow(_exp(i)) - 1) / (q - 1)


@dataclass(frozen=True)
class RelativeConfig:
    """Invariants of gamma = (gamma_1, gamma_2) up to the diagonal action.

    ``delta`` is the distance between the cores of the fixed sets (apartments
    or ball centers).  For two split elements, ``overlap_r`` is the number of
    common apartment vertices when finite, and ``same_core`` is ``"equal"``
    (same apartment) or ``"shared_ray"`` (same end, different apartments).
    """

    inv1: GammaInvariants
    inv2: GammaInvariants
    delta: HalfInt = HalfInt(0)
    overlap_r: int | None = None
    same_core: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "delta", HalfInt.of(self.delta))
        if self.delta < 0:
            raise ValueError("delta must be nonnegative")
        if self.same_core not in CORES:
            raise ValueError(f"unknown core relation {self.same_core!r}")


@dataclass(frozen=True)
class RelativeResult:
    case: str
    value: QRat | None  # None iff divergent

    @property
    def divergent(self) -> bool:
        return self.value is None

    def __str__(self):
        return "divergent" if self.divergent else str(self.value)


def detect_case(cfg: RelativeConfig) -> str:
    k1, k2 = cfg.inv1.klass, cfg.inv2.klass
    d = cfg.delta
    both_split = k1 == SPLIT and k2 == SPLIT
    if not both_split and (cfg.overlap_r is not None or cfg.same_core is not None):
        raise ValueError("overlap_r and same_core only describe two split elements")
    if both_split:
        if cfg.same_core is not None:
            if cfg.overlap_r is not None:
                raise ValueError("overlap_r contradicts same_core")
            return "C" if cfg.same_core == "equal" else "D"
        if cfg.overlap_r is not None:
            if cfg.overlap_r < 1:
                raise ValueError("overlap_r must be at least 1")
            if d != 0:
                raise ValueError("intersecting apartments have delta = 0")
            return "B"
        if not d.is_integer or d < 1:
            raise ValueError("disjoint apartments sit at a positive integer distance")
        return "A"
    if SPLIT in (k1, k2):
        ell = cfg.inv2 if k1 == SPLIT else cfg.inv1
        # a ramified center is a midpoint: off the apartment at half-integer
        # distance, or the midpoint of one of its edges
        if d.is_integer != (ell.klass == UNRAM) and not (ell.klass == RAM and d == 0):
            raise ValueError("delta is an integer iff the elliptic factor is unramified")
        return "h"
    if k1 == k2:
        if not d.is_integer:
            raise ValueError("two centers of the same kind sit at an integer distance")
        return "E" if k1 == UNRAM else "F"
    if d.is_integer:
        raise ValueError("a vertex and a midpoint sit at a half-integer distance")
    return "G"


def _vals(cfg):
    return cfg.inv1.depth.value, cfg.inv2.depth.value, cfg.delta.value


def _tube_row(big, small, dl):
    """(1 + 2(big - small - dl)) q^small + 2(q^small - 1)/(q - 1)."""
    return (1 + _exp(2 * (big - small - dl))) * qpow(_exp(small)) + 2 * (qpow(_exp(small)) - 1) / (q - 1)


# each table is a list of (row, condition, formula); the first row whose
# condition holds gives the value
def _rows(case, d1, d2, dl, r=None):
    s = d1 + d2 - dl
    gap = abs(d1 - d2)
    half = Fraction(1, 2)
    if case == "A":
        if d1 < d2:
            d1, d2 = d2, d1
        return [
            ("empty", s < 0, lambda: QRat(0)),
            ("ball_even", gap <= dl and s % 2 == 0, lambda: _vball(s / 2)),
            ("ball_odd", gap <= dl and s % 2 == 1, lambda: _mball((s + 1) / 2)),
            ("tube", dl <= gap, lambda: _tube_row(d1, d2, dl)),
        ]
    if case == "B":
        if d1 < d2:
            d1, d2 = d2, d1
        return [("overlap", True, lambda: (2 * _exp(d1 - d2) + r) * qpow(_exp(d2)) + 2 * (qpow(_exp(d2)) - 1) / (q - 1))]
    if case == "C":
        return [("same", True, lambda: qpow(_exp(min(d1, d2))))]
    parity = (d1 + d2 + dl) % 2
    if case in ("E", "F"):
        inside = (lambda: _vball(min(d1, d2))) if case == "E" else (lambda: _mball(min(d1, d2) + half))
        return [
            ("empty", s < 0, lambda: QRat(0)),
            ("ball_even", gap < dl and parity == 0, lambda: _vball(s / 2)),
            ("ball_odd", gap < dl and parity == 1, lambda: _mball((s + 1) / 2)),
            ("inside", dl <= gap, inside),
        ]
    if case == "G":
        # d1 unramified (integer), d2 ramified
        return [
            ("empty", s < 0, lambda: QRat(0)),
            ("ball_even", gap < dl and parity == 0, lambda: _mball((s + 1) / 2)),
            ("ball_odd", gap < dl and parity == 1, lambda: _vball(s / 2)),
            ("inside_ram", dl <= gap and d1 > d2, lambda: _mball(d2 + half)),
            ("inside_unram", dl <= gap and d1 < d2, lambda: _vball(d1)),
        ]
    # h: d1 hyperbolic, d2 elliptic
    return [
        ("empty", s < 0, lambda: QRat(0)),
        ("ball_even", gap <= dl and s % 2 == 0, lambda: _vball(s / 2)),
        ("ball_odd", gap <= dl and s % 2 == 1, lambda: _mball((s + 1) / 2)),
        ("inside", d2 - d1 < dl < gap, lambda: _vball(d2) if d2.denominator == 1 else _mball(d2 + half)),
        ("tube", 0 <= dl <= d2 - d1, lambda: _tube_row(d2, d1, dl)),
    ]


def _ordered(cfg, case):
    d1, d2, dl = _vals(cfg)
    if (case == "G" and cfg.inv1.klass == RAM) or (case == "h" and cfg.inv1.klass != SPLIT):
        d1, d2 = d2, d1
    return d1, d2, dl


def branch_values(cfg: RelativeConfig, delta=None) -> dict[str, QRat | None]:
    """Every row formula of the case table evaluated at (d1, d2, delta),
    whether or not its condition holds; None where the formula is undefined."""
    case = detect_case(cfg)
    if case == "D":
        return {}
    d1, d2, dl = _ordered(cfg, case)
    if delta is not None:
        dl = HalfInt.of(delta).value
    out = {}
    for name, _, f in _rows(case, d1, d2, dl, cfg.overlap_r):
        try:
            out[name] = f()
        except ArithmeticError:
            out[name] = None
    return out


def active_branch(cfg: RelativeConfig) -> str:
    case = detect_case(cfg)
    if case == "D":
        return "divergent"
    for name, cond, _ in _rows(case, *_ordered(cfg, case), cfg.overlap_r):
        if cond:
            return name
    raise AssertionError("no row applies")


def relative_orbital(cfg: RelativeConfig) -> RelativeResult:
    case = detect_case(cfg)
    if case == "D":
        return RelativeResult(case, None)
    for _, cond, f in _rows(case, *_ordered(cfg, case), cfg.overlap_r):
        if cond:
            return RelativeResult(case, f())
    raise AssertionError("no row applies")
