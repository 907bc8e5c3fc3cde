"""Orbital integrals O_n of SL2 against f_n = 1_{K t_n K}, and their Shalika germs.

Measures: the unipotent class alpha(x O) gets measure 2, which produces the
factor 1/2 in the unipotent integrals; the germ functionals below undo it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .halfint import HalfInt
from .invariants import RAM, SPLIT, UNRAM, GammaInvariants
from .qrat import QRat, q, qpow

UNIPOTENT_SL2 = ("zero", "one", "u", "pi", "u_pi")
GERM_CLASS = {"zero": "U0", "one": "U1", "u": "U1", "pi": "Upi", "u_pi": "Upi"}

_half = QRat(1) / 2


def _check_n(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")


def _flip(color: str) -> str:
    return "white" if color == "black" else "black"


def sl2_unipotent(rep: str, n: int) -> QRat:
    _check_n(n)
    if rep not in GERM_CLASS:
        raise ValueError(f"unknown unipotent class {rep!r}")
    if rep == "zero":
        return QRat(1 if n == 0 else 0)
    odd_class = GERM_CLASS[rep] == "Upi"
    if n == 0:
        lead = qpow(-1) if odd_class else QRat(1)
        return _half * lead / (1 - qpow(-2))
    return _half * qpow(n) if (n % 2 == 1) == odd_class else QRat(0)


def sl2_unipotent_stable(n: int) -> QRat:
    """Sum over the four nontrivial unipotent classes."""
    return sum((sl2_unipotent(r, n) for r in UNIPOTENT_SL2[1:]), QRat(0))


def sl2_hyperbolic(d: int, n: int) -> QRat:
    _check_n(n)
    if d < 0:
        raise ValueError("depth must be nonnegative")
    if n == 0:
        return qpow(d)
    return qpow(n + d) * (1 - qpow(-1))


def sl2_elliptic_unram(d: int, center: str, n: int) -> QRat:
    """Black vertices at distance n from the fixed ball of radius d (all of the ball if n = 0)."""
    _check_n(n)
    if d < 0:
        raise ValueError("depth must be nonnegative")
    if center not in ("black", "white"):
        raise ValueError(f"unknown color {center!r}")
    white = center == "white"
    if n == 0:
        top = d + 1 if (d % 2 == 0) != white else d
        return (qpow(top) - 1) / (q - 1)
    return qpow(n + d) * (1 + qpow(-1)) if ((d + n) % 2 == 0) != white else QRat(0)


def sl2_elliptic_ram(d, n: int) -> QRat:
    _check_n(n)
    d = HalfInt.of(d)
    if d.is_integer or d < 0:
        raise ValueError("ramified depth must be a positive strict half-integer")
    k = (d + HalfInt(1)).as_int()  # d + 1/2
    if n == 0:
        return (qpow(k) - 1) / (q - 1)
    return qpow(n + k - 1)


def sl2_orbital(inv: GammaInvariants, n: int) -> QRat:
    """O_n for the rational orbit described by ``inv`` (black center by default)."""
    if inv.klass == SPLIT:
        return sl2_hyperbolic(inv.depth.as_int(), n)
    if inv.klass == UNRAM:
        return sl2_elliptic_unram(inv.depth.as_int(), inv.center_color or "black", n)
    return sl2_elliptic_ram(inv.depth, n)


def sl2_stable(inv: GammaInvariants, n: int) -> QRat:
    if inv.klass == SPLIT:
        return sl2_hyperbolic(inv.depth.as_int(), n)
    if inv.klass == UNRAM:
        d = inv.depth.as_int()
        return sl2_elliptic_unram(d, "black", n) + sl2_elliptic_unram(d, "white", n)
    return 2 * sl2_elliptic_ram(inv.depth, n)


def fixed_set_counts_sl2(inv: GammaInvariants) -> tuple[QRat, QRat]:
    """(black, white) vertex counts of the fixed set X^gamma."""
    if inv.klass == SPLIT:
        raise ValueError("the fixed set of a split element is an infinite tube")
    if inv.klass == RAM:
        k = (inv.depth + HalfInt(1)).as_int()
        c = (qpow(k) - 1) / (q - 1)
        return c, c
    d = inv.depth.as_int()
    total = 1 + (q + 1) * (qpow(d) - 1) / (q - 1)
    same = (qpow(2 * (d // 2) + 1) - 1) / (q - 1)
    if (inv.center_color or "black") == "black":
        return same, total - same
    return total - same, same


# ---------------------------------------------------------------------------
# germs


def germ_functional(cls: str, n: int) -> QRat:
    """L_0, L_1, L_pi evaluated at f_n."""
    if cls == "U0":
        return sl2_unipotent("zero", n)
    if cls == "U1":
        return 2 * sl2_unipotent("one", n)
    if cls == "Upi":
        return 2 * sl2_unipotent("pi", n)
    raise ValueError(f"unknown germ class {cls!r}")


@dataclass(frozen=True)
class ShalikaExpansionSL2:
    A: QRat
    B: QRat
    C: QRat

    def evaluate(self, n: int) -> QRat:
        return self.A * germ_functional("U0", n) + self.B * germ_functional("U1", n) + self.C * germ_functional("Upi", n)

    def as_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C}


def sl2_shalika(inv: GammaInvariants) -> ShalikaExpansionSL2:
    """Germ coefficients; an unramified element with a white center is the
    second rational orbit, whose B and C are exchanged."""
    if inv.klass == SPLIT:
        c = qpow(inv.depth.as_int()) * (1 - qpow(-1))
        return ShalikaExpansionSL2(QRat(0), c, c)
    xb, xw = fixed_set_counts_sl2(inv)
    qi = qpow(-1)
    return ShalikaExpansionSL2(1 / (1 - q), qi * (q * xb - xw + 1), qi * (q * xw - xb + 1))
