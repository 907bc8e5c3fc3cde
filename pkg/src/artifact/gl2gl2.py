"""Orbital integrals O_{n,m} on G = GL2 x_det GL2 against f_{n,m} = f_n x f_m."""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import SPLIT, GammaInvariants
from .qrat import QRat, q, qpow
from .sl2 import fixed_set_counts_sl2

UNIPOTENT_G = ("(0,0)", "(1,0)", "(0,1)", "(1,1)", "(1,u)", "(1,pi)", "(u,pi)")
MERGE = {
    "(0,0)": "(0,0)",
    "(1,0)": "(1,0)",
    "(0,1)": "(0,1)",
    "(1,1)": "(1,1)",
    "(1,u)": "(1,1)",
    "(1,pi)": "(1,pi)",
    "(u,pi)": "(1,pi)",
}
GERM_BASIS = ("(0,0)", "(1,0)", "(0,1)", "(1,1)", "(1,pi)")

_qi = qpow(-1)


def _check(n: int, m: int):
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")


def g_unipotent(rep: str, n: int, m: int) -> QRat:
    """Unipotent integrals; the seven orbits are first merged onto five classes."""
    _check(n, m)
    if rep not in MERGE:
        raise ValueError(f"unknown unipotent orbit {rep!r}")
    rep = MERGE[rep]
    if rep == "(0,0)":
        return QRat(1 if n == m == 0 else 0)
    if rep == "(0,1)":
        n, m = m, n
        rep = "(1,0)"
    if rep == "(1,0)":
        if m:
            return QRat(0)
        return 1 / (1 - _qi) if n == 0 else qpow(n)
    even = (n + m) % 2 == 0
    d2 = (1 - qpow(-2)) ** 2
    if rep == "(1,1)":
        if n == m == 0:
            return (1 + qpow(-2)) / d2
        if n and m:
            return qpow(n + m) if even else QRat(0)
        return qpow(n + m) / (1 - qpow(-2)) * (1 if even else _qi)
    # (1,pi)
    if n == m == 0:
        return 2 * _qi / d2
    if n and m:
        return QRat(0) if even else qpow(n + m)
    return qpow(n + m) / (1 - qpow(-2)) * (_qi if even else 1)


def g_hyperbolic(d1: int, d2: int, n: int, m: int) -> QRat:
    _check(n, m)
    if d1 < 0 or d2 < 0:
        raise ValueError("depths must be nonnegative")
    zeros = (n == 0) + (m == 0)
    return qpow(n + m + d1 + d2) * (1 - _qi) ** (2 - zeros)


# ---------------------------------------------------------------------------
# elliptic pairs


@dataclass(frozen=True)
class YCounts:
    Y_mono: QRat
    Y_bi: QRat
    Sigma_X: QRat
    X1: QRat
    X2: QRat


@dataclass(frozen=True)
class EllipticPairConfig:
    """Two elliptic factors.  ``pair_parity`` says whether the fixed centers
    share a color; if omitted it is read off the center colors."""

    inv1: GammaInvariants
    inv2: GammaInvariants
    pair_parity: str | None = None

    def __post_init__(self):
        if not (self.inv1.elliptic and self.inv2.elliptic):
            raise ValueError("both factors must be elliptic")
        if self.pair_parity not in (None, "monochrome", "bichrome"):
            raise ValueError(f"unknown pair parity {self.pair_parity!r}")
        if self.pair_parity and self.inv1.center_color and self.inv2.center_color:
            if self.pair_parity != self._color_parity():
                raise ValueError("pair_parity contradicts the center colors")

    def _color_parity(self) -> str:
        c1 = self.inv1.center_color or "black"
        c2 = self.inv2.center_color or "black"
        return "monochrome" if c1 == c2 else "bichrome"

    @property
    def parity(self) -> str:
        return self.pair_parity or self._color_parity()

    def flipped(self) -> "EllipticPairConfig":
        other = "bichrome" if self.parity == "monochrome" else "monochrome"
        return EllipticPairConfig(_plain(self.inv1), _plain(self.inv2), other)


def _plain(inv: GammaInvariants) -> GammaInvariants:
    """Drop the center color (counts then assume a black center)."""
    return GammaInvariants(inv.klass, inv.depth)


def y_counts(cfg: EllipticPairConfig) -> YCounts:
    b1, w1 = fixed_set_counts_sl2(_plain(cfg.inv1))
    b2, w2 = fixed_set_counts_sl2(_plain(cfg.inv2))
    # centers normalized to black; a bichrome pair recolors the second factor
    if cfg.parity == "bichrome":
        b2, w2 = w2, b2
    return YCounts(b1 * b2 + w1 * w2, b1 * w2 + w1 * b2, b1 + w1 + b2 + w2, b1 + w1, b2 + w2)


def g_elliptic(cfg: EllipticPairConfig, n: int, m: int) -> QRat:
    _check(n, m)
    Y = y_counts(cfg)
    Ym, Yb, S = Y.Y_mono, Y.Y_bi, Y.Sigma_X
    if n == m == 0:
        return Ym
    if n and m:
        if (n - m) % 2 == 0:
            return qpow(n + m - 2) * (q**2 * Ym + q * (S - 2 * Yb) + Ym - S + 2)
        return qpow(n + m - 2) * (q**2 * Yb + q * (S - 2 * Ym) + Yb - S + 2)
    if n == 0:
        if m % 2 == 0:
            return qpow(m - 1) * (q * Ym - Yb + Y.X1)
        return qpow(m - 1) * (q * Yb - Ym + Y.X1)
    return g_elliptic(EllipticPairConfig(cfg.inv2, cfg.inv1, cfg.pair_parity), m, n)


def g_mixed(d1: int, inv2: GammaInvariants, n: int, m: int) -> QRat:
    """First factor hyperbolic of depth d1, second elliptic."""
    _check(n, m)
    if not inv2.elliptic:
        raise ValueError("second factor must be elliptic")
    X2 = sum(fixed_set_counts_sl2(_plain(inv2)), QRat(0))
    if m == 0:
        f = X2
    else:
        f = (1 - _qi) * X2 + 2 * _qi
    if n:
        f = f * (1 - _qi)
    return qpow(d1 + n + m) * f


# ---------------------------------------------------------------------------
# germs


@dataclass(frozen=True)
class ShalikaExpansionG:
    A: QRat
    B: QRat
    C: QRat
    D: QRat
    E: QRat

    def evaluate(self, n: int, m: int) -> QRat:
        coeffs = (self.A, self.B, self.C, self.D, self.E)
        return sum((c * g_unipotent(r, n, m) for c, r in zip(coeffs, GERM_BASIS)), QRat(0))

    def as_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D, "E": self.E}


def g_shalika(case: str, data) -> ShalikaExpansionG:
    """``hyperbolic``: data = (d1, d2); ``elliptic``: an EllipticPairConfig;
    ``mixed``: data = (d1, inv2)."""
    zero = QRat(0)
    if case == "hyperbolic":
        d1, d2 = data
        D = qpow(d1 + d2) * (1 - _qi) ** 2
        return ShalikaExpansionG(zero, zero, zero, D, D)
    if case == "elliptic":
        Y = y_counts(data)
        Ym, Yb, S = Y.Y_mono, Y.Y_bi, Y.Sigma_X
        A = 2 / (1 - q) ** 2
        B = 2 * _qi / (1 - q) - _qi * Y.X1
        C = 2 * _qi / (1 - q) - _qi * Y.X2
        D = qpow(-2) * ((1 + q**2) * Ym + (q - 1) * S - 2 * q * Yb + 2)
        E = qpow(-2) * ((1 + q**2) * Yb + (q - 1) * S - 2 * q * Ym + 2)
        return ShalikaExpansionG(A, B, C, D, E)
    if case == "mixed":
        d1, inv2 = data
        X2 = sum(fixed_set_counts_sl2(_plain(inv2)), QRat(0))
        B = -2 * qpow(d1 - 1)
        D = qpow(d1) * (1 - _qi) * ((1 - _qi) * X2 + 2 * _qi)
        return ShalikaExpansionG(zero, B, zero, D, D)
    raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# stable integrals


def g_stable(config, n: int, m: int) -> QRat:
    """Sum of the integrals of all rational orbits in the stable orbit.

    ``config`` is ``("unipotent", rep)``, ``("hyperbolic", d1, d2)``,
    ``("mixed", d1, inv2)`` or an :class:`EllipticPairConfig`.
    """
    if isinstance(config, EllipticPairConfig):
        # each rational orbit is a union of SL2 x SL2 orbits; all four color
        # combinations occur in the stable orbit, split by pair parity
        parts = [EllipticPairConfig(_plain(config.inv1), _plain(config.inv2), p) for p in ("monochrome", "bichrome")]
        return sum((g_elliptic(c, n, m) for c in parts), QRat(0))
    kind = config[0]
    if kind == "unipotent":
        rep = MERGE[config[1]]
        if rep in ("(1,1)", "(1,pi)"):
            return g_unipotent("(1,1)", n, m) + g_unipotent("(1,pi)", n, m)
        return g_unipotent(rep, n, m)
    if kind == "hyperbolic":
        return g_hyperbolic(config[1], config[2], n, m)
    if kind == "mixed":
        return g_mixed(config[1], config[2], n, m)
    raise ValueError(f"unknown configuration {config!r}")


def gl2_value(inv: GammaInvariants, n: int) -> QRat:
    """The GL2 orbital integral against f_n, from the fixed-set geometry."""
    if inv.klass == SPLIT:
        d = inv.depth.as_int()
        return qpow(d) if n == 0 else qpow(n + d) * (1 - _qi)
    X = sum(fixed_set_counts_sl2(_plain(inv)), QRat(0))
    return X if n == 0 else qpow(n - 1) * ((q - 1) * X + 2)
