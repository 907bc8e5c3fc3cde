"""Weyl discriminants and parabolic descent factors, with the Ext heuristic for elliptic curves.

Everything is exact: discriminants of pairs of quadratic characters go
through resultants, so irrational eigenvalues never appear.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from sympy import Poly, Rational as SymRational, resultant, symbols

from .invariants import val_p
from .qrat import QRat, qpow

_x = symbols("x")


class NonRegularError(ValueError):
    """A root of the discriminant vanishes."""


def _frac(v) -> Fraction:
    if isinstance(v, SymRational) or hasattr(v, "p"):
        return Fraction(int(v.p), int(v.q))
    return Fraction(v)


def quad_resultant(T1, N1, T2, N2) -> Fraction:
    """Res(x^2 - T1 x + N1, x^2 - T2 x + N2) = prod (a_i - b_j)."""
    f = Poly(_x**2 - SymRational(str(Fraction(T1))) * _x + SymRational(str(Fraction(N1))), _x)
    g = Poly(_x**2 - SymRational(str(Fraction(T2))) * _x + SymRational(str(Fraction(N2))), _x)
    return _frac(resultant(f, g))


def _as_poly(t, lam: Fraction, mode: str) -> tuple[Fraction, Fraction]:
    """(trace, norm) of the quadratic whose roots are t and its partner."""
    if isinstance(t, tuple):
        T, N = map(Fraction, t)
        if mode == "group" and N != lam:
            raise ValueError("a GSp factor has determinant lambda")
        if mode == "lie" and T != lam:
            raise ValueError("a gsp factor has trace lambda")
        return T, N
    t = Fraction(t)
    if mode == "group":
        if t == 0:
            raise ValueError("eigenvalues must be nonzero")
        return t + lam / t, lam
    return lam, t * (lam - t)


def weyl_disc_pair(t1, t2, lam=1, mode: str = "group") -> Fraction:
    """D(gamma) for gamma = (gamma_1, gamma_2).

    ``t_i`` is an eigenvalue (a rational) or a ``(trace, norm)`` pair.
    ``mode="group"``: eigenvalues t_i, lam/t_i and
    D = (t1-t2)^2 (lam-t1 t2)^2 / (lam t1^2 t2^2).
    ``mode="lie"``: eigenvalues t_i, lam - t_i and D = (t1-t2)^2 (lam-t1-t2)^2.
    """
    lam = Fraction(lam)
    if mode not in ("group", "lie"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "group" and lam == 0:
        raise ValueError("lambda must be nonzero")
    if not isinstance(t1, tuple) and not isinstance(t2, tuple):
        a, b = Fraction(t1), Fraction(t2)
        if mode == "group":
            if a == 0 or b == 0:
                raise ValueError("eigenvalues must be nonzero")
            D = (a - b) ** 2 * (lam - a * b) ** 2 / (lam * a * a * b * b)
        else:
            D = (a - b) ** 2 * (lam - a - b) ** 2
    else:
        T1, N1 = _as_poly(t1, lam, mode)
        T2, N2 = _as_poly(t2, lam, mode)
        res = quad_resultant(T1, N1, T2, N2)
        D = res / lam**2 if mode == "group" else res
    if D == 0:
        raise NonRegularError("gamma is not regular: a discriminant factor vanishes")
    return D


@dataclass(frozen=True)
class ManyDisc:
    D: Fraction  # exact D(gamma)
    abs_D: Fraction  # archimedean |D(gamma)|
    resultants: tuple[Fraction, ...]  # Res of each pair i < j
    valuation: int | None  # val_p(D) at the requested prime


def weyl_disc_many(traces, q_size: int, prime: int | None = None, mode: str = "group") -> ManyDisc:
    """D(gamma) for n factors with characteristic polynomials x^2 - T_i x + q_size."""
    traces = list(traces)
    if len(traces) < 2:
        raise ValueError("need at least two factors")
    if len(set(traces)) != len(traces):
        raise ValueError("repeated characteristic polynomial")
    lam = Fraction(q_size)
    D = Fraction(1)
    res = []
    for Ti, Tj in combinations(traces, 2):
        r = quad_resultant(Ti, lam, Tj, lam)
        res.append(r)
        D *= weyl_disc_pair((Fraction(Ti), lam), (Fraction(Tj), lam), lam, mode)
    v = None if prime is None else (val_p(D, prime) if D else None)
    return ManyDisc(D, abs(D), tuple(res), v)


# ---------------------------------------------------------------------------
# descent factors


@dataclass(frozen=True)
class QPower:
    """q ** exponent with a possibly fractional exponent."""

    exponent: Fraction

    def squared(self) -> QRat:
        e = 2 * self.exponent
        if e.denominator != 1:
            raise ValueError("square is still not an integral power")
        return qpow(int(e))

    def value(self) -> QRat:
        if self.exponent.denominator != 1:
            raise ValueError("fractional power of q is not a rational function")
        return qpow(int(self.exponent))

    def __str__(self):
        return f"q^({self.exponent})"


def levi_exponent(a) -> int:
    """Total varpi-exponent sum_{i<j} (3 a_i - a_j - lambda) with lambda = a_1."""
    a = list(a)
    if len(a) < 2:
        raise ValueError("a Cartan word needs n >= 2 entries")
    lam = a[0]
    return sum(3 * a[i] - a[j] - lam for i, j in combinations(range(len(a)), 2))


def descent_factor(kind: str, params) -> QPower:
    """|delta ratio|^{1/2} as a power of q (|varpi| = 1/q).

    ``special``: params = n, giving q^{-n(n-1)/4};
    ``levi-ratio``: params = the Cartan word a.
    """
    if kind == "special":
        n = int(params)
        if n < 2:
            raise ValueError("n must be at least 2")
        return QPower(Fraction(-n * (n - 1), 4))
    if kind == "levi-ratio":
        return QPower(Fraction(-levi_exponent(params), 2))
    raise ValueError(f"unknown descent kind {kind!r}")


# ---------------------------------------------------------------------------
# elliptic curves over F_p


@dataclass(frozen=True)
class FrobeniusPair:
    T1: int
    T2: int
    q_size: int

    def __post_init__(self):
        for T in (self.T1, self.T2):
            if T * T > 4 * self.q_size:
                warnings.warn(f"trace {T} violates the Weil bound for q={self.q_size}", stacklevel=3)


def ext_count(pair: FrobeniusPair) -> Fraction:
    """|Ext^1(E1, E2)| = q prod_{i,j} (1 - a_i/b_j) = Res(f1, f2)/q."""
    if pair.T1 == pair.T2:
        raise ValueError("isogenous curves (equal traces)")
    return quad_resultant(pair.T1, pair.q_size, pair.T2, pair.q_size) / pair.q_size


@dataclass(frozen=True)
class IsogenyRatio:
    squared: Fraction  # exact |I~/I|^2
    approx: float
    ext_over_p: Fraction | None  # n = 2 only: the right side of the heuristic identity


def isogeny_ratio(data, p: int | None = None) -> IsogenyRatio:
    """|D(gamma)|_inf^{1/2} p^{-n(n-1)/4} for a FrobeniusPair or a list of traces."""
    if isinstance(data, FrobeniusPair):
        traces, p = [data.T1, data.T2], data.q_size
    else:
        traces = list(data)
        if p is None:
            raise ValueError("p is required with a list of traces")
    n = len(traces)
    many = weyl_disc_many(traces, p)
    sq = many.abs_D / Fraction(p) ** (n * (n - 1) // 2)
    ext_p = ext_count(FrobeniusPair(traces[0], traces[1], p)) / p if n == 2 else None
    return IsogenyRatio(sq, math.sqrt(sq), ext_p)
