"""Equivalued elliptic orbital integrals on gsp_4 at vertices of type 1, 3 and 4.

Two independent routes are provided: the closed-form theorems, and a direct
sum over Cartan cells lambda = (k, l) of q^{d_lambda} |S_lambda(X)|.  They
share no code, so :func:`discrepancy_report` is a genuine comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qrat import QRat, q, qpow

TYPES = ("T1", "T3", "T4")


@dataclass(frozen=True)
class VertexType:
    tag: str

    def __post_init__(self):
        tag = str(self.tag).upper()
        if not tag.startswith("T"):
            tag = "T" + tag
        if tag == "T2":
            raise ValueError("vertex type 2 carries no equivalued elliptic elements")
        if tag not in TYPES:
            raise ValueError(f"unknown vertex type {self.tag!r}")
        object.__setattr__(self, "tag", tag)


def _vt(vt) -> VertexType:
    return vt if isinstance(vt, VertexType) else VertexType(vt)


@dataclass(frozen=True)
class RegionCell:
    k: int
    l: int
    case: str
    parabolic: str
    d_lambda: int
    springer_count: QRat


# ---------------------------------------------------------------------------
# region enumeration


def _t1_case(k, l, n):
    if not (0 <= k <= n and 0 <= l <= n):
        return None
    if 2 * k + l <= n:
        return "(i)"
    if k + l <= n:
        return "(ii)"
    return "(iii)"


def _t1_parabolic(k, l):
    if k == l == 0:
        return "full"
    if l == 0:
        return "klingen"
    if k == 0:
        return "siegel"
    return "borel"


def _t3_case(k, l, n):
    if 0 <= l <= n - 1 and -l <= 2 * k <= n - l:
        return "(i)"
    return None


def _t4_case(k, l, n):
    if k < 0:
        return None
    if n - l - 2 * k >= 0 and n + 1 + l >= 0:
        return "(i)"
    if n - l - 2 * k < 0 and n - l - k >= 0 and n + 1 + l >= 0:
        return "(ii)"
    if n + 1 + l < 0 and n + 1 + l + k >= 0 and n - l - 2 * k >= 0:
        return "(iii)"
    return None


def _case(vt: str, k, l, n):
    return {"T1": _t1_case, "T3": _t3_case, "T4": _t4_case}[vt](k, l, n)


def _parabolic(vt: str, k, l):
    if vt == "T1":
        return _t1_parabolic(k, l)
    if vt == "T3":
        return "BxGL2" if l + 2 * k == 0 else "BxB"
    return "GL2xGL1" if k == 0 else "BorelT4"


def _box(vt: str, n: int):
    """A box of (k, l) containing the region."""
    if vt == "T1":
        return range(0, n + 1), range(0, n + 1)
    if vt == "T3":
        return range(-n, n + 1), range(0, max(n, 0))
    return range(0, 2 * n + 2), range(-3 * n - 3, n + 1)


def _dimension(vt: str, k, l, n) -> int:
    if vt == "T1":
        return k + l + min(n, l + k) + min(n, l + 2 * k)
    if vt == "T3":
        return min(l + 1, n) + min(abs(k - 1), n) + min(abs(l + 2 * k), n) + min(abs(l + k), n)
    return (
        min(max(l, -l - 1), n)
        + min(k, n + 1)
        + min(max(l + 2 * k, -l - 2 * k - 1), n)
        + min(max(l + k, -l - k - 1), n)
    )


# |S_lambda/P_lambda| and |Z \ P_lambda| per (type, case, parabolic)
_SP4 = qpow(4) * (q**2 - 1) * (q**4 - 1)


def _point_factors(vt: str, case: str, parabolic: str) -> tuple[QRat, QRat]:
    if vt == "T1":
        if case == "(i)":
            return QRat(1), _SP4
        if case == "(ii)" and parabolic == "klingen":
            return (q + 1) ** 2, qpow(4) * (q**2 - 1) * (q - 1)
        if case == "(ii)":
            return (q + 1) ** 3, qpow(4) * (q - 1) ** 2
        return (q + 1) ** 2, qpow(4) * (q - 1) ** 2
    if vt == "T3":
        return QRat(1), q**2 * (q**2 - 1) ** 2
    if case == "(i)":
        return QRat(1), q * (q + 1) * (q - 1) ** 2
    return QRat(2), q * (q - 1) ** 2


def region_cells(vt, n: int) -> list[RegionCell]:
    vt = _vt(vt).tag
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    ks, ls = _box(vt, n)
    for k in ks:
        for l in ls:
            case = _case(vt, k, l, n)
            if case is None:
                continue
            par = _parabolic(vt, k, l)
            flags, par_size = _point_factors(vt, case, par)
            out.append(RegionCell(k, l, case, par, _dimension(vt, k, l, n), flags * par_size))
    return out


def cell_dimension(vt, cell: RegionCell, n: int) -> int:
    vt = _vt(vt).tag
    if _case(vt, cell.k, cell.l, n) is None:
        raise ValueError(f"cell ({cell.k}, {cell.l}) is outside the {vt} region for n={n}")
    return _dimension(vt, cell.k, cell.l, n)


def cell_point_count(vt, cell: RegionCell) -> QRat:
    flags, par_size = _point_factors(_vt(vt).tag, cell.case, cell.parabolic)
    return flags * par_size


def orbital_region_sum(vt, n: int) -> QRat:
    vt = _vt(vt)
    return sum((qpow(c.d_lambda) * cell_point_count(vt, c) for c in region_cells(vt, n)), QRat(0))


# ---------------------------------------------------------------------------
# closed forms


def orbital_closed_form(vt, n: int) -> QRat:
    vt = _vt(vt).tag
    if n < 0:
        raise ValueError("n must be nonnegative")
    x2, x3, x4 = qpow(2 * n), qpow(3 * n), qpow(4 * n)
    cyc = 1 + q + q**2
    if vt == "T1":
        if n % 2 == 0:
            B = q**2 * (2 - q) * cyc
        else:
            B = q * (1 - q + 2 * q**2 - q**3) * cyc
        C1 = q**2 * (q**5 - 4 * q**2 - 4 * q - 3)
        C2 = q * (q**2 - 1) * (q**3 - 1)
        D = q**2 * (1 + q) * cyc
        return qpow(4) * (q**2 - 1) / (q**3 - 1) * (1 + B * x2 + (C1 + n * C2) * x3 + D * x4)
    if vt == "T3":
        return qpow(4) * (q + 1) / cyc * (1 - cyc * x2 + q * (1 + q) * x3)
    B = q * (q - 2) * cyc
    C = q**2 * (q**3 - 3 * q**2 - 4 * q - 4)
    D = 2 * q**3 * cyc
    return 2 * q / (q**3 - 1) * (1 - B * x2 + C * x3 + D * x4)


def t3_factored(n: int) -> QRat:
    """The T3 closed form before expansion, as a product of three factors."""
    return qpow(4) * (q + 1) / (q**2 + q + 1) * (qpow(n) - 1) * (qpow(n + 1) - 1) * (1 + qpow(n) + qpow(n + 1))


def t3_partial_sum(n: int) -> QRat:
    """Closed value of sum_lambda q^{d_lambda} for type 3."""
    return q**2 * (1 - qpow(n)) * (1 - qpow(n + 1)) * (1 + qpow(n) + qpow(n + 1)) / ((1 - q**2) * (1 - q**3))


def t4_partial_sums(n: int) -> dict[str, QRat]:
    """The stated per-case sums of q^{d_lambda} for type 4 (archived, not trusted)."""
    i = 2 * (1 - qpow(2 + 2 * n) - qpow(3 + 2 * n) + qpow(4 + 2 * n) + qpow(4 + 3 * n) + qpow(5 + 3 * n)) / (
        (1 - q**2) * (1 - q**3)
    )
    ii = qpow(1 + 2 * n) * (1 - qpow(1 + n)) ** 2 / (1 - q) ** 2
    return {"(i)": i, "(ii)": ii, "(iii)": ii}


# ---------------------------------------------------------------------------
# type 3 comparison with the distinguished subgroup


def orbh_type3(n: int) -> QRat:
    return 2 * (qpow(n) - 1) * (qpow(n + 1) - 1) / (q - 1) ** 2


def orbh_type4(n: int) -> QRat:
    return (qpow(n + 1) - 1) ** 2 / (q - 1) ** 2


def type3_comparison(n: int, normalized: bool = False) -> QRat:
    """Orb_g / Orb_h for type 3; ``normalized`` drops the measure constant."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        raise ZeroDivisionError("Orb_h vanishes at n = 0: the ratio is undefined")
    if normalized:
        return 1 + qpow(n) + qpow(n + 1)
    return (1 + qpow(n) + qpow(n + 1)) * (q**2 - 1) * (q - 1) * qpow(4) / (2 * (1 + q + q**2))


def discrepancy_report(vt, n_max: int, n_min: int = 0) -> list[tuple[int, QRat]]:
    return [(n, orbital_closed_form(vt, n) - orbital_region_sum(vt, n)) for n in range(n_min, n_max + 1)]
