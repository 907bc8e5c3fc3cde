"""Closed-form vertex counts on the (q+1)-regular tree.

Every function returns a :class:`QRat` in ``q``.  Radii and distances that
may be half-integers are passed as anything :meth:`HalfInt.of` accepts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .halfint import HalfInt
from .qrat import QRat, q, qpow

VERTEX, MIDPOINT = "vertex", "midpoint"


class DivergentError(ValueError):
    """The counted set is infinite."""


def _geom(i: int) -> QRat:
    """(q^i - 1)/(q - 1) = 1 + q + ... + q^{i-1}."""
    return sum((qpow(j) for j in range(i)), QRat(0))


@dataclass(frozen=True)
class BallSpec:
    center_kind: str
    radius: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "radius", HalfInt.of(self.radius))
        if self.center_kind not in (VERTEX, MIDPOINT):
            raise ValueError(f"unknown center kind {self.center_kind!r}")


@dataclass(frozen=True)
class IntersectionRegime:
    tag: str  # empty | ball | containment | tube
    params: dict = field(default_factory=dict, compare=False)


def vertex_ball(i: int) -> QRat:
    if i < 0:
        raise ValueError("negative radius")
    return 1 + (q + 1) * _geom(i)


def midpoint_ball(i: int) -> QRat:
    """Vertices within i - 1/2 of an edge midpoint."""
    if i < 0:
        raise ValueError("negative radius")
    return 2 * _geom(i)


def ball_count(spec: BallSpec) -> QRat:
    """Vertices within ``spec.radius`` of a vertex or of an edge midpoint.

    For a midpoint the relevant integer is the reach ``i = floor(radius + 1/2)``:
    the ball holds every vertex at distance at most ``i - 1/2``.
    """
    r = spec.radius
    if r < 0:
        raise ValueError("negative radius")
    if spec.center_kind == VERTEX:
        return vertex_ball(r.floor())
    return midpoint_ball((r + HalfInt(1)).floor())


def ball_out_of_apartment(i: int) -> QRat:
    if i < 0:
        raise ValueError("negative radius")
    return qpow(i)


def sphere_from_convex(n: int, V: int) -> QRat:
    if n < 1:
        raise ValueError("n must be positive; count the set itself for n = 0")
    if V < 1:
        raise ValueError("the convex set must be nonempty")
    return qpow(n - 1) * ((q - 1) * V + 2)


def colored_sphere_from_convex(n: int, V_black: int, V_white: int, want: str = "black") -> QRat:
    """Vertices of color ``want`` at distance exactly ``n`` from a connected set."""
    if n < 1:
        raise ValueError("n must be positive")
    if V_black + V_white < 1:
        raise ValueError("the convex set must be nonempty")
    if want == "white":
        V_black, V_white = V_white, V_black
    elif want != "black":
        raise ValueError(f"unknown color {want!r}")
    same, other = (V_black, V_white) if n % 2 == 0 else (V_white, V_black)
    return qpow(n - 1) * (q * same - other + 1)


def _other_kind(kind: str, delta: HalfInt) -> str:
    if delta.is_integer:
        return kind
    return MIDPOINT if kind == VERTEX else VERTEX


def _snap(radius: HalfInt, kind: str) -> HalfInt:
    """Largest distance <= radius actually realized from a center of this kind."""
    if kind == VERTEX:
        return HalfInt.of(radius.floor())
    t = radius.twice_value
    return HalfInt(t if t % 2 else t - 1)


def ball_ball_intersection(alpha, beta, delta, kind1: str = VERTEX):
    """|B_alpha(x) ∩ B_beta(y)| with d(x, y) = delta.

    ``kind1`` is the kind of ``x``; the kind of ``y`` follows from the parity
    of ``delta``.  Radii are first snapped to the distances realized from
    their centers.  Returns ``(IntersectionRegime, QRat)``.
    """
    a, b, d = HalfInt.of(alpha), HalfInt.of(beta), HalfInt.of(delta)
    if a < 0 or b < 0 or d < 0:
        raise ValueError("radii and distance must be nonnegative")
    if kind1 not in (VERTEX, MIDPOINT):
        raise ValueError(f"unknown center kind {kind1!r}")
    kind2 = _other_kind(kind1, d)
    a, b = _snap(a, kind1), _snap(b, kind2)
    if a < 0 or b < 0:
        return IntersectionRegime("empty"), QRat(0)
    if a + b < d:
        return IntersectionRegime("empty"), QRat(0)
    if abs(a - b) <= d:
        # interpolated center c on [x, y]; 2 d(x, c) = a - b + d is an integer
        xc = HalfInt((a - b + d).twice_value // 2)
        rho = HalfInt((a + b - d).twice_value // 2)
        kind = kind1 if xc.is_integer else _other_kind(kind1, HalfInt(1))
        return (
            IntersectionRegime("ball", {"center": kind, "from_x": xc, "radius": rho}),
            ball_count(BallSpec(kind, rho)),
        )
    if d <= b - a:
        return IntersectionRegime("containment", {"inside": "x"}), ball_count(BallSpec(kind1, a))
    return IntersectionRegime("containment", {"inside": "y"}), ball_count(BallSpec(kind2, b))


def tube_ball_count(alpha: int, beta, delta, center_kind: str = VERTEX) -> QRat:
    """|T_alpha(A) ∩ B_beta(v)| where d(v, A) = delta."""
    b, d = HalfInt.of(beta), HalfInt.of(delta)
    if alpha < 0 or b < 0 or d < 0:
        raise ValueError("radii and distance must be nonnegative")
    if center_kind == VERTEX:
        if not (b.is_integer and d.is_integer):
            raise ValueError("a vertex center needs integer radius and distance")
    elif center_kind == MIDPOINT:
        if b.is_integer:
            raise ValueError("a midpoint center needs a half-integer radius")
        if d.is_integer and d != 0:
            raise ValueError("a midpoint lies at half-integer distance from A, or on it")
        if d == 0 and b < alpha:
            raise ValueError("midpoint on the geodesic with beta < alpha is not covered")
    else:
        raise ValueError(f"unknown center kind {center_kind!r}")
    if HalfInt.of(alpha) + b < d:
        return QRat(0)
    if d <= b - alpha:
        m = b - alpha - d  # a half-integer only for a midpoint on A
        return (1 + m.twice_value) * qpow(alpha) + 2 * _geom(alpha)
    # a0 is the vertex of A nearest to v
    return ball_ball_intersection(alpha, b, d, VERTEX)[1]


def tube_tube_count(alpha: int, beta: int, delta: int, r: int = 0, shared_ray: bool = False) -> QRat:
    """|T_alpha(A) ∩ T_beta(B)|.

    Disjoint geodesics at distance ``delta > 0`` (``r = 0``) or geodesics
    meeting in ``r >= 1`` consecutive vertices (``delta = 0``).
    """
    if shared_ray:
        raise DivergentError("geodesics sharing a ray have an infinite tube intersection")
    if min(alpha, beta, delta, r) < 0:
        raise ValueError("parameters must be nonnegative")
    lo = min(alpha, beta)
    if delta == 0:
        if r < 1:
            raise ValueError("touching geodesics need r >= 1")
        return (r + 2 * abs(alpha - beta)) * qpow(lo) + 2 * _geom(lo)
    if r:
        raise ValueError("disjoint geodesics have no common vertices")
    if alpha + beta < delta:
        return QRat(0)
    if abs(alpha - beta) <= delta:
        s = alpha + beta - delta
        return vertex_ball(s // 2) if s % 2 == 0 else midpoint_ball((s + 1) // 2)
    return (1 + 2 * (abs(alpha - beta) - delta)) * qpow(lo) + 2 * _geom(lo)


def chi(d: int, base_parity: str = "black", color_filter: str = "any") -> QRat:
    """Vertices at distance d from x whose nearest apartment vertex is x."""
    if d < 0:
        raise ValueError("negative distance")
    if color_filter not in ("any", "black", "white"):
        raise ValueError(f"unknown color filter {color_filter!r}")
    if color_filter != "any":
        color = base_parity if d % 2 == 0 else ("white" if base_parity == "black" else "black")
        if color != color_filter:
            return QRat(0)
    return QRat(1) if d == 0 else qpow(d - 1) * (q - 1)
