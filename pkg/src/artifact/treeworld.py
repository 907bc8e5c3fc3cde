"""Brute-force oracle on finite truncations of the (q+1)-regular tree.

A :class:`TruncatedTree` is the ball of radius ``depth`` around a root in
the infinite (q+1)-regular tree, 2-colored by distance parity.  A layout
embeds named geodesics (apartments) and named centers (vertices or edge
midpoints) near the root.  Queries describe vertex sets built from balls,
tubes, projection feet, spheres and intersections; :func:`oracle_count`
counts them by plain BFS.

Distances from midpoints are half-integers, handled internally in units
of 1/2 ("twice distances").
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .halfint import HalfInt

BLACK, WHITE, ANY = "black", "white", "any"


class LayoutError(ValueError):
    """Layout cannot be realized inside the requested truncation."""


class DepthError(LayoutError):
    """Layout is valid but needs a deeper truncation."""


class BoundaryError(RuntimeError):
    """Query might reach the truncation boundary; rebuild deeper."""


class InfiniteQueryError(RuntimeError):
    """Queried vertex set is infinite."""


# ---------------------------------------------------------------------------
# points and layouts


@dataclass(frozen=True)
class Point:
    """A vertex ``(u,)`` or the midpoint of edge ``(u, v)``."""

    ends: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "vertex" if len(self.ends) == 1 else "midpoint"


@dataclass(frozen=True)
class SingleGeodesic:
    pass


@dataclass(frozen=True)
class GeodesicWithPoint:
    """Geodesic ``A`` and a center ``v`` at distance ``delta`` from it.

    A midpoint at ``delta = 0`` is the midpoint of an edge of ``A``.
    """

    delta: HalfInt
    kind: str = "vertex"


@dataclass(frozen=True)
class TwoGeodesics:
    """Geodesics ``A`` and ``B``.

    ``delta > 0``: disjoint, joined by a bridge of that length.
    ``delta == 0``: they share exactly ``r`` consecutive vertices, unless
    ``shared_ray`` (they agree on a ray) or ``equal``.
    """

    delta: int = 0
    r: int = 0
    shared_ray: bool = False
    equal: bool = False


@dataclass(frozen=True)
class TwoCenters:
    """Centers ``c1`` and ``c2`` (vertex or midpoint) at distance ``delta``."""

    delta: HalfInt
    kind1: str = "vertex"
    kind2: str = "vertex"


Layout = Union[SingleGeodesic, GeodesicWithPoint, TwoGeodesics, TwoCenters]


# ---------------------------------------------------------------------------
# query shapes


@dataclass(frozen=True)
class Ball:
    center: str
    radius: HalfInt


@dataclass(frozen=True)
class Tube:
    geodesic: str
    radius: int


@dataclass(frozen=True)
class Foot:
    """Vertices whose nearest vertex on ``geodesic`` has a coordinate in ``coords``."""

    geodesic: str
    coords: tuple[int, ...] = (0,)


@dataclass(frozen=True)
class Sphere:
    """Vertices at distance exactly ``n`` from the vertex set ``base``."""

    n: int
    base: "Shape"


@dataclass(frozen=True)
class Inter:
    a: "Shape"
    b: "Shape"


Shape = Union[Ball, Tube, Foot, Sphere, Inter]


@dataclass(frozen=True)
class OracleQuery:
    shape: Shape
    color_filter: str = ANY


# ---------------------------------------------------------------------------
# the tree


@dataclass
class TruncatedTree:
    q: int
    depth: int
    adj: list[list[int]]
    dist_root: list[int]
    color: list[str]
    geodesics: dict[str, dict[int, int]] = field(default_factory=dict)  # vertex -> coordinate
    points: dict[str, Point] = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.adj)

    def is_boundary(self, v: int) -> bool:
        return self.dist_root[v] == self.depth

    def geodesic_vertex(self, name: str, coord: int) -> int:
        for v, c in self.geodesics[name].items():
            if c == coord:
                return v
        raise KeyError(f"coordinate {coord} not on geodesic {name}")

    # -- cached BFS data -------------------------------------------------
    def bfs(self, sources: frozenset[int]) -> list[int]:
        key = ("bfs", sources)
        if key not in self._cache:
            dist = [-1] * len(self.adj)
            dq = deque()
            for s in sources:
                dist[s] = 0
                dq.append(s)
            while dq:
                v = dq.popleft()
                for w in self.adj[v]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        dq.append(w)
            self._cache[key] = dist
        return self._cache[key]

    def twice_dist_from_point(self, name: str) -> list[int]:
        p = self.points[name]
        if p.kind == "vertex":
            d = self.bfs(frozenset(p.ends))
            return [2 * x for x in d]
        du = self.bfs(frozenset([p.ends[0]]))
        dv = self.bfs(frozenset([p.ends[1]]))
        return [2 * min(a, b) + 1 for a, b in zip(du, dv)]

    def projection(self, name: str) -> list[int]:
        """Coordinate of the nearest geodesic vertex, for every vertex."""
        key = ("proj", name)
        if key not in self._cache:
            coords = self.geodesics[name]
            proj = [None] * len(self.adj)
            dq = deque()
            for v, c in coords.items():
                proj[v] = c
                dq.append(v)
            while dq:
                v = dq.popleft()
                for w in self.adj[v]:
                    if proj[w] is None:
                        proj[w] = proj[v]
                        dq.append(w)
            self._cache[key] = proj
        return self._cache[key]

    def point_reach(self, name: str) -> Fraction:
        p = self.points[name]
        base = min(self.dist_root[v] for v in p.ends)
        return Fraction(base) + (Fraction(1, 2) if p.kind == "midpoint" else 0)


def _grow(q: int, depth: int, root_color: str) -> TruncatedTree:
    adj: list[list[int]] = [[]]
    dist = [0]
    frontier = [0]
    for k in range(depth):
        nxt = []
        for v in frontier:
            n_children = q + 1 if v == 0 else q
            for _ in range(n_children):
                w = len(adj)
                adj.append([v])
                adj[v].append(w)
                dist.append(k + 1)
                nxt.append(w)
        frontier = nxt
    other = WHITE if root_color == BLACK else BLACK
    color = [root_color if d % 2 == 0 else other for d in dist]
    return TruncatedTree(q=q, depth=depth, adj=adj, dist_root=dist, color=color)


class _Builder:
    def __init__(self, t: TruncatedTree, rng: random.Random | None):
        self.t = t
        self.rng = rng

    def nbrs(self, v: int, exclude=()) -> list[int]:
        out = [w for w in self.t.adj[v] if w not in exclude]
        if self.rng is not None:
            self.rng.shuffle(out)
        return out

    def ray(self, prev: int, start: int, avoid: set[int]) -> list[int]:
        """Extend prev -> start away from prev until the truncation boundary."""
        path = [start]
        p, c = prev, start
        while not self.t.is_boundary(c):
            opts = [w for w in self.nbrs(c, exclude=(p,)) if w not in avoid]
            # moving away from the root keeps rays maximal
            opts.sort(key=lambda w: -self.t.dist_root[w])
            if not opts:
                break
            p, c = c, opts[0]
            path.append(c)
        return path

    def path(self, start: int, first: int, length: int, avoid: set[int]) -> list[int]:
        """Walk of ``length`` edges start -> first -> ... preferring moves away from the root."""
        out = [start]
        if length == 0:
            return out
        out.append(first)
        p, c = start, first
        for _ in range(length - 1):
            opts = [w for w in self.nbrs(c, exclude=(p,)) if w not in avoid]
            opts.sort(key=lambda w: -self.t.dist_root[w])
            if not opts or self.t.is_boundary(c):
                raise DepthError("layout does not fit in the truncation")
            p, c = c, opts[0]
            out.append(c)
        return out

    def geodesic_through(self, v: int, d1: int, d2: int, avoid: set[int]) -> list[int]:
        """Full truncated geodesic through v leaving by neighbors d1 and d2."""
        left = self.ray(v, d1, avoid | {d2})
        right = self.ray(v, d2, avoid | {d1})
        return list(reversed(left)) + [v] + right

    def register(self, name: str, path: list[int], zero: int):
        i0 = path.index(zero)
        self.t.geodesics[name] = {v: i - i0 for i, v in enumerate(path)}


def build_tree(
    q: int,
    depth: int,
    layout: Layout | None = None,
    *,
    root_color: str = BLACK,
    anchor_offset: int = 0,
    seed: int | None = None,
) -> TruncatedTree:
    """Build the truncation and embed ``layout`` around an anchor vertex.

    The anchor is the root unless ``anchor_offset`` moves it outward;
    ``seed`` shuffles neighbor choices (a relabeling of children).
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    t = _grow(q, depth, root_color)
    b = _Builder(t, random.Random(seed) if seed is not None else None)
    anchor = 0
    if anchor_offset:
        if anchor_offset >= depth:
            raise DepthError("anchor offset exceeds depth")
        anchor = b.path(0, b.nbrs(0)[0], anchor_offset, set())[-1]
    layout = layout if layout is not None else SingleGeodesic()
    try:
        _embed(b, anchor, layout)
    except IndexError as exc:  # ran out of neighbors near the boundary
        raise DepthError("layout does not fit in the truncation") from exc
    return t


def _embed(b: _Builder, anchor: int, layout: Layout) -> None:
    t = b.t
    nb = b.nbrs(anchor)
    if isinstance(layout, SingleGeodesic):
        b.register("A", b.geodesic_through(anchor, nb[0], nb[1], set()), anchor)
        t.points["x0"] = Point((anchor,))
        return

    if isinstance(layout, GeodesicWithPoint):
        delta = HalfInt.of(layout.delta)
        if layout.kind == "vertex":
            k = delta.as_int()
            if k + 1 > t.depth:
                raise DepthError("point too far for this depth")
            walk = b.path(anchor, nb[0], k, set())
            a0 = walk[-1]
            t.points["v"] = Point((anchor,))
            rest = [w for w in b.nbrs(a0) if w not in walk]
            b.register("A", b.geodesic_through(a0, rest[0], rest[1], set(walk)), a0)
        elif layout.kind == "midpoint":
            if delta == 0:
                b.register("A", b.geodesic_through(anchor, nb[0], nb[1], set()), anchor)
                geo = t.geodesics["A"]
                other = next(v for v in nb[:2] if geo[v] == 1)
                t.points["v"] = Point((anchor, other))
            else:
                if delta.is_integer:
                    raise LayoutError("a midpoint off the geodesic sits at half-integer distance")
                k = delta.floor()  # distance from the near endpoint to A
                if k + 1 > t.depth:
                    raise DepthError("point too far for this depth")
                far = nb[-1]
                walk = b.path(anchor, nb[0], k, {far})
                a0 = walk[-1]
                t.points["v"] = Point((anchor, far))
                rest = [w for w in b.nbrs(a0) if w not in walk and w != far]
                b.register("A", b.geodesic_through(a0, rest[0], rest[1], set(walk) | {far}), a0)
        else:
            raise ValueError(f"unknown center kind {layout.kind!r}")
        t.points["a0"] = Point((b.t.geodesic_vertex("A", 0),))
        return

    if isinstance(layout, TwoGeodesics):
        A = b.geodesic_through(anchor, nb[0], nb[1], set())
        b.register("A", A, anchor)
        t.points["a"] = Point((anchor,))
        if layout.equal:
            t.geodesics["B"] = dict(t.geodesics["A"])
            return
        if layout.shared_ray:
            right = A[A.index(anchor) + 1 :]
            left = b.ray(anchor, nb[2], set(A))
            b.register("B", list(reversed(left)) + [anchor] + right, anchor)
            return
        if layout.delta > 0:
            if layout.r:
                raise LayoutError("disjoint geodesics have no overlap")
            if layout.delta + 1 > t.depth:
                raise DepthError("bridge too long for this depth")
            bridge = b.path(anchor, nb[2], layout.delta, set(A))
            bv = bridge[-1]
            rest = [w for w in b.nbrs(bv) if w not in bridge]
            B = b.geodesic_through(bv, rest[0], rest[1], set(bridge))
            b.register("B", B, bv)
            t.points["b"] = Point((bv,))
            return
        r = layout.r
        if r < 1:
            raise LayoutError("touching geodesics need r >= 1 or delta > 0")
        if r == 1 and t.q < 3:
            raise LayoutError("two geodesics crossing in one vertex need q >= 3")
        coords = t.geodesics["A"]
        lo = -((r - 1) // 2)
        hi = lo + r - 1
        if max(-lo, hi) + 1 > t.depth:
            raise DepthError("overlap too long for this depth")
        seg = [v for v, c in sorted(coords.items(), key=lambda kv: kv[1]) if lo <= c <= hi]
        used = set(A)
        if r == 1:
            e = seg[0]
            extra = [w for w in b.nbrs(e) if w not in used]
            B = b.geodesic_through(e, extra[0], extra[1], used)
        else:
            el, er = seg[0], seg[-1]
            out_l = next(w for w in b.nbrs(el) if w not in used)
            out_r = next(w for w in b.nbrs(er) if w not in used)
            left = b.ray(el, out_l, used)
            right = b.ray(er, out_r, used)
            B = list(reversed(left)) + seg + right
        b.register("B", B, seg[0])
        return

    if isinstance(layout, TwoCenters):
        delta = HalfInt.of(layout.delta)
        tw = delta.twice_value
        if tw < 0:
            raise LayoutError("negative distance")
        # c1 is the anchor or the edge (anchor, nb[0]); c2 sits along nb[1].
        m1 = layout.kind1 == "midpoint"
        m2 = layout.kind2 == "midpoint"
        if m1:
            t.points["c1"] = Point((anchor, nb[0]))
        else:
            t.points["c1"] = Point((anchor,))
        if tw == 0:
            if layout.kind1 != layout.kind2:
                raise LayoutError("a vertex and a midpoint cannot coincide")
            t.points["c2"] = t.points["c1"]
            return
        # twice distance from c1 to the k-th path vertex is 2k (+1 if c1 is a midpoint);
        # a midpoint c2 adds another 1.
        off = (1 if m1 else 0) + (1 if m2 else 0)
        if (tw - off) % 2:
            raise LayoutError("distance parity does not match the center kinds")
        k = (tw - off) // 2
        if k < 0:
            raise LayoutError("distance too small for these center kinds")
        need = k + (1 if m2 else 0)
        if need + 1 > t.depth:
            raise DepthError("centers too far apart for this depth")
        walk = b.path(anchor, nb[1], need, {nb[0]} if m1 else set())
        t.points["c2"] = Point((walk[k], walk[k + 1])) if m2 else Point((walk[k],))
        return

    raise TypeError(f"unknown layout {layout!r}")


# ---------------------------------------------------------------------------
# evaluation


def _members(t: TruncatedTree, shape: Shape) -> set[int]:
    if isinstance(shape, Ball):
        lim = HalfInt.of(shape.radius).twice_value
        d2 = t.twice_dist_from_point(shape.center)
        return {v for v, x in enumerate(d2) if x <= lim}
    if isinstance(shape, Tube):
        d = t.bfs(frozenset(t.geodesics[shape.geodesic]))
        return {v for v, x in enumerate(d) if x <= shape.radius}
    if isinstance(shape, Foot):
        proj = t.projection(shape.geodesic)
        cs = set(shape.coords)
        return {v for v, c in enumerate(proj) if c in cs}
    if isinstance(shape, Sphere):
        base = _members(t, shape.base)
        if not base:
            return set()
        d = t.bfs(frozenset(base))
        return {v for v, x in enumerate(d) if x == shape.n}
    if isinstance(shape, Inter):
        return _members(t, shape.a) & _members(t, shape.b)
    raise TypeError(f"unknown shape {shape!r}")


# A bound is ("finite", R): every member is within R of the root;
# ("perp", G, r): every member is within r of geodesic G; or ("inf",).


def _bound(t: TruncatedTree, shape: Shape):
    if isinstance(shape, Ball):
        return ("finite", t.point_reach(shape.center) + HalfInt.of(shape.radius).value)
    if isinstance(shape, Tube):
        return ("perp", shape.geodesic, Fraction(shape.radius))
    if isinstance(shape, Foot):
        return ("foot", shape.geodesic, shape.coords)
    if isinstance(shape, Sphere):
        b = _bound(t, shape.base)
        if b[0] == "finite":
            return ("finite", b[1] + shape.n)
        if b[0] == "perp":
            return ("perp", b[1], b[2] + shape.n)
        return ("inf",)
    if isinstance(shape, Inter):
        return _meet(t, _bound(t, shape.a), _bound(t, shape.b))
    raise TypeError(f"unknown shape {shape!r}")


def _meet(t: TruncatedTree, x, y):
    if x[0] == "finite" and y[0] == "finite":
        return ("finite", min(x[1], y[1]))
    if x[0] == "finite":
        return x
    if y[0] == "finite":
        return y
    if x[0] == "foot" and y[0] == "perp":
        x, y = y, x
    if x[0] == "perp" and y[0] == "foot":
        if x[1] != y[1]:
            return ("inf",)
        far = max(t.dist_root[t.geodesic_vertex(y[1], c)] for c in y[2])
        return ("finite", far + x[2])
    if x[0] == "perp" and y[0] == "perp":
        if x[1] == y[1]:
            return ("perp", x[1], min(x[2], y[2]))
        return _tube_tube_bound(t, x[1], x[2], y[1], y[2])
    return ("inf",)


def _tube_tube_bound(t: TruncatedTree, g1: str, r1: Fraction, g2: str, r2: Fraction):
    s1, s2 = set(t.geodesics[g1]), set(t.geodesics[g2])
    common = s1 & s2
    if common:
        if any(t.is_boundary(v) for v in common):
            return ("inf",)
        far = max(t.dist_root[v] for v in common)
        return ("finite", far + max(r1, r2))
    d1 = t.bfs(frozenset(s1))
    bv = min(s2, key=lambda v: d1[v])
    delta = d1[bv]
    av = next(v for v in s1 if t.bfs(frozenset([bv]))[v] == delta)
    reach = min(
        t.dist_root[av] + max(r1, r2 - delta),
        t.dist_root[bv] + max(r2, r1 - delta),
    )
    return ("finite", reach)


def query_reach(tree: TruncatedTree, query: OracleQuery) -> Fraction | None:
    """Largest possible distance from the root of a member (None if unbounded)."""
    b = _bound(tree, query.shape)
    return b[1] if b[0] == "finite" else None


def boundary_guard(tree: TruncatedTree, query: OracleQuery) -> bool:
    """True iff every potential member lies strictly inside the truncation.

    For a set that is only bounded transversally to a geodesic (a tube, or
    a sphere around one) the transverse extent is what is checked.
    """
    b = _bound(tree, query.shape)
    if b[0] == "finite":
        return b[1] < tree.depth
    if b[0] == "perp":
        base = min(tree.dist_root[v] for v in tree.geodesics[b[1]])
        return base + b[2] < tree.depth
    return False


def oracle_count(tree: TruncatedTree, query: OracleQuery) -> int:
    b = _bound(tree, query.shape)
    if b[0] != "finite":
        raise InfiniteQueryError(f"{query.shape} is not a finite vertex set")
    if not b[1] < tree.depth:
        raise BoundaryError(f"reach {b[1]} does not fit inside depth {tree.depth}")
    members = _members(tree, query.shape)
    if query.color_filter == ANY:
        return len(members)
    if query.color_filter not in (BLACK, WHITE):
        raise ValueError(f"unknown color filter {query.color_filter!r}")
    return sum(1 for v in members if tree.color[v] == query.color_filter)


def count(q: int, layout: Layout | None, query: OracleQuery, **kw) -> int:
    """Build a tree just deep enough for ``query`` and count it."""
    t = _fit(q, layout, query, kw)
    return oracle_count(t, query)


_TREES: dict = {}


def _fit(q, layout, query, kw) -> TruncatedTree:
    depth = 2
    while True:
        key = (q, depth, layout, tuple(sorted(kw.items())))
        t = _TREES.get(key)
        if t is None:
            try:
                t = build_tree(q, depth, layout, **kw)
            except DepthError:
                if depth > 16:
                    raise
                depth += 1
                continue
            if len(_TREES) > 64:
                _TREES.clear()
            _TREES[key] = t
        b = _bound(t, query.shape)
        if b[0] != "finite":
            raise InfiniteQueryError(f"{query.shape} is not a finite vertex set")
        need = int(b[1]) + 1  # reach + 1, rounding a half reach down is still strict
        if need <= depth:
            return t
        depth = need
