import pytest
from hypothesis import given, settings, strategies as st

from artifact.halfint import HalfInt
from artifact import treeworld as tw

H = HalfInt.of
Q = tw.OracleQuery


def test_regular_and_colored():
    t = tw.build_tree(2, 3)
    for v in range(t.n_vertices):
        if not t.is_boundary(v):
            assert len(t.adj[v]) == 3
        for w in t.adj[v]:
            assert t.color[v] != t.color[w]


def test_overlap_layout():
    t = tw.build_tree(2, 4, tw.TwoGeodesics(r=2))
    common = set(t.geodesics["A"]) & set(t.geodesics["B"])
    assert len(common) == 2
    u, v = common
    assert v in t.adj[u]


def test_point_distance_layout():
    t = tw.build_tree(3, 3, tw.GeodesicWithPoint(H(2)))
    d = t.bfs(frozenset(t.geodesics["A"]))
    assert d[t.points["v"].ends[0]] == 2


def test_geodesics_are_paths():
    t = tw.build_tree(3, 5, tw.TwoGeodesics(delta=2))
    for g in ("A", "B"):
        coords = t.geodesics[g]
        by = sorted(coords, key=coords.get)
        for a, b in zip(by, by[1:]):
            assert b in t.adj[a]
        d0 = t.bfs(frozenset([by[0]]))
        assert all(d0[v] == coords[v] - coords[by[0]] for v in by)
    dA = t.bfs(frozenset(t.geodesics["A"]))
    assert min(dA[v] for v in t.geodesics["B"]) == 2


def test_layout_errors():
    with pytest.raises(tw.LayoutError):
        tw.build_tree(2, 2, tw.GeodesicWithPoint(H(3)))
    with pytest.raises(tw.LayoutError):
        tw.build_tree(2, 4, tw.TwoGeodesics(r=1))
    with pytest.raises(tw.LayoutError):
        tw.build_tree(2, 4, tw.TwoCenters(H(1), "vertex", "vertex"), anchor_offset=4)
    with pytest.raises(tw.LayoutError):
        tw.build_tree(2, 4, tw.TwoCenters(H("1/2"), "vertex", "vertex"))
    with pytest.raises(ValueError):
        tw.build_tree(1, 3)


def test_oracle_examples():
    assert tw.count(2, tw.TwoCenters(H(0)), Q(tw.Ball("c1", H(2)))) == 10
    assert tw.count(2, tw.TwoCenters(H(0)), Q(tw.Ball("c1", H(0)))) == 1
    mid = tw.TwoCenters(H(0), "midpoint", "midpoint")
    assert tw.count(2, mid, Q(tw.Ball("c1", H("3/2")))) == 6


def test_guard_examples():
    ball = tw.TwoCenters(H(0))
    assert tw.boundary_guard(tw.build_tree(2, 5, ball), Q(tw.Ball("c1", H(3))))
    assert not tw.boundary_guard(tw.build_tree(2, 3, ball), Q(tw.Ball("c1", H(3))))
    t = tw.build_tree(2, 6)
    assert tw.boundary_guard(t, Q(tw.Sphere(2, tw.Tube("A", 2))))


def test_unsafe_and_infinite_queries_raise():
    t = tw.build_tree(2, 3, tw.TwoCenters(H(0)))
    with pytest.raises(tw.BoundaryError):
        tw.oracle_count(t, Q(tw.Ball("c1", H(3))))
    t = tw.build_tree(2, 6)
    with pytest.raises(tw.InfiniteQueryError):
        tw.oracle_count(t, Q(tw.Tube("A", 1)))
    t = tw.build_tree(2, 6, tw.TwoGeodesics(shared_ray=True))
    with pytest.raises(tw.InfiniteQueryError):
        tw.oracle_count(t, Q(tw.Inter(tw.Tube("A", 0), tw.Tube("B", 0))))


@given(st.sampled_from([2, 3]), st.integers(1, 4))
@settings(deadline=None, max_examples=20)
def test_sphere_sizes(q, n):
    shell = tw.Sphere(n, tw.Ball("c1", H(0)))
    assert tw.count(q, tw.TwoCenters(H(0)), Q(shell)) == (q + 1) * q ** (n - 1)


@given(st.sampled_from([2, 3]), st.integers(0, 2))
@settings(deadline=None, max_examples=10)
def test_color_split_sums_to_total(q, half):
    i = 2 * half
    lay = tw.TwoCenters(H(0))
    ball = tw.Ball("c1", H(i))
    total = 1 + (q + 1) * (q**i - 1) // (q - 1)
    assert tw.count(q, lay, Q(ball, "black")) + tw.count(q, lay, Q(ball, "white")) == total


LAYOUT_QUERIES = [
    (tw.TwoCenters(H("5/2"), "vertex", "midpoint"), tw.Inter(tw.Ball("c1", H(2)), tw.Ball("c2", H("3/2")))),
    (tw.GeodesicWithPoint(H(1)), tw.Inter(tw.Tube("A", 1), tw.Ball("v", H(2)))),
    (tw.TwoGeodesics(delta=1), tw.Inter(tw.Tube("A", 1), tw.Tube("B", 2))),
    (tw.TwoGeodesics(r=3), tw.Inter(tw.Tube("A", 1), tw.Tube("B", 0))),
    (tw.SingleGeodesic(), tw.Inter(tw.Foot("A", (0,)), tw.Sphere(2, tw.Tube("A", 0)))),
]


@given(st.sampled_from(LAYOUT_QUERIES), st.integers(0, 2), st.integers(0, 10_000), st.sampled_from(["any", "black"]))
@settings(deadline=None, max_examples=25)
def test_rerooting_and_relabeling_invariance(lq, offset, seed, cf):
    layout, shape = lq
    query = Q(shape, cf)
    base = tw.count(2, layout, query)
    moved = tw.build_tree(2, 8, layout, anchor_offset=offset, seed=seed,
                          root_color="black" if offset % 2 == 0 else "white")
    assert tw.oracle_count(moved, query) == base
