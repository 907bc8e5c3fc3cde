from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artifact import treecount as tc
from artifact.halfint import HalfInt
from artifact.qrat import q, qpow
from artifact.verify import tree_count_cases, run_case

H = HalfInt.of
halves = st.integers(0, 12).map(HalfInt)


def test_ball_examples():
    assert tc.ball_count(tc.BallSpec("vertex", 2)) == q**2 + 2 * q + 2
    assert tc.ball_count(tc.BallSpec("vertex", 0)) == 1
    mid = tc.ball_count(tc.BallSpec("midpoint", H("3/2")))
    assert mid == 2 * (q + 1) and mid(2) == 6
    with pytest.raises(ValueError):
        tc.ball_count(tc.BallSpec("vertex", -1))


def test_small_formulas():
    assert tc.ball_out_of_apartment(0) == 1
    assert tc.ball_out_of_apartment(3) == q**3
    assert tc.sphere_from_convex(1, 1) == q + 1
    assert tc.sphere_from_convex(2, 3) == q * (3 * q - 1)
    assert tc.sphere_from_convex(1, 2) == 2 * q
    with pytest.raises(ValueError):
        tc.sphere_from_convex(0, 2)
    assert tc.colored_sphere_from_convex(2, 1, 0, "black") == q**2 + q
    assert tc.colored_sphere_from_convex(1, 1, 0, "black") == 0


def test_ball_ball_examples():
    reg, val = tc.ball_ball_intersection(1, 1, 3)
    assert reg.tag == "empty" and val == 0
    reg, val = tc.ball_ball_intersection(2, 2, 2)
    assert reg.tag == "ball" and val == 1 + (q + 1)
    reg, val = tc.ball_ball_intersection(1, 5, 1)
    assert reg.tag == "containment" and val == tc.ball_count(tc.BallSpec("vertex", 1))


def test_tube_examples():
    assert tc.tube_ball_count(1, 5, 7) == 0
    v = tc.tube_ball_count(1, 3, 1)
    assert v == 3 * q + 2 and v(2) == 8
    assert tc.tube_ball_count(1, H("5/2"), 0, "midpoint") == 4 * q + 2
    assert tc.tube_tube_count(0, 0, 0, 3) == 3
    assert tc.tube_tube_count(2, 1, 0, 2) == 4 * q + 2
    assert tc.tube_tube_count(2, 2, 2, 0) == tc.vertex_ball(1)
    with pytest.raises(tc.DivergentError):
        tc.tube_tube_count(1, 1, 0, 0, shared_ray=True)


def test_tube_ball_rejections():
    with pytest.raises(ValueError):
        tc.tube_ball_count(1, H("3/2"), 1, "vertex")
    with pytest.raises(ValueError):
        tc.tube_ball_count(1, 2, H("1/2"), "midpoint")
    with pytest.raises(ValueError):
        tc.tube_ball_count(2, H("1/2"), 0, "midpoint")


def test_chi():
    assert tc.chi(0) == 1
    assert tc.chi(2) == q**2 - q
    for D in range(6):
        assert sum((tc.chi(d) for d in range(D + 1)), tc.chi(0) * 0) == qpow(D)
    assert tc.chi(3, "black", "white") == tc.chi(3)
    assert tc.chi(3, "white", "white") == 0


@given(st.integers(1, 6), st.integers(0, 5), st.integers(0, 5))
def test_colored_sum(n, vb, vw):
    if vb + vw == 0:
        return
    both = tc.colored_sphere_from_convex(n, vb, vw, "black") + tc.colored_sphere_from_convex(n, vb, vw, "white")
    assert both == tc.sphere_from_convex(n, vb + vw)


@given(halves, halves, halves, st.sampled_from(["vertex", "midpoint"]))
def test_regime_total_and_deterministic(a, b, d, kind):
    r1 = tc.ball_ball_intersection(a, b, d, kind)
    r2 = tc.ball_ball_intersection(a, b, d, kind)
    assert r1 == r2 and r1[0].tag in {"empty", "ball", "containment"}


@given(st.integers(0, 6), st.integers(0, 6), st.sampled_from(["vertex", "midpoint"]))
def test_ball_ball_boundaries_agree(a, b, kind):
    # at delta = |a - b| the interpolated ball equals the contained ball
    d = abs(a - b)
    reg, val = tc.ball_ball_intersection(a, b, d, "vertex")
    if a <= b:
        assert val == tc.ball_count(tc.BallSpec("vertex", a))
    else:
        assert val == tc.ball_count(tc.BallSpec("vertex", b))


@given(st.integers(0, 6), st.integers(0, 6))
def test_tube_boundaries_agree(a, b):
    if a == b:
        return
    d = abs(a - b)
    ball = tc.vertex_ball(min(a, b))
    assert tc.tube_tube_count(a, b, d, 0) == ball
    if b > a:
        assert tc.tube_ball_count(a, b, b - a) == ball


@pytest.mark.parametrize("q0", [2, 3])
def test_oracle_equivalence(q0):
    cases = tree_count_cases(q0, 4)
    assert len(cases) >= 300
    names = {c.name for c in cases}
    assert {"ball_vertex", "ball_midpoint", "ball_out_of_apartment", "sphere_from_convex",
            "colored_sphere_from_convex", "ball_ball_intersection", "tube_ball_count",
            "tube_tube_count", "chi"} <= names
    bad = []
    for case in cases:
        closed, got = run_case(q0, case)
        if closed != got:
            bad.append((case.name, case.params, closed, got))
    assert not bad, bad[:5]
