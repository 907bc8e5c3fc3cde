from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact import treecount as tc
from artifact.halfint import HalfInt
from artifact.invariants import GammaInvariants as GI
from artifact.qrat import QRat, q, qpow
from artifact.relative import (RelativeConfig, active_branch, branch_values, detect_case,
                               relative_orbital)
from artifact.verify import verify_relative


def cfg(k1, d1, k2, d2, dl, **kw):
    return RelativeConfig(GI(k1, d1), GI(k2, d2), dl, **kw)


def test_detect_examples():
    assert detect_case(cfg("split", 1, "split", 2, 3)) == "A"
    assert detect_case(cfg("split", 1, "split", 2, 0, overlap_r=2)) == "B"
    assert detect_case(cfg("split", 1, "split", 2, 0, same_core="equal")) == "C"
    assert detect_case(cfg("split", 1, "split", 2, 0, same_core="shared_ray")) == "D"
    assert detect_case(cfg("unram", 1, "unram", 2, 3)) == "E"
    assert detect_case(cfg("ram", Fraction(1, 2), "ram", Fraction(3, 2), 1)) == "F"
    assert detect_case(cfg("unram", 1, "ram", Fraction(1, 2), Fraction(3, 2))) == "G"
    assert detect_case(cfg("split", 2, "ram", Fraction(1, 2), Fraction(3, 2))) == "h"
    assert detect_case(cfg("ram", Fraction(1, 2), "split", 2, 0)) == "h"


@pytest.mark.parametrize("bad", [
    lambda: cfg("split", 1, "split", 1, 0),
    lambda: cfg("split", 1, "split", 1, Fraction(3, 2)),
    lambda: cfg("split", 1, "split", 1, 1, overlap_r=2),
    lambda: cfg("split", 1, "split", 1, 0, overlap_r=0),
    lambda: cfg("split", 1, "split", 1, 0, overlap_r=1, same_core="equal"),
    lambda: cfg("unram", 1, "unram", 1, Fraction(1, 2)),
    lambda: cfg("unram", 1, "ram", Fraction(1, 2), 1),
    lambda: cfg("split", 1, "unram", 1, Fraction(1, 2)),
    lambda: cfg("split", 1, "ram", Fraction(1, 2), 1),
    lambda: cfg("unram", 1, "unram", 1, 1, overlap_r=1),
])
def test_inconsistent_configs(bad):
    with pytest.raises(ValueError):
        detect_case(bad())


def test_config_rejects_bad_fields():
    with pytest.raises(ValueError):
        cfg("split", 1, "split", 1, -1)
    with pytest.raises(ValueError):
        cfg("split", 1, "split", 1, 0, same_core="parallel")


def test_value_examples():
    assert relative_orbital(cfg("unram", 3, "unram", 3, 5)).value == 2
    d = relative_orbital(cfg("split", 1, "split", 2, 0, same_core="shared_ray"))
    assert d.divergent and str(d) == "divergent" and d.case == "D"
    assert relative_orbital(cfg("split", 1, "unram", 1, 3)).value == 0
    assert relative_orbital(cfg("split", 1, "ram", Fraction(1, 2), Fraction(5, 2))).value == 0
    assert relative_orbital(cfg("split", 1, "split", 3, 0, same_core="equal")).value == q


def test_case_a_single_apartment_overlap():
    # far apart apartments: two disjoint tubes meet in a ball around the midpoint
    assert relative_orbital(cfg("split", 2, "split", 2, 4)).value == 1
    assert relative_orbital(cfg("split", 2, "split", 2, 5)).value == 0


def test_case_b_formula():
    r = relative_orbital(cfg("split", 3, "split", 1, 0, overlap_r=2)).value
    assert r == (2 * 2 + 2) * q + 2 * (q - 1) / (q - 1)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 12))
def test_case_e_vs_treecount(d1, d2, dl):
    c = cfg("unram", d1, "unram", d2, dl)
    _, v = tc.ball_ball_intersection(d1, d2, dl, "vertex")
    assert relative_orbital(c).value == v


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 12))
def test_case_f_parity(t1, t2, dl):
    # both centers are midpoints; the intersection is centered at a vertex
    # exactly when d1 + d2 + delta is even
    d1, d2 = Fraction(2 * t1 + 1, 2), Fraction(2 * t2 + 1, 2)
    c = cfg("ram", d1, "ram", d2, dl)
    regime, v = tc.ball_ball_intersection(d1, d2, dl, "midpoint")
    assert relative_orbital(c).value == v
    branch = active_branch(c)
    if regime.tag == "ball" and branch.startswith("ball"):
        vertex_center = regime.params["center"] == "vertex"
        assert vertex_center == ((d1 + d2 + dl) % 2 == 0)
        assert branch == ("ball_even" if vertex_center else "ball_odd")


def test_f_rows_are_e_rows_shifted():
    # F at half-integers d_i reuses the E ball rows; the inside row becomes a midpoint ball
    for t1 in range(4):
        for t2 in range(4):
            for dl in range(8):
                d1, d2 = Fraction(2 * t1 + 1, 2), Fraction(2 * t2 + 1, 2)
                f = branch_values(cfg("ram", d1, "ram", d2, dl))
                e = branch_values(cfg("unram", t1, "unram", t2, dl), delta=dl)
                s = d1 + d2 - dl
                if s >= 0 and s.denominator == 1:
                    assert f["ball_even" if s % 2 == 0 else "ball_odd"] is not None
                assert f["inside"] == 2 * (qpow(min(t1, t2) + 1) - 1) / (q - 1)
                assert e["inside"] == 1 + (1 + q) * (qpow(min(t1, t2)) - 1) / (q - 1)


def test_branch_values_case_d():
    assert branch_values(cfg("split", 1, "split", 2, 0, same_core="shared_ray")) == {}
    assert active_branch(cfg("split", 1, "split", 2, 0, same_core="shared_ray")) == "divergent"


def test_symmetric_in_factors():
    for k1, k2 in [("unram", "ram"), ("split", "unram"), ("split", "ram")]:
        for a in (0, 1, 2):
            for b in (0, 1, 2):
                for dl in range(6):
                    da = a if k1 != "ram" else Fraction(2 * a + 1, 2)
                    db = b if k2 != "ram" else Fraction(2 * b + 1, 2)
                    dd = Fraction(2 * dl + 1, 2) if (k1, k2) != ("split", "unram") and (k1 == "ram" or k2 == "ram") else dl
                    try:
                        x = relative_orbital(cfg(k1, da, k2, db, dd))
                    except ValueError:
                        continue
                    y = relative_orbital(cfg(k2, db, k1, da, dd))
                    assert x == y


def test_oracle_and_continuity():
    rep = verify_relative(max_reach=3)
    assert rep.ok, rep.summary()["failures"][:3]
    names = {c.name for c in rep.checks}
    assert {"oracle_A", "oracle_B", "oracle_E", "oracle_F", "oracle_G", "oracle_h", "case_D_divergent"} <= names
    assert "boundary_continuity" in names
