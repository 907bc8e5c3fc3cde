from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact import sl2
from artifact.halfint import HalfInt
from artifact.invariants import GammaInvariants as GI
from artifact.qrat import q, qpow
from artifact.verify import colored_shell, hyperbolic_shell, verify_sl2


def test_unipotent_examples():
    assert sl2.sl2_unipotent("zero", 0) == 1
    assert sl2.sl2_unipotent("zero", 3) == 0
    assert sl2.sl2_unipotent("one", 0) == q**2 / (2 * (q**2 - 1))
    assert sl2.sl2_unipotent("pi", 0) == q / (2 * (q**2 - 1))
    assert sl2.sl2_unipotent("u", 2) == qpow(2) / 2
    assert sl2.sl2_unipotent("u_pi", 2) == 0
    with pytest.raises(ValueError):
        sl2.sl2_unipotent("two", 0)


def test_kottwitz_sum():
    assert sl2.sl2_unipotent_stable(0) == 1 / (1 - qpow(-1))
    for n in range(1, 9):
        assert sl2.sl2_unipotent_stable(n) == qpow(n)


def test_semisimple_examples():
    assert sl2.sl2_hyperbolic(2, 0) == q**2
    assert sl2.sl2_hyperbolic(1, 2) == q**3 - q**2
    assert sl2.sl2_elliptic_unram(1, "black", 0) == 1
    assert sl2.sl2_elliptic_unram(1, "white", 0) == q + 1
    assert sl2.sl2_elliptic_unram(0, "black", 2) == q**2 + q
    assert sl2.sl2_elliptic_unram(0, "black", 1) == 0
    assert sl2.sl2_elliptic_ram(HalfInt(3), 0) == q + 1
    assert sl2.sl2_elliptic_ram(HalfInt(1), 2) == q**2
    with pytest.raises(ValueError):
        sl2.sl2_elliptic_ram(1, 0)


@given(st.integers(0, 4), st.integers(0, 7))
def test_stable_elliptic(d, n):
    got = sl2.sl2_stable(GI("unram", d), n)
    want = 1 + (q + 1) * (qpow(d) - 1) / (q - 1) if n == 0 else qpow(n + d) * (1 + qpow(-1))
    assert got == want
    ram = GI("ram", HalfInt(2 * d + 1))
    assert sl2.sl2_stable(ram, n) == 2 * sl2.sl2_orbital(ram, n)


@given(st.integers(0, 3), st.integers(0, 6), st.sampled_from(["split", "black", "white", "ram"]))
def test_shalika_reconstruction(d, n, kind):
    inv = {"split": GI("split", d), "ram": GI("ram", HalfInt(2 * d + 1))}.get(kind) or GI("unram", d, kind)
    assert sl2.sl2_shalika(inv).evaluate(n) == sl2.sl2_orbital(inv, n)


def test_white_center_swaps_germs():
    b = sl2.sl2_shalika(GI("unram", 2, "black"))
    w = sl2.sl2_shalika(GI("unram", 2, "white"))
    assert (b.A, b.B, b.C) == (w.A, w.C, w.B)


def test_fixed_set_counts():
    assert sl2.fixed_set_counts_sl2(GI("unram", 1)) == (1, q + 1)
    assert sl2.fixed_set_counts_sl2(GI("ram", HalfInt(3))) == (q + 1, q + 1)
    with pytest.raises(ValueError):
        sl2.fixed_set_counts_sl2(GI("split", 0))


@pytest.mark.parametrize("qq", [2, 3])
def test_tree_realization(qq):
    for d in range(3):
        for n in range(0, 4 - d):
            for color in ("black", "white"):
                want = sl2.sl2_elliptic_unram(d, color, n)(qq)
                assert colored_shell(qq, GI("unram", d), n, color) == want
            ram = GI("ram", HalfInt(2 * d + 1))
            if d + n < 4:
                assert colored_shell(qq, ram, n, "black") == sl2.sl2_elliptic_ram(ram.depth, n)(qq)
            assert hyperbolic_shell(qq, d, n) == sl2.sl2_hyperbolic(d, n)(qq)


def test_suite_passes():
    rep = verify_sl2(max_n=6)
    assert rep.ok, rep.summary()["failures"][:3]
    assert rep.passed > 200
