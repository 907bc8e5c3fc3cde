from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact.halfint import HalfInt
from artifact.invariants import (
    RAM, SPLIT, UNRAM, EtaleClass, GammaInvariants, classify_gl2, orbit_count, parse_invariants, val_p,
)


def _squares(p):
    return {x * x % p for x in range(1, p)}


def brute_classify(t, D, p):
    """Independent route: valuation by repeated division, squares by listing."""
    disc = Fraction(t) ** 2 - 4 * Fraction(D)
    num, den, v = disc.numerator, disc.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    if v % 2:
        return RAM, v
    residue = num * pow(den, -1, p) % p
    return (SPLIT if residue in _squares(p) else UNRAM), v


def test_hand_legendre_cases():
    # p = 5: -4 = 1 mod 5 is a square; -3 = 2 mod 5 is not
    assert classify_gl2(0, 1, 5) == GammaInvariants(SPLIT, 0)
    assert classify_gl2(1, 1, 5) == GammaInvariants(UNRAM, 0)
    # 1 - 16 = -15 has valuation 1
    assert classify_gl2(1, 4, 5) == GammaInvariants(RAM, HalfInt(1))
    # disc = 49 * 3 with 3 a non-square mod 7
    assert classify_gl2(1, Fraction(-73, 2), 7) == GammaInvariants(UNRAM, 1)
    # disc = 49 * 2 with 2 = 3^2 mod 7
    assert classify_gl2(1, Fraction(-97, 4), 7) == GammaInvariants(SPLIT, 1)


def test_classify_rejections():
    with pytest.raises(ValueError):
        classify_gl2(1, 1, 2)
    with pytest.raises(ValueError):
        classify_gl2(1, 1, 9)
    with pytest.raises(ValueError):
        classify_gl2(1, 5, 5)
    with pytest.raises(ValueError):
        classify_gl2(2, 1, 5)  # disc = 0
    with pytest.raises(ValueError):
        classify_gl2(Fraction(1, 5), 1, 5)


@given(st.integers(-60, 60), st.integers(-60, 60).filter(lambda d: d != 0), st.sampled_from([3, 5, 7, 11, 13]))
def test_classify_matches_brute_force(t, D, p):
    if D % p == 0 or t * t == 4 * D:
        return
    inv = classify_gl2(t, D, p)
    klass, v = brute_classify(t, D, p)
    assert inv.klass == klass
    assert inv.depth == HalfInt(v)


def test_parse_and_validation():
    assert parse_invariants("unram:1") == GammaInvariants(UNRAM, 1, "black")
    assert parse_invariants("ram:.5") == GammaInvariants(RAM, HalfInt(1))
    assert str(parse_invariants("unram:2:white")) == "unram:2:white"
    for bad in ("ram:1", "split:1/2", "unram:1:green", "split"):
        with pytest.raises(ValueError):
            parse_invariants(bad)
    with pytest.raises(ValueError):
        GammaInvariants(SPLIT, 1, "black")
    assert val_p(Fraction(50, 3), 5) == 2


def test_orbit_table():
    s, u, r = GammaInvariants(SPLIT, 1), GammaInvariants(UNRAM, 1), GammaInvariants(RAM, HalfInt(1))
    assert orbit_count(EtaleClass("GLn")) == 1
    assert orbit_count(EtaleClass("SL2", (s,))) == 1
    assert orbit_count(EtaleClass("SL2", (u,))) == 2
    assert orbit_count(EtaleClass("SL2", (r,))) == 2
    assert orbit_count(EtaleClass("GL2xdetGL2", (u, u))) == 1
    assert orbit_count(EtaleClass("GL2xdetGL2", (u, r))) == 2
    assert orbit_count(EtaleClass("GL2xdetGL2", (s, u))) == 1
    assert orbit_count(EtaleClass("GL2xdetGL2", (r, r), same_field=False)) == 2
    assert orbit_count(EtaleClass("GL2xdetGL2", (r, r), same_field=True)) == 1
    with pytest.raises(ValueError):
        orbit_count(EtaleClass("GL2xdetGL2", (r, r)))
    with pytest.raises(ValueError):
        EtaleClass("SL2", (s, s))
