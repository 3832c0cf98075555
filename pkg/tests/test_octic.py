"""Octics, coefficient text and linear substitutions."""

import random

import pytest

from pp8.algebra.octic import (
    LinearWitness,
    Octic,
    compose_witness,
    frobenius_lift,
    linear_sub,
    monic_shift,
    value_multiset,
)
from pp8.core.errors import CoefficientSyntaxError, ShapeError

from conftest import R4_THEOREM


def _random_octic(ctx, rng):
    return Octic(ctx, tuple(rng.randrange(ctx.q) for _ in range(8)) + (rng.randrange(1, ctx.q),))


def test_parse_normalized(gf16):
    f = Octic.parse(gf16, "0,1,e,0,e^3,e^5,e")
    assert f.is_normalized
    assert f.to_log_tuple() == R4_THEOREM[0]
    assert Octic.from_log_tuple(gf16, R4_THEOREM[0]) == f


def test_parse_full(gf16):
    f = Octic.parse(gf16, "e,0,1,0,0,0,0,0,e^2")
    assert f.a(8) == 2
    assert f.a(6) == 1
    assert f.a(0) == 4
    assert not f.is_normalized


def test_parse_errors(gf16):
    with pytest.raises(CoefficientSyntaxError):
        Octic.parse(gf16, "0,1,e")
    with pytest.raises(CoefficientSyntaxError):
        Octic.parse(gf16, "0,0,0,0,0,0,0,0,1")
    with pytest.raises(CoefficientSyntaxError):
        Octic.parse(gf16, "0,1,e,0,e^3,e^5,y")


def test_shape_errors(gf16):
    with pytest.raises(ShapeError):
        Octic(gf16, (0,) * 9)
    with pytest.raises(ShapeError):
        Octic(gf16, (1,) * 8)
    with pytest.raises(ShapeError):
        Octic.normalized(gf16, (0, 1))
    with pytest.raises(ShapeError):
        LinearWitness(0, 1)


def test_eval_matches_power_sum(gf32):
    rng = random.Random(11)
    f = _random_octic(gf32, rng)
    for x in gf32.elements():
        expected = 0
        for i, c in enumerate(f.coeffs):
            expected ^= gf32.mul(c, gf32.pow(x, i))
        assert f(x) == expected


def test_linear_sub_definition(gf16):
    rng = random.Random(3)
    f = _random_octic(gf16, rng)
    w = LinearWitness(s=gf16.element(4), t=gf16.element(9), u=gf16.element(2), v=7)
    g = linear_sub(f, w)
    for x in gf16.elements():
        assert g(x) == gf16.mul(w.s, f(gf16.mul(w.t, x) ^ w.u)) ^ w.v
    assert linear_sub(f, LinearWitness.identity()) == f


def test_compose_witness(gf16):
    rng = random.Random(5)
    f = _random_octic(gf16, rng)
    w1 = LinearWitness(3, 5, 7, 1)
    w2 = LinearWitness(9, 2, 11, 6)
    assert linear_sub(linear_sub(f, w1), w2) == linear_sub(f, compose_witness(gf16, w1, w2))


def test_monic_shift(gf32):
    rng = random.Random(8)
    g = linear_sub(_random_octic(gf32, rng), LinearWitness.identity())
    assert linear_sub(g, monic_shift(g)).is_normalized


def test_frobenius_lift_order(gf32):
    f = Octic.from_log_tuple(gf32, (0, 31, 11, 1, 29, 0, 27))
    assert frobenius_lift(f, 5) == f
    assert frobenius_lift(f, 1).to_log_tuple() == (0, 31, 22, 2, 27, 0, 23)


def test_value_multiset_of_pp(gf16):
    f = Octic.from_log_tuple(gf16, R4_THEOREM[0])
    assert set(value_multiset(f).values()) == {1}
    assert set(value_multiset(Octic.normalized(gf16, (0, 1, 0, 0, 0, 0, 0))).values()) != {1}


def test_render(gf16):
    assert Octic.normalized(gf16, (0, 1, 2, 0, 0, 0, 0)).render() == "x^8 + x^6 + e*x^5"
    f = Octic(gf16, (3, 2, 0, 0, 0, 0, 0, 0, 1))
    assert f.render() == "x^8 + e*x + e^4"
    assert f.render(basis=True) == "x^8 + 0x2*x + 0x3"
    assert LinearWitness(1, 2, 0, 3).render(gf16) == "(1, e, 0, e^4)"
