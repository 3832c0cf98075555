"""Early-exit permutation test against the bijection oracle."""

import random

import pytest

from pp8.algebra.field import make_ctx
from pp8.algebra.hermite import hermite_full_check
from pp8.algebra.octic import Octic
from pp8.algebra.pptest import is_pp_brute, is_pp_wan
from pp8.core.errors import ShapeError

from conftest import R4_THEOREM, R5_THEOREM, R6_THEOREM


def test_published_pps():
    for r, table in ((4, R4_THEOREM), (5, R5_THEOREM), (6, R6_THEOREM)):
        ctx = make_ctx(r)
        for logs in table:
            f = Octic.from_log_tuple(ctx, logs)
            assert is_pp_wan(f)
            assert is_pp_brute(f)


def test_x8_permutes():
    for r in (4, 5, 6, 7):
        assert is_pp_wan(Octic.normalized(make_ctx(r), (0,) * 7))


def test_known_non_pps():
    assert not is_pp_wan(Octic.normalized(make_ctx(7), (0, 1, 0, 0, 0, 0, 0)))
    assert not is_pp_wan(Octic.normalized(make_ctx(8), (1, 0, 0, 0, 0, 0, 0)))
    assert not is_pp_wan(Octic.normalized(make_ctx(9), (0, 0, 1, 0, 0, 0, 0)))


@pytest.mark.parametrize('r', [4, 5])
def test_agrees_with_oracle(r):
    ctx = make_ctx(r)
    rng = random.Random(r)
    for _ in range(300):
        f = Octic(ctx, tuple(rng.randrange(ctx.q) for _ in range(8)) + (rng.randrange(1, ctx.q),))
        assert is_pp_wan(f) == is_pp_brute(f)


def test_three_tests_agree_on_leading_shapes(gf16):
    for a7, a6 in ((1, 0), (0, 1), (0, 0)):
        for a5 in gf16.elements():
            for a4 in gf16.elements():
                f = Octic.normalized(gf16, (a7, a6, a5, a4, 0, 0, 0))
                expected = is_pp_brute(f)
                assert is_pp_wan(f) == expected
                assert hermite_full_check(f) == expected


@pytest.mark.parametrize('r, count', [(4, 500), (5, 200)])
def test_three_tests_agree_on_random_octics(r, count):
    ctx = make_ctx(r)
    rng = random.Random(1000 + r)
    for _ in range(count):
        f = Octic.normalized(ctx, [rng.randrange(ctx.q) for _ in range(7)])
        expected = is_pp_brute(f)
        assert is_pp_wan(f) == expected
        assert hermite_full_check(f) == expected


def test_small_field_rejected():
    with pytest.raises(ShapeError):
        is_pp_wan(Octic.normalized(make_ctx(3), (0,) * 7))
    assert is_pp_brute(Octic.normalized(make_ctx(3), (0,) * 7))
