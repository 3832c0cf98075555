"""Normal forms, residual identifications and exceptionality."""

import random
from itertools import product

import pytest

from pp8.algebra.equiv import (
    case_ii_partner,
    case_iii_witnesses,
    determinant,
    find_witness_brute,
    frobenius_reduce,
    gamma,
    is_exceptional_deg8,
    lambda_set,
    linearized_root_free,
    linearly_related,
    normalize,
    omega,
    satisfies_requirements,
)
from pp8.algebra.field import make_ctx
from pp8.algebra.octic import LinearWitness, Octic, frobenius_lift, linear_sub
from pp8.algebra.pptest import is_pp_brute
from pp8.core.errors import ContextMismatchError, FieldDomainError, ShapeError

from conftest import R4_THEOREM, R5_THEOREM, R6_THEOREM


def _random_octic(ctx, rng):
    return Octic(ctx, tuple(rng.randrange(ctx.q) for _ in range(8)) + (rng.randrange(1, ctx.q),))


def test_omega_values(gf16, gf32, gf64):
    assert omega(gf16, gf16.element(1)) == gf16.element(1)
    assert omega(gf16, gf16.element(3)) == gf16.element(2)
    assert omega(gf16, 1) == gf16.element(3)
    assert omega(gf32, gf32.element(11)) == gf32.element(1)
    assert omega(gf64, 1) == gf64.element(3)
    with pytest.raises(FieldDomainError):
        omega(gf16, 0)


def test_omega_outside_image(gf32):
    for a in range(1, gf32.q):
        image = {gf32.mul(u, u) ^ gf32.mul(a, u) for u in gf32.elements()}
        assert omega(gf32, a) not in image


def test_gamma(gf16, gf32):
    assert gamma(gf16) == tuple(gf16.element(i) for i in (1, 3, 5, 7)) + (1,)
    assert gamma(gf32) == tuple(gf32.element(i) for i in (1, 3, 5, 7, 11, 15)) + (1,)


def test_lambda_set(gf16, gf32, gf64):
    assert lambda_set(gf16) == (1, gf16.element(1), gf16.element(2))
    assert lambda_set(gf32) == (1,)
    assert len(lambda_set(gf64)) == 3


@pytest.mark.parametrize('r', [4, 5, 6])
def test_normalize_random(r):
    ctx = make_ctx(r)
    rng = random.Random(100 + r)
    for _ in range(60):
        h = _random_octic(ctx, rng)
        form = normalize(h)
        assert satisfies_requirements(form.octic)
        assert linear_sub(h, form.witness) == form.octic


def test_normalize_each_shape(gf64):
    rng = random.Random(1)
    for a7, a6 in ((3, 0), (0, 5), (0, 0)):
        tail = (a7, a6, 9, 17, rng.randrange(64), rng.randrange(64), rng.randrange(64))
        h = Octic.normalized(gf64, tail)
        form = normalize(h)
        assert satisfies_requirements(form.octic)
        assert linear_sub(h, form.witness) == form.octic


def test_normalize_fixes_normal_forms():
    for r, table in ((4, R4_THEOREM), (5, R5_THEOREM), (6, R6_THEOREM)):
        ctx = make_ctx(r)
        for logs in table:
            f = Octic.from_log_tuple(ctx, logs)
            assert satisfies_requirements(f)
            assert normalize(f).octic == f


def test_normalize_keeps_pp(gf16):
    f = Octic.from_log_tuple(gf16, R4_THEOREM[10])
    h = linear_sub(f, LinearWitness(gf16.element(6), gf16.element(2), 5, 9))
    assert is_pp_brute(h)
    form = normalize(h)
    assert is_pp_brute(form.octic)
    assert form.octic.to_log_tuple()[:2] == (0, 15)


def test_case_ii_partner(gf32):
    f = Octic.from_log_tuple(gf32, R5_THEOREM[0])
    g = case_ii_partner(f)
    assert g is not None and g != f
    assert is_pp_brute(g)
    assert satisfies_requirements(g)
    assert linearly_related(f, g) is not None
    assert case_ii_partner(g) == f


def test_case_ii_needs_a3_off_cube(gf16):
    assert case_ii_partner(Octic.from_log_tuple(gf16, R4_THEOREM[0])) is None
    assert case_ii_partner(Octic.from_log_tuple(make_ctx(6), R6_THEOREM[0])) is None


def test_case_iii(gf64, gf32):
    published = Octic.from_log_tuple(gf64, R6_THEOREM[0])
    witnesses = case_iii_witnesses(published)
    assert len(witnesses) == 2
    # a1 = 0: the cube roots of unity fix it
    for w in witnesses:
        assert linear_sub(published, w) == published

    f = Octic.from_log_tuple(gf64, (0, 0, 1, 0, 0, 2, 5))
    for w in case_iii_witnesses(f):
        g = linear_sub(f, w)
        assert g != f
        assert is_pp_brute(g) == is_pp_brute(f)
        assert satisfies_requirements(g)
        assert linearly_related(f, g) == w
    assert case_iii_witnesses(Octic.from_log_tuple(gf32, R5_THEOREM[0])) == ()


def test_unrelated_normal_forms(gf16):
    f = Octic.from_log_tuple(gf16, R4_THEOREM[0])
    g = Octic.from_log_tuple(gf16, R4_THEOREM[1])
    assert linearly_related(f, g) is None
    assert find_witness_brute(f, g) is None
    assert linearly_related(f, f) == LinearWitness.identity()


def test_find_witness_brute(gf16):
    f = Octic.from_log_tuple(gf16, R4_THEOREM[3])
    g = linear_sub(f, LinearWitness(gf16.element(2), gf16.element(7), 4, 1))
    w = find_witness_brute(f, g)
    assert w is not None
    assert linear_sub(f, w) == g


def test_linearly_related_errors(gf16, gf32):
    f = Octic.from_log_tuple(gf16, R4_THEOREM[0])
    with pytest.raises(ContextMismatchError):
        linearly_related(f, Octic.from_log_tuple(gf32, R5_THEOREM[0]))
    with pytest.raises(ShapeError):
        linearly_related(f, Octic.normalized(gf16, (0, 0, 0, 0, 1, 0, 0)))


def test_exceptional(gf16):
    assert is_exceptional_deg8(Octic.normalized(gf16, (0,) * 7))
    x8_plus_x = Octic.normalized(gf16, (0, 0, 0, 0, 0, 0, 1))
    assert not is_exceptional_deg8(x8_plus_x)
    assert not linearized_root_free(x8_plus_x)
    assert not is_exceptional_deg8(Octic.from_log_tuple(gf16, R4_THEOREM[0]))
    with pytest.raises(ShapeError):
        is_exceptional_deg8(Octic.normalized(make_ctx(3), (0,) * 7))


@pytest.mark.parametrize('r', [4, 5, 6])
def test_dickson_determinant_matches_roots(r):
    ctx = make_ctx(r)
    rng = random.Random(r)
    for _ in range(40):
        a4, a2, a1 = (rng.randrange(ctx.q) for _ in range(3))
        f = Octic.normalized(ctx, (0, 0, 0, a4, 0, a2, a1))
        assert is_exceptional_deg8(f) == linearized_root_free(f) == is_pp_brute(f)


def test_dickson_determinant_all_linearized_f16(gf16):
    for a4, a2, a1 in product(gf16.elements(), repeat=3):
        f = Octic.normalized(gf16, (0, 0, 0, a4, 0, a2, a1))
        exceptional = is_exceptional_deg8(f)
        assert exceptional == linearized_root_free(f)
        if exceptional:
            assert is_pp_brute(f)


def test_determinant(gf16):
    assert determinant(gf16, [[1, 0], [0, 1]]) == 1
    assert determinant(gf16, [[2, 3], [4, 6]]) == 0
    assert determinant(gf16, [[0, 1], [1, 0]]) == 1
    assert determinant(gf16, [[2, 0, 0], [5, 3, 0], [7, 9, 4]]) == gf16.mul(gf16.mul(2, 3), 4)


def test_frobenius_reduce(gf32):
    f = Octic.from_log_tuple(gf32, R5_THEOREM[0])
    g = frobenius_lift(f, 2)
    assert g.a(5) == gf32.element(4)
    rep = frobenius_reduce(g)
    assert rep.form.octic == f
    assert rep.j == 2
    assert frobenius_lift(rep.form.octic, rep.j) == g
    with pytest.raises(ShapeError):
        frobenius_reduce(Octic.from_log_tuple(make_ctx(6), R6_THEOREM[0]))
