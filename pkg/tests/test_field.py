"""GF(2^r) contexts, element syntax and the moduli table."""

import pytest

from pp8.algebra.field import (
    MAX_R,
    is_irreducible,
    load_moduli,
    make_ctx,
    nonexceptional_bound,
    wan_iterations,
)
from pp8.core.errors import CoefficientSyntaxError, FieldDomainError, FieldRangeError, ModuliFileError


def test_nonexceptional_bound():
    assert nonexceptional_bound(8) == 925
    with pytest.raises(FieldRangeError):
        nonexceptional_bound(3)


def test_wan_iterations():
    assert wan_iterations(16) == 15
    assert wan_iterations(32) == 29
    assert wan_iterations(128) == 113


def test_packaged_moduli_build_every_field():
    moduli = load_moduli()
    assert sorted(moduli) == list(range(1, MAX_R + 1))
    for r, modulus in moduli.items():
        ctx = make_ctx(r)
        assert ctx.modulus == modulus
        assert len(set(ctx.exp_table[:ctx.order])) == ctx.order


def test_published_moduli():
    assert make_ctx(4).modulus == 0x13
    assert make_ctx(5).modulus == 0x25
    assert make_ctx(6).modulus == 0x5B
    assert make_ctx(7).modulus == 0x83


def test_generator_is_x(gf16):
    assert gf16.generator == 2
    # e^4 = e + 1 under x^4 + x + 1
    assert gf16.element(4) == 0b0011


def test_inverse(gf32):
    for a in range(1, gf32.q):
        assert gf32.mul(a, gf32.inv(a)) == 1
    with pytest.raises(FieldDomainError):
        gf32.inv(0)


def test_pow_and_frobenius(gf16):
    for a in gf16.elements():
        assert gf16.pow(a, 16) == a
        assert gf16.frob(a, 4) == a
        assert gf16.mul(gf16.sqrt(a), gf16.sqrt(a)) == a
    assert gf16.pow(0, 0) == 1
    with pytest.raises(FieldDomainError):
        gf16.pow(0, -1)


def test_trace_splits_field(gf64):
    traces = [gf64.trace(a) for a in gf64.elements()]
    assert set(traces) == {0, 1}
    assert traces.count(1) == 32
    assert gf64.trace(gf64.element(3)) == 1
    assert gf64.trace(gf64.element(1)) == 0


def test_log_convention(gf16):
    assert gf16.to_log(0) == 0
    assert gf16.to_log(1) == 15
    assert gf16.to_log(gf16.element(7)) == 7
    assert gf16.from_log(0) == 0
    assert gf16.from_log(15) == 1
    with pytest.raises(FieldRangeError):
        gf16.from_log(16)


def test_parse_and_render(gf16):
    assert gf16.parse('0') == 0
    assert gf16.parse('1') == 1
    assert gf16.parse('e') == 2
    assert gf16.parse(' e^3 ') == gf16.element(3)
    assert gf16.parse('e^15') == 1
    assert gf16.render(gf16.element(5)) == 'e^5'
    assert gf16.render(2) == 'e'
    assert gf16.render(1) == '1'
    assert gf16.render(gf16.element(4), basis=True) == '0x3'
    for text in ('2', 'x', 'e^', 'e3'):
        with pytest.raises(CoefficientSyntaxError):
            gf16.parse(text)


def test_element_range(gf16):
    with pytest.raises(FieldRangeError):
        gf16.check(16)


def test_bad_r():
    with pytest.raises(FieldRangeError):
        make_ctx(0)
    with pytest.raises(FieldRangeError):
        make_ctx(MAX_R + 1)


def test_is_irreducible():
    assert is_irreducible(0x13)
    assert is_irreducible(0x1F)
    assert not is_irreducible(0x15)


def test_rejects_bad_modulus():
    # reducible: (x^2 + x + 1)^2
    with pytest.raises(ModuliFileError):
        make_ctx(4, 0x15)
    # irreducible but e has order 5
    with pytest.raises(ModuliFileError):
        make_ctx(4, 0x1F)
    with pytest.raises(ModuliFileError):
        make_ctx(4, 0x25)


def test_load_moduli_file(tmp_path):
    path = tmp_path / 'moduli.txt'
    path.write_text("# comment\n4 0x19  # x^4 + x^3 + 1\n\n5, 0x25\n")
    assert load_moduli(path) == {4: 0x19, 5: 0x25}
    # x^4 = x^3 + 1
    assert make_ctx(4, 0x19).element(4) == 0b1001


def test_load_moduli_errors(tmp_path):
    with pytest.raises(ModuliFileError):
        load_moduli(tmp_path / 'missing.txt')
    bad = tmp_path / 'bad.txt'
    bad.write_text("4 zz\n")
    with pytest.raises(ModuliFileError):
        load_moduli(bad)
    wrong = tmp_path / 'wrong.txt'
    wrong.write_text("5 0x13\n")
    with pytest.raises(ModuliFileError):
        load_moduli(wrong)
