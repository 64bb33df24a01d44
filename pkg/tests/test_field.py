"""Tests for GF(2^11) arithmetic and the polynomial substrate."""

import random

import pytest

from m23rep.field import (
    DEFAULT_FIELD,
    DEFAULT_MODULUS,
    FieldElement,
    FieldSpec,
    build_log_table,
    irreducibility_witness,
    parse_binary_string,
    parse_polynomial,
    poly_degree,
    poly_divmod,
    poly_mul,
    polynomial_string,
    to_binary_string,
    verify_primitive,
)


def test_modulus_constant():
    assert DEFAULT_MODULUS == 0b100000000101
    assert poly_degree(DEFAULT_MODULUS) == 11


def test_poly_mul_distributes():
    rng = random.Random(101)
    for _ in range(2000):
        a = rng.randrange(1 << 12)
        b = rng.randrange(1 << 12)
        c = rng.randrange(1 << 12)
        assert poly_mul(a, b ^ c) == poly_mul(a, b) ^ poly_mul(a, c)


def test_poly_divmod_reconstructs():
    rng = random.Random(102)
    for _ in range(2000):
        a = rng.randrange(1 << 20)
        b = rng.randrange(1, 1 << 10)
        q, r = poly_divmod(a, b)
        assert poly_mul(q, b) ^ r == a
        assert r == 0 or poly_degree(r) < poly_degree(b)


def test_field_laws_random_sample():
    spec = DEFAULT_FIELD
    rng = random.Random(20118)
    for _ in range(10_000):
        a = spec.element(rng.randrange(2048))
        b = spec.element(rng.randrange(2048))
        c = spec.element(rng.randrange(2048))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_add_is_self_inverse():
    spec = DEFAULT_FIELD
    rng = random.Random(103)
    for _ in range(1000):
        a = spec.element(rng.randrange(2048))
        assert a + a == spec.zero
        assert a - a == spec.zero


def test_inverse_exhaustive():
    spec = DEFAULT_FIELD
    one = spec.one
    for bits in range(1, 2048):
        a = spec.element(bits)
        assert a * a.inverse() == one


def test_power_order_exhaustive():
    # a^2047 = 1 for every nonzero a, hence a^2048 = a.
    spec = DEFAULT_FIELD
    one = spec.one
    for bits in range(1, 2048):
        a = spec.element(bits)
        assert a ** 2047 == one
        assert a ** 2048 == a


def test_zero_power_and_inverse_rejected():
    zero = DEFAULT_FIELD.zero
    with pytest.raises(ValueError):
        zero ** 0
    with pytest.raises(ValueError):
        zero.inverse()
    with pytest.raises(ValueError):
        DEFAULT_FIELD.one ** -1


def test_mixed_spec_rejected():
    other = FieldSpec(4, 0b10011)
    with pytest.raises(ValueError):
        DEFAULT_FIELD.one + other.one
    with pytest.raises(ValueError):
        DEFAULT_FIELD.one * other.one


def test_spec_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        FieldSpec(11, (1 << 11) | (1 << 1) | 1)


def test_spec_rejects_wrong_degree():
    with pytest.raises(ValueError):
        FieldSpec(10, DEFAULT_MODULUS)


def test_spec_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        FieldSpec(2, 0b110)


def test_irreducibility_witness():
    assert irreducibility_witness(DEFAULT_MODULUS) is None
    assert irreducibility_witness(0b111) is None
    # x^11 + x + 1 factors; the smallest factor is x^2 + x + 1.
    assert irreducibility_witness((1 << 11) | 0b11) == 0b111
    assert irreducibility_witness(0b100) == 0b10


def test_witness_divides():
    rng = random.Random(104)
    for _ in range(500):
        p = rng.randrange(4, 1 << 13)
        w = irreducibility_witness(p)
        if w is not None:
            assert poly_divmod(p, w)[1] == 0
            assert 1 <= poly_degree(w) < poly_degree(p)


def test_primitivity_default_field():
    assert verify_primitive(DEFAULT_FIELD)


def test_primitivity_detects_non_primitive():
    # In GF(2)[x]/(x^4+x^3+x^2+x+1) the class of x has order 5, not 15.
    spec = FieldSpec(4, 0b11111)
    assert not verify_primitive(spec)
    assert verify_primitive(FieldSpec(4, 0b10011))


def test_x_power_table_regenerates():
    from m23rep.fixtures import X_POWERS

    spec = DEFAULT_FIELD
    assert len(X_POWERS) == 90
    for exponent, expression, binary in X_POWERS:
        a = spec.x ** exponent
        assert polynomial_string(a.bits) == expression
        assert to_binary_string(a) == binary


def test_log_table_bijective():
    table = build_log_table(DEFAULT_FIELD)
    seen = set()
    for k in range(2047):
        a = table.exp(k)
        assert table.log(a) == k
        seen.add(a.bits)
    assert len(seen) == 2047


def test_log_of_zero_rejected():
    table = build_log_table(DEFAULT_FIELD)
    with pytest.raises(ValueError):
        table.log(DEFAULT_FIELD.zero)


def test_binary_string_round_trip():
    rng = random.Random(105)
    for _ in range(1000):
        a = DEFAULT_FIELD.element(rng.randrange(2048))
        text = to_binary_string(a)
        assert len(text) == 11
        assert parse_binary_string(text) == a


def test_parse_binary_string_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_binary_string("0101")
    with pytest.raises(ValueError):
        parse_binary_string("0000000210x")


def test_polynomial_string_round_trip():
    rng = random.Random(106)
    for _ in range(1000):
        bits = rng.randrange(1, 1 << 12)
        assert parse_polynomial(",".join(
            str(e) for e in range(bits.bit_length()) if bits >> e & 1
        )) == bits


def test_parse_polynomial_forms():
    assert parse_polynomial("11,2,0") == DEFAULT_MODULUS
    assert parse_polynomial("100000000101") == DEFAULT_MODULUS
    with pytest.raises(ValueError):
        parse_polynomial("")
    with pytest.raises(ValueError):
        parse_polynomial("11,two,0")


def test_element_str_is_binary():
    assert str(DEFAULT_FIELD.one) == "00000000001"
    assert str(DEFAULT_FIELD.x ** 11) == "00000000101"
