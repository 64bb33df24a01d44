"""Tests for the order-23 subgroup C, its exponent maps and the two bases."""

import random

import pytest

from m23rep.field import DEFAULT_FIELD, FieldSpec
from m23rep.fixtures import X_IN_A
from m23rep.subgroup import (
    DEFAULT_SUBGROUP,
    CoordVector,
    OrderedBasis,
    SubgroupSpec,
    alpha_power,
    alpha_to_beta,
    basis_a,
    basis_chi,
    beta_power,
    beta_to_alpha,
    c_elements,
    change_of_basis,
    check_independence,
    dlog_alpha,
    dlog_beta,
    doubling_orbit,
    express_in_basis,
    expression_string,
    in_c,
    normalize_exponent,
    parse_expression,
    reconstruct,
)


def test_default_subgroup_constants():
    sub = DEFAULT_SUBGROUP
    assert (sub.alpha_exp, sub.beta_exp, sub.order) == (89, 5, 23)
    assert sub.alpha == DEFAULT_FIELD.x ** 89
    assert sub.beta == sub.alpha ** 5


def test_alpha_has_order_23():
    sub = DEFAULT_SUBGROUP
    assert sub.alpha ** 23 == DEFAULT_FIELD.one
    assert all(sub.alpha ** k != DEFAULT_FIELD.one for k in range(1, 23))


def test_spec_rejects_wrong_alpha_order():
    with pytest.raises(ValueError):
        SubgroupSpec(alpha_exp=1)
    with pytest.raises(ValueError):
        SubgroupSpec(alpha_exp=23)


def test_spec_rejects_bad_beta():
    with pytest.raises(ValueError):
        SubgroupSpec(beta_exp=23)
    with pytest.raises(ValueError):
        SubgroupSpec(beta_exp=46)


def test_spec_rejects_bad_order():
    with pytest.raises(ValueError):
        SubgroupSpec(order=5)


def test_normalize_exponent():
    assert normalize_exponent(0) == 23
    assert normalize_exponent(23) == 23
    assert normalize_exponent(24) == 1
    assert normalize_exponent(-1) == 22
    assert normalize_exponent(5) == 5


def test_exponent_maps_are_mutually_inverse():
    for j in range(1, 24):
        assert alpha_to_beta(beta_to_alpha(j)) == j
        assert beta_to_alpha(alpha_to_beta(j)) == j


def test_exponent_maps_agree_with_field():
    for j in range(1, 24):
        assert beta_power(j) == alpha_power(beta_to_alpha(j))
        assert alpha_power(j) == beta_power(alpha_to_beta(j))


def test_c_has_23_distinct_elements():
    elements = c_elements()
    assert len(elements) == 23
    assert len({a.bits for a in elements}) == 23
    assert elements[-1] == DEFAULT_FIELD.one


def test_dlog_round_trip():
    for k in range(1, 24):
        assert dlog_alpha(alpha_power(k)) == k
        assert dlog_beta(beta_power(k)) == k


def test_dlog_rejects_outside_c():
    assert not in_c(DEFAULT_FIELD.x)
    with pytest.raises(ValueError):
        dlog_alpha(DEFAULT_FIELD.x)
    with pytest.raises(ValueError):
        dlog_alpha(DEFAULT_FIELD.zero)


def test_squaring_permutes_c():
    bits = {a.bits for a in c_elements()}
    assert {(a * a).bits for a in c_elements()} == bits


def test_doubling_orbits_partition_the_generators():
    orbit5 = doubling_orbit(5)
    orbit1 = doubling_orbit(1)
    assert orbit5 == frozenset({5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22})
    assert len(orbit1) == 11
    assert orbit1 | orbit5 == frozenset(range(1, 23))
    assert doubling_orbit(23) == frozenset({23})


def test_bases_are_independent():
    assert check_independence(basis_a().elements)
    assert check_independence(basis_chi().elements)


def test_dependent_set_detected():
    a = alpha_power(1)
    b = alpha_power(2)
    assert not check_independence([a, b, a + b])
    assert not check_independence([a, a])


def test_ordered_basis_rejects_dependent_elements():
    a = alpha_power(1)
    b = alpha_power(2)
    elements = [a, b, a + b] + [DEFAULT_FIELD.x ** i for i in range(3, 11)]
    with pytest.raises(ValueError):
        OrderedBasis("bad", tuple(elements))


def test_express_reconstruct_round_trip_all_elements():
    for basis in (basis_a(), basis_chi()):
        for bits in range(2048):
            a = DEFAULT_FIELD.element(bits)
            coords = express_in_basis(a, basis)
            assert reconstruct(coords, basis) == a


def test_chi_coordinates_are_raw_bits():
    rng = random.Random(107)
    for _ in range(200):
        a = DEFAULT_FIELD.element(rng.randrange(2048))
        assert express_in_basis(a, basis_chi()).bits == a.bits


def test_x_squared_in_basis_a_matches_table():
    coords = express_in_basis(DEFAULT_FIELD.x ** 2, basis_a())
    expected = next(expr for i, expr in X_IN_A if i == 2)
    assert expression_string(coords) == expected


def test_change_of_basis_round_trip():
    a_basis, chi_basis = basis_a(), basis_chi()
    p = change_of_basis(a_basis, chi_basis)
    q = change_of_basis(chi_basis, a_basis)
    assert (p * q).rows == tuple(1 << i for i in range(11))
    from m23rep.bitmatrix import mat_vec

    rng = random.Random(108)
    for _ in range(200):
        a = DEFAULT_FIELD.element(rng.randrange(2048))
        assert mat_vec(p, express_in_basis(a, a_basis).bits) == express_in_basis(a, chi_basis).bits


def test_expression_string_forms():
    assert expression_string(CoordVector(0, "A")) == "0"
    assert expression_string(CoordVector(1, "A")) == "1"
    assert expression_string(CoordVector(0b110, "A")) == "a2+a"
    assert expression_string(CoordVector(0b1000000001, "A")) == "a9+1"


def test_parse_expression_round_trip():
    rng = random.Random(109)
    for _ in range(1000):
        bits = rng.randrange(2048)
        assert parse_expression(expression_string(CoordVector(bits, "A"))).bits == bits


def test_parse_expression_rejects_garbage():
    with pytest.raises(ValueError):
        parse_expression("a9+b2")
    with pytest.raises(ValueError):
        parse_expression("a9++1")


def test_express_rejects_foreign_spec():
    other = FieldSpec(4, 0b10011)
    with pytest.raises(ValueError):
        express_in_basis(other.one, basis_a())
