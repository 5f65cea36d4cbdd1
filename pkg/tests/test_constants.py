from fractions import Fraction

import pytest

from rpisigma.algebra import CyclotomicField, cyclotomic_polynomial, is_primitive_root


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 12])
def test_zeta_has_exact_order(m):
    field = CyclotomicField(m)
    z = field.zeta()
    assert z**m == field.one
    for d in range(1, m):
        if m % d == 0:
            assert z**d != field.one
    assert is_primitive_root(z, m)


@pytest.mark.parametrize("m", [2, 3, 4, 6, 12])
def test_root_powers_sum_to_zero(m):
    field = CyclotomicField(m)
    z = field.zeta()
    total = field.zero
    for j in range(m):
        total = total + z**j
    assert not total


def test_field_arithmetic_and_inverse():
    field = CyclotomicField(4)
    z = field.zeta()
    assert z * z == field.from_rational(-1)
    a = z + 3
    assert a * a.inverse() == field.one
    assert (a / a) == field.one
    assert (2 * z - z) == z
    assert (z - z) == field.zero
    assert z**-1 == -z
    assert field.from_rational(Fraction(2, 3)) * 3 == field.from_rational(2)


def test_rational_detection():
    field = CyclotomicField(6)
    z = field.zeta()
    assert not z.is_rational()
    assert (z**6).is_rational()
    assert (z**3).rational_value() == -1
    with pytest.raises(ValueError):
        z.rational_value()


def test_primitive_root_negatives():
    field = CyclotomicField(4)
    z = field.zeta()
    assert not is_primitive_root(z * z, 4)
    assert is_primitive_root(z * z, 2)
    assert not is_primitive_root(field.one, 2)
    assert not is_primitive_root(field.zero, 1)
