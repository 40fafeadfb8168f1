"""Coefficient fields and the --field selector."""
from fractions import Fraction as F

import pytest

from treebundles.fields import (FpElement, PrimeField, RationalField,
                                field_from_name)


def test_rational_field_basics():
    fld = RationalField()
    assert fld.char == 0 and fld.name == "q"
    assert fld.zero == F(0) and fld.one == F(1)
    assert fld.of(-3) == F(-3)
    assert fld.parse(" 2/3 ") == F(2, 3)
    assert fld.to_str(F(-1, 4)) == "-1/4"
    with pytest.raises(ValueError, match="rational"):
        fld.parse("x")
    with pytest.raises(ValueError):
        fld.parse("1/0")


def test_prime_field_construction():
    fld = PrimeField(101)
    assert fld.char == 101 and fld.name == "p:101"
    with pytest.raises(ValueError, match="prime"):
        PrimeField(91)  # 7 * 13


def test_fp_arithmetic():
    fld = PrimeField(7)
    a, b = fld.of(3), fld.of(5)
    assert (a + b).val == 1
    assert (a - b).val == 5
    assert (a * b).val == 1
    assert (a / b) * b == a
    assert -a == fld.of(4)
    assert bool(fld.zero) is False and bool(a) is True
    with pytest.raises(ZeroDivisionError):
        a / fld.zero


def test_fp_int_lifting():
    a = FpElement(3, 7)
    assert a + 4 == FpElement(0, 7)
    assert 4 + a == FpElement(0, 7)
    assert 1 - a == FpElement(5, 7)
    assert 2 * a == FpElement(6, 7)
    assert 1 / a == FpElement(5, 7)  # 3 * 5 = 15 = 1 mod 7


def test_fp_mixed_moduli_rejected():
    with pytest.raises(ValueError, match="mixed moduli"):
        FpElement(1, 7) + FpElement(1, 11)


def test_fp_parse_and_print():
    fld = PrimeField(13)
    assert fld.parse("-1") == fld.of(12)
    assert fld.parse("1/2") == fld.of(7)
    assert fld.to_str(fld.of(20)) == "7"


def test_field_from_name():
    assert field_from_name("q") == RationalField()
    assert field_from_name("p:101") == PrimeField(101)
    with pytest.raises(ValueError, match="unknown field"):
        field_from_name("gf8")


def test_field_equality_and_hash():
    assert RationalField() == RationalField()
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert hash(PrimeField(7)) == hash(PrimeField(7))
