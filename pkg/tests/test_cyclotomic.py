from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import cyc_numbers
from formalfj.cyclotomic import (
    ONE,
    ZERO,
    CycNumber,
    cyc,
    cyclotomic_poly,
    euler_phi,
    frac_str,
    parse_frac,
    root_of_unity,
    sqrt_integer,
)
from formalfj.errors import DivisionByZero


def z(n, e=1):
    return CycNumber.zeta(n, e)


def test_i_squared():
    assert z(4) * z(4) == -1


def test_zeta8_difference_of_squares():
    assert (1 + z(8)) * (1 - z(8)) == 1 - z(8, 2)


def test_cyclotomic_polys():
    assert list(cyclotomic_poly(1)) == [-1, 1]
    assert list(cyclotomic_poly(4)) == [1, 0, 1]
    assert list(cyclotomic_poly(12)) == [1, 0, -1, 0, 1]
    assert [euler_phi(n) for n in (1, 2, 8, 12, 15)] == [1, 1, 4, 4, 8]


def test_conductor_merge_and_minimal_hash():
    a = z(4) + z(3)
    assert a.conductor == 12
    assert z(12, 3) == z(4)
    assert hash(z(12, 3)) == hash(z(4))
    assert (z(8) ** 2).minimal().conductor == 4
    assert (z(3) + z(3, 2)) == -1
    assert hash(z(3) + z(3, 2)) == hash(cyc(-1))


def test_root_of_unity_values():
    assert root_of_unity(Fraction(1, 2)) == -1
    assert root_of_unity(Fraction(5, 4)) == z(4)
    assert root_of_unity(3) == ONE


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12, 18, 20])
def test_sqrt_integer(n):
    s = sqrt_integer(n)
    assert s * s == n
    assert abs(complex(s) - n ** 0.5) < 1e-9


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        (z(5) - z(5)).inverse()


def test_complex_embedding():
    assert abs(complex(z(8)) - cmath.exp(2j * cmath.pi / 8)) < 1e-12


def test_frac_strings():
    assert frac_str(Fraction(3)) == "3/1"
    assert parse_frac("-7/2") == Fraction(-7, 2)
    assert parse_frac("4") == 4
    with pytest.raises(ValueError):
        parse_frac("0.5")


@given(cyc_numbers(), cyc_numbers())
def test_add_sub_inverse(a, b):
    assert (a + b) - b == a
    assert a + b == b + a


@given(cyc_numbers(), cyc_numbers(), cyc_numbers())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(cyc_numbers())
def test_field_inverse(a):
    if a.is_zero():
        return
    assert a / a == ONE
    assert a * a.inverse() == 1


@given(cyc_numbers())
def test_conjugate_matches_embedding(a):
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9


@given(cyc_numbers())
def test_json_round_trip(a):
    assert CycNumber.from_json(a.to_json()) == a
