from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jjalg import GF, QQ, Scalar, parse_field
from jjalg.errors import DivisionByZero, FieldMismatch, NonPrimeModulus
from jjalg.field import arith

PRIMES = [2, 3, 5, 7, 101]


@pytest.mark.parametrize("text,expected", [("Q", QQ), ("Fp 5", GF(5)), ("F7", GF(7)), ("GF(3)", GF(3)), ("Fp5", GF(5))])
def test_parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize("p", [1, 4, 9, 15, 0, -3])
def test_non_prime_modulus(p):
    with pytest.raises(NonPrimeModulus):
        GF(p)


def test_non_prime_modulus_is_value_error():
    with pytest.raises(ValueError):
        parse_field("Fp 4")


def test_unknown_field():
    with pytest.raises(ValueError):
        parse_field("R")


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        GF(5).inv(0)
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


def test_fraction_reduction_mod_p():
    F = GF(5)
    assert F(Fraction(1, 2)) == 3
    with pytest.raises(DivisionByZero):
        F(Fraction(1, 5))


def test_rational_parse_and_format():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert QQ.format(Fraction(4)) == "4"
    for bad in ("1/0", "x", "1/-2", ""):
        with pytest.raises(ValueError):
            QQ.parse(bad)


def test_elements_and_squares():
    F = GF(7)
    assert list(F.elements()) == list(range(7))
    assert list(F.nonzero_elements()) == list(range(1, 7))
    squares = {x for x in F.elements() if F.is_square(x)}
    assert squares == {x * x % 7 for x in range(7)}


def test_scalar_wrapper():
    F = GF(5)
    a, b = Scalar(F, 2), Scalar(F, 4)
    assert (a + b).value == 1
    assert (a * b).value == 3
    assert (a / b).value == 3
    assert a.inverse().value == 3
    assert arith("neg", a).value == 3
    assert arith("eq", a, Scalar(F, 7))
    with pytest.raises(FieldMismatch):
        a + Scalar(GF(7), 1)


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = GF(p)
    x, y, z = F(x), F(y), F(z)
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.add(x, F.neg(x)) == 0
    assert F.sub(x, y) == F.add(x, F.neg(y))
    if x:
        assert F.mul(x, F.inv(x)) == 1


@given(st.fractions(), st.fractions())
def test_rational_format_round_trip(x, y):
    assert QQ.parse(QQ.format(x)) == x
    if y:
        assert QQ.mul(QQ.div(x, y), y) == x


@given(st.sampled_from(PRIMES), st.integers())
def test_prime_field_format_round_trip(p, x):
    F = GF(p)
    assert F.parse(F.format(F(x))) == F(x)
