from fractions import Fraction

import pytest

from extremal_lie.scalars import (
    QQ,
    GF,
    CharacteristicTwoUnsupported,
    NotPrime,
    field_create,
    sqrt,
)

from helpers import rng


def test_field_create_rationals():
    f = field_create("rationals")
    assert f.characteristic == 0
    assert f.kind == "rationals"


def test_field_create_gf7():
    f = field_create("prime-field", 7)
    assert f.characteristic == 7


def test_gf2_rejected():
    with pytest.raises(CharacteristicTwoUnsupported):
        field_create("prime-field", 2)


def test_composite_modulus_rejected():
    with pytest.raises(NotPrime):
        field_create("prime-field", 9)
    with pytest.raises(NotPrime):
        field_create("prime-field", 91)


def test_sqrt_rationals():
    assert sqrt(QQ.scalar(4)) == QQ.scalar(2)
    assert sqrt(QQ.scalar(Fraction(9, 4))) == QQ.scalar(Fraction(3, 2))
    assert sqrt(QQ.scalar(2)) is None
    assert sqrt(QQ.scalar(-4)) is None


def test_sqrt_gf7_exhaustive():
    f = GF(7)
    squares = {}
    for a in range(7):
        squares.setdefault(a * a % 7, set()).add(a)
    for a in range(7):
        s = sqrt(f.scalar(a))
        if a in squares:
            assert s is not None
            assert s.value == min(squares[a])
            assert (s * s).value == a
        else:
            assert s is None
    # the documented choices
    assert sqrt(f.scalar(2)).value == 3
    assert sqrt(f.scalar(3)) is None


def test_sqrt_large_prime_property():
    f = GF(10007)
    r = rng("sqrt")
    for _ in range(50):
        a = f.scalar(r.randrange(10007))
        s = sqrt(a)
        if s is not None:
            assert s * s == a
            assert s.value <= 10007 - s.value


def test_field_axioms_random_samples():
    r = rng("axioms")
    for field in (QQ, GF(11)):
        for _ in range(60):
            a = field.scalar(r.randint(-20, 20))
            b = field.scalar(r.randint(-20, 20))
            c = field.scalar(r.randint(-20, 20))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a + (-a) == field.scalar(0)
            if b:
                assert b * (a / b) == a


def test_serialization_round_trip():
    for field, vals in ((QQ, ["3", "-5/7", "0"]), (GF(11), ["0", "7", "10"])):
        for s in vals:
            assert field.to_str(field.from_str(s)) == s


def test_scalar_immutable_and_hashable():
    a = QQ.scalar(Fraction(1, 2))
    with pytest.raises(AttributeError):
        a.value = Fraction(1)
    assert hash(a) == hash(QQ.scalar(Fraction(1, 2)))
