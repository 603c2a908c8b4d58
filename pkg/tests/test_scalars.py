"""Exact cyclotomic scalar arithmetic."""

import random
from fractions import Fraction

import pytest

from awpa.scalars import (
    CycScalar,
    cyclotomic_polynomial,
    euler_phi,
    parse_scalar,
    root_of_unity,
)


def test_rational_arithmetic():
    a = CycScalar.from_rational(Fraction(1, 2))
    b = CycScalar.from_rational(Fraction(1, 3))
    assert a + b == Fraction(5, 6)


def test_zeta4_squared():
    z = root_of_unity(4)
    assert z * z == -1


def test_zeta3_squared_reduces():
    z = root_of_unity(3)
    # z^2 = -1 - z modulo x^2 + x + 1
    assert z * z == -1 - z
    assert (z * z).coeffs == (Fraction(-1), Fraction(-1))


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(6, 6) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 12])
def test_root_has_exact_order(m):
    z = root_of_unity(m)
    powers = [z**k for k in range(1, m + 1)]
    assert powers[-1] == 1
    for k in range(1, m):
        assert powers[k - 1] != 1


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert len(cyclotomic_polynomial(12)) == euler_phi(12) + 1


def random_scalar(rng, m):
    phi = euler_phi(m)
    return CycScalar(
        m, [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(phi)]
    )


@pytest.mark.parametrize("m", [1, 3, 4, 5, 12])
def test_field_axioms(m):
    rng = random.Random(m)
    for _ in range(25):
        a, b, c = (random_scalar(rng, m) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b


@pytest.mark.parametrize("m,k", [(2, 3), (3, 2), (4, 3), (1, 12)])
def test_embedding_commutes_with_arithmetic(m, k):
    rng = random.Random(m * 100 + k)
    big = m * k
    for _ in range(20):
        a, b = random_scalar(rng, m), random_scalar(rng, m)
        assert (a + b).lift(big) == a.lift(big) + b.lift(big)
        assert (a * b).lift(big) == a.lift(big) * b.lift(big)
        if not a.is_zero():
            assert a.inverse().lift(big) == a.lift(big).inverse()


def test_cross_conductor_equality():
    assert root_of_unity(2, 1) == root_of_unity(4, 2)
    assert root_of_unity(3, 1) == root_of_unity(6, 2)
    assert root_of_unity(6, 3) == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycScalar.one() / CycScalar.zero()


@pytest.mark.parametrize("m", [1, 2, 3, 4, 12])
def test_str_parse_roundtrip(m):
    rng = random.Random(m)
    for _ in range(20):
        a = random_scalar(rng, m)
        assert parse_scalar(str(a), m) == a


def test_parse_forms():
    assert parse_scalar("5/6") == Fraction(5, 6)
    assert parse_scalar("-3") == -3
    assert parse_scalar("1/2 + 1/2*z", 4) * 2 == 1 + root_of_unity(4)
    assert parse_scalar("z^2", 3) == root_of_unity(3, 2)
    assert parse_scalar("(1 - z)", 4) == 1 - root_of_unity(4)
