import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from colorlie.errors import ConductorMismatch, NotDivisible, ParseError
from colorlie.scalars import (
    CycloScalar,
    cyclotomic_polynomial,
    format_scalar,
    parse_scalar,
    totient,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [totient(m) for m in (1, 2, 3, 4, 6, 12)] == [1, 1, 2, 2, 2, 4]


def test_root_examples():
    assert CycloScalar.root(1, 0) == 1
    assert CycloScalar.root(2, 1) == -1
    # x^2 reduced mod Phi_4 = x^2 + 1 gives -1
    assert CycloScalar.root(4, 2) == -1
    # k is taken mod m
    assert CycloScalar.root(4, 5) == CycloScalar.root(4, 1)


def test_mul_of_conjugates():
    # (1 + zeta_4)(1 - zeta_4) = 1 - zeta_4^2 = 2, by hand expansion
    one = CycloScalar.one(4)
    z = CycloScalar.root(4, 1)
    assert (one + z) * (one - z) == 2


def test_root_inverse_is_conjugate_power():
    for m in (3, 4, 6, 12):
        for k in range(m):
            zk = CycloScalar.root(m, k)
            assert zk.inv() == CycloScalar.root(m, m - k)


def test_additive_inverse():
    a = CycloScalar(12, [Fraction(1, 2), 3, 0, Fraction(-7, 3)])
    assert a + (-a) == 0


def test_lift_examples():
    minus1 = CycloScalar.root(2, 1)
    assert minus1.lift(4) == CycloScalar.root(4, 2)
    q = CycloScalar.from_rational(Fraction(5, 7), 1)
    lifted = q.lift(6)
    assert lifted.conductor == 6 and lifted.as_rational() == Fraction(5, 7)
    # zeta_3 = zeta_6^2; reducing x^2 mod Phi_6 = x^2 - x + 1 gives x - 1
    z3 = CycloScalar.root(3, 1)
    assert z3.lift(6).coeffs == (Fraction(-1), Fraction(1))
    assert z3.lift(6) == CycloScalar.root(6, 2)


def test_lift_not_divisible():
    with pytest.raises(NotDivisible):
        CycloScalar.root(4, 1).lift(6)


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        CycloScalar.root(4, 1) + CycloScalar.root(3, 1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CycloScalar.zero(4).inv()


def test_root_has_exact_order():
    for m in (1, 2, 3, 4, 6, 12):
        z = CycloScalar.root(m, 1)
        assert z ** m == 1
        for k in range(1, m):
            assert z ** k != 1


def _random_scalar(rng, m):
    return CycloScalar(
        m,
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(totient(m))],
    )


def test_field_axioms_random_samples():
    rng = random.Random(20240501)
    for _ in range(500):
        m = rng.choice((1, 2, 3, 4, 6, 12))
        a, b, c = (_random_scalar(rng, m) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        if a != 0:
            assert a * a.inv() == 1


def test_canonical_form_is_path_independent():
    rng = random.Random(7)
    for _ in range(100):
        m = rng.choice((3, 4, 6, 12))
        parts = [_random_scalar(rng, m) for _ in range(4)]
        shuffled = parts[:]
        rng.shuffle(shuffled)
        prod1 = parts[0]
        for p in parts[1:]:
            prod1 = prod1 * p
        prod2 = shuffled[0]
        for p in shuffled[1:]:
            prod2 = prod2 * p
        assert prod1.coeffs == prod2.coeffs


@given(
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)
def test_rational_embedding_respects_arithmetic(p1, q1, p2, q2):
    a, b = Fraction(p1, q1), Fraction(p2, q2)
    fa = CycloScalar.from_rational(a, 12)
    fb = CycloScalar.from_rational(b, 12)
    assert (fa * fb).as_rational() == a * b
    assert (fa + fb).as_rational() == a + b


def test_format_examples():
    s = CycloScalar(12, [Fraction(-3), 0, Fraction(1, 2), 0])
    assert format_scalar(s) == "1/2*z^2 - 3"
    assert format_scalar(CycloScalar.zero(12)) == "0"
    assert format_scalar(CycloScalar.root(4, 1)) == "z"
    assert format_scalar(-CycloScalar.root(4, 1)) == "-z"
    assert format_scalar(CycloScalar.from_rational(Fraction(-2, 3), 3)) == "-2/3"


def test_parse_examples():
    assert parse_scalar("1/2*z^2 - 3", 12).coeffs == (
        Fraction(-3), Fraction(0), Fraction(1, 2), Fraction(0),
    )
    assert parse_scalar("2", 1) == 2
    assert parse_scalar("-7/3", 1) == Fraction(-7, 3)
    assert parse_scalar("z", 2) == -1  # reduced mod Phi_2
    assert parse_scalar("z^2 + z + 1", 3) == 0  # Phi_3 itself
    assert parse_scalar("-z + 2*z", 4) == CycloScalar.root(4, 1)


def test_parse_rejects_garbage():
    for bad in ("", "z^", "1//2", "q", "1 + + 2", "*z"):
        with pytest.raises(ParseError):
            parse_scalar(bad, 4)


def test_format_parse_round_trip():
    rng = random.Random(99)
    for _ in range(200):
        m = rng.choice((1, 2, 3, 4, 6, 12))
        a = _random_scalar(rng, m)
        assert parse_scalar(format_scalar(a), m) == a
