"""Binary polynomial layer: arithmetic, divisors, parsing."""

import pytest

from qtcodes.errors import PolyParseError
from qtcodes.gf2poly import (
    NEG_INF,
    ONE,
    X,
    ZERO,
    BinPoly,
    b_divmod,
    b_gcd,
    b_mul,
    parse,
    two_adic_split,
    xn_minus_1,
)


def test_construction_and_degree():
    p = BinPoly(0b1011)  # x^3+x+1
    assert p.degree == 3
    assert p.coeffs() == (1, 1, 0, 1)
    assert p.coeff(0) == 1 and p.coeff(2) == 0 and p.coeff(99) == 0
    assert BinPoly.from_coeffs([1, 1, 0, 1]) == p
    assert ZERO.degree == NEG_INF
    assert not ZERO and ONE and X


def test_immutable():
    p = BinPoly(3)
    with pytest.raises(AttributeError):
        p.bits = 5


def test_add_is_xor():
    a, b = BinPoly(0b1011), BinPoly(0b0110)
    assert a + b == BinPoly(0b1101)
    assert a + a == ZERO


def test_mul_known_products():
    x1 = parse("x+1")
    assert x1 * x1 == parse("x^2+1")  # frobenius: squaring has no cross terms
    assert parse("x^2+x+1") * x1 == parse("x^3+1")
    assert x1 * ZERO == ZERO
    assert b_mul(x1, ONE) == x1


def test_divmod_reconstructs():
    a = parse("x^7+x^3+x+1")
    b = parse("x^3+x+1")
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    assert a // b == q and a % b == r
    assert b_divmod(a, b) == (q, r)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(ONE, ZERO)


def test_gcd():
    assert b_gcd([parse("x^3+1"), parse("x^2+1")]) == parse("x+1")
    assert b_gcd([ZERO, parse("x^2+1"), ZERO]) == parse("x^2+1")
    with pytest.raises(ValueError):
        b_gcd([ZERO, ZERO])
    with pytest.raises(ValueError):
        b_gcd([])


def test_divides_and_shift():
    assert parse("x+1").divides(parse("x^3+1"))
    assert not parse("x^2+x+1").divides(parse("x^2+1"))
    assert (ONE << 4) == parse("x^4")


def test_xn_minus_1_and_split():
    assert xn_minus_1(3) == parse("x^3+1")
    assert two_adic_split(12) == (2, 3)
    assert two_adic_split(9) == (0, 9)
    assert two_adic_split(8) == (3, 1)


def test_parse_round_trip():
    for text in ("x^3+x+1", "1", "x", "x^5+x^4+x^3+x^2+x+1"):
        p = parse(text)
        assert p.to_text() == text
        assert parse(p.to_text()) == p


def test_parse_flexible_forms():
    assert parse("1 + x + x^3") == parse("x^3+x+1")
    assert parse("  x^2 +1 ") == parse("x^2+1")
    assert parse("0b1011") == BinPoly(0b1011)


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError) as ei:
        parse("x^+1")
    assert ei.value.exit_code == 5
    assert "digits" in str(ei.value)
    assert ei.value.position == 2
    with pytest.raises(PolyParseError):
        parse("x^2+x^2")  # duplicate exponent
    with pytest.raises(PolyParseError):
        parse("x^2+y")
    with pytest.raises(PolyParseError):
        parse("0b10z1")
    with pytest.raises(PolyParseError):
        parse("")
