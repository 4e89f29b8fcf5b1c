"""Polynomial arithmetic over GF(2), bit-packed into Python integers.

A polynomial a_0 + a_1 x + ... + a_d x^d is stored as the integer whose
bit i is a_i, so x^4+x^3+x^2+1 is 0b11101 = 29.  Addition is XOR,
multiplication is a carry-less product, and division is long division on
bit positions.  Integers keep everything exact at any degree and make
equality, hashing and printing trivial.

The zero polynomial has degree NEG_INF (float("-inf")) rather than an
ordinary integer, so deg(p*q) == deg(p) + deg(q) holds for every pair
and accidental arithmetic on the sentinel is loud.
"""

from __future__ import annotations

from .errors import PolyParseError

NEG_INF = float("-inf")


def _mul_bits(p: int, q: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    if p.bit_count() > q.bit_count():
        p, q = q, p
    out = 0
    while p:
        low = p & -p
        out ^= q << (low.bit_length() - 1)
        p ^= low
    return out


def _divmod_bits(p: int, d: int) -> tuple[int, int]:
    if d == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dd = d.bit_length() - 1
    quo = 0
    while p.bit_length() - 1 >= dd and p:
        shift = p.bit_length() - 1 - dd
        quo |= 1 << shift
        p ^= d << shift
    return quo, p


def _gcd_bits(p: int, q: int) -> int:
    while q:
        p, q = q, _divmod_bits(p, q)[1]
    return p


class BinPoly:
    """An immutable polynomial over GF(2).

    Construct from the packed integer directly, from a coefficient list
    (lowest degree first), or from text via parse().
    """

    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ValueError("packed representation must be non-negative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BinPoly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> "BinPoly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {c!r} is not 0 or 1")
            bits |= c << i
        return cls(bits)

    @property
    def degree(self):
        """Degree of the polynomial, NEG_INF for zero."""
        return self.bits.bit_length() - 1 if self.bits else NEG_INF

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def coeffs(self) -> tuple:
        """Coefficients lowest degree first; () for the zero polynomial."""
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return isinstance(other, BinPoly) and self.bits == other.bits

    def __hash__(self):
        return hash(("BinPoly", self.bits))

    def __add__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mul_bits(self.bits, other.bits))

    def __divmod__(self, other: "BinPoly"):
        q, r = _divmod_bits(self.bits, other.bits)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: "BinPoly") -> "BinPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "BinPoly") -> "BinPoly":
        return divmod(self, other)[1]

    def __lshift__(self, k: int) -> "BinPoly":
        return BinPoly(self.bits << k)

    def divides(self, other: "BinPoly") -> bool:
        return bool(self) and other % self == ZERO

    def to_text(self) -> str:
        """Render in monomial form, exponents descending.

        Degree-1 and degree-0 terms print as "x" and "1", so the zero
        polynomial is "0" and 0b11101 round-trips as "x^4+x^3+x^2+1".
        """
        if not self.bits:
            return "0"
        terms = []
        for e in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> e) & 1:
                terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)

    def __repr__(self):
        return f"BinPoly({self.to_text()})"


ZERO = BinPoly(0)
ONE = BinPoly(1)
X = BinPoly(2)


def b_mul(p: BinPoly, q: BinPoly) -> BinPoly:
    """Product of two polynomials over GF(2)."""
    return p * q


def b_divmod(p: BinPoly, d: BinPoly) -> tuple[BinPoly, BinPoly]:
    """Quotient and remainder of p by d.

    Raises ZeroDivisionError when d is the zero polynomial.
    """
    return divmod(p, d)


def b_gcd(ps) -> BinPoly:
    """Greatest common divisor of a non-empty collection of polynomials.

    Zero entries are absorbed (gcd(p, 0) == p).  All-zero input has no
    gcd and raises ValueError.  The result is monic by construction
    since every nonzero polynomial over GF(2) is monic.
    """
    acc = 0
    seen = False
    for p in ps:
        seen = True
        acc = _gcd_bits(acc, p.bits) if acc else p.bits
    if not seen:
        raise ValueError("gcd of an empty collection")
    if acc == 0:
        raise ValueError("gcd undefined: all inputs are zero")
    return BinPoly(acc)


def xn_minus_1(n: int) -> BinPoly:
    """x^n + 1 over GF(2) (minus and plus coincide in characteristic 2)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return BinPoly((1 << n) | 1)


def two_adic_split(n: int) -> tuple[int, int]:
    """Split n = 2^e * m with m odd; returns (e, m).

    Over GF(2), x^n+1 = (x^m+1)^(2^e), so e tells how far x^n+1 is from
    squarefree and m indexes the distinct irreducible factors.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    e = (n & -n).bit_length() - 1
    return e, n >> e


def _parse_term(text: str, start: int, end: int) -> int:
    """Parse one monomial term, returning its exponent."""
    i = start
    while i < end and text[i].isspace():
        i += 1
    j = end
    while j > i and text[j - 1].isspace():
        j -= 1
    if i == j:
        raise PolyParseError("empty term", start)
    term = text[i:j]
    if term == "1":
        return 0
    if term == "x":
        return 1
    if term.startswith("x^"):
        exp = term[2:]
        if not exp or not exp.isdigit():
            raise PolyParseError("expected digits after 'x^'", i + 2)
        return int(exp)
    # point at the first character that breaks the monomial shape
    bad = i if term[0] not in "x1" else i + 1
    raise PolyParseError(f"unrecognized term {term!r}", bad)


def parse(text: str) -> BinPoly:
    """Parse a GF(2) polynomial from text.

    Two forms are accepted: monomials joined by '+', in any order and
    with optional whitespace ("x^4+x^3+x^2+1", "1 + x"), or a binary
    literal whose bit i is the coefficient of x^i ("0b11101").
    Repeated exponents are rejected rather than silently cancelled.

    Raises PolyParseError with the offset of the offending character.
    """
    stripped = text.strip()
    if not stripped:
        raise PolyParseError("empty polynomial", 0)
    lead = len(text) - len(text.lstrip())
    if stripped.startswith("0b"):
        digits = stripped[2:]
        if not digits:
            raise PolyParseError("expected binary digits after '0b'", lead + 2)
        for k, ch in enumerate(digits):
            if ch not in "01":
                raise PolyParseError(f"invalid binary digit {ch!r}", lead + 2 + k)
        return BinPoly(int(digits, 2))
    if stripped == "0":
        return ZERO
    bits = 0
    start = 0
    while True:
        cut = text.find("+", start)
        end = cut if cut != -1 else len(text)
        exp = _parse_term(text, start, end)
        if (bits >> exp) & 1:
            raise PolyParseError(f"duplicate term for exponent {exp}", start)
        bits |= 1 << exp
        if cut == -1:
            break
        start = cut + 1
    return BinPoly(bits)
