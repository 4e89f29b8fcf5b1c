"""The chain ring R = F2 + u*F2 with u^2 = 0, and the quotient S_n.

Every object here is two bit-masks: an element a + u*b of R^N keeps the
a-coefficients in one integer and the b-coefficients in another, bit i
holding position i.  Addition is XOR on both masks.  The unit 1+u
satisfies (1+u)^2 = 1, which is what makes x^n - (1+u) a well-behaved
modulus: in S_n = R[x]/(x^n - (1+u)) we have x^n = 1+u and x^(2n) = 1.

Lee weights are 0, 1, 2, 1 for 0, 1, u, 1+u.  The Gray map phi sends
a + u*b to the binary pair (b, a+b) per symbol and is an isometry from
(R^N, Lee) to (F2^(2N), Hamming).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PolyParseError
from .gf2poly import ZERO, ONE, BinPoly, _mul_bits, parse


@dataclass(frozen=True)
class RingElem:
    """One element a + u*b of R, with a and b in {0, 1}."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError("RingElem parts must be 0 or 1")

    def __add__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: "RingElem") -> "RingElem":
        # (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + b1 a2)
        return RingElem(self.a & other.a, (self.a & other.b) ^ (self.b & other.a))

    @property
    def lee(self) -> int:
        return self.a + 2 * (self.b & ~self.a & 1)

    def gray(self) -> tuple:
        """Image under phi: the bit pair (b, a+b)."""
        return (self.b, self.a ^ self.b)

    def is_unit(self) -> bool:
        return self.a == 1

    def __repr__(self):
        return ("0", "1", "u", "1+u")[self.a + 2 * self.b]


R_ZERO = RingElem(0, 0)
R_ONE = RingElem(1, 0)
R_U = RingElem(0, 1)
R_ONE_PLUS_U = RingElem(1, 1)
R_ALL = (R_ZERO, R_ONE, R_U, R_ONE_PLUS_U)


def r_mul(x: RingElem, y: RingElem) -> RingElem:
    """Product in R."""
    return x * y


def _fold(n: int, a: int, b: int) -> tuple:
    """Reduce a wide packed R-polynomial mod x^n - (1+u).

    Bits at positions >= n are peeled off n at a time and re-added at
    the bottom scaled by 1+u, since (h)(1+u) = h + u*h for the pure
    part and (u*h)(1+u) = u*h for the u-part.
    """
    mask = (1 << n) - 1
    while (a | b) >> n:
        ha, a = a >> n, a & mask
        hb, b = b >> n, b & mask
        a ^= ha
        b ^= ha ^ hb
    return a, b


class SnElem:
    """A residue in S_n = R[x]/(x^n - (1+u)), coefficients bit-packed.

    a holds the F2 part and b the u part, each an n-bit mask with bit i
    the coefficient of x^i.
    """

    __slots__ = ("n", "a", "b")

    def __init__(self, n: int, a: int, b: int = 0):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if not (0 <= a < (1 << n) and 0 <= b < (1 << n)):
            raise ValueError("coefficient masks out of range for this n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("SnElem is immutable")

    def __bool__(self):
        return bool(self.a | self.b)

    def __eq__(self, other):
        return (
            isinstance(other, SnElem)
            and self.n == other.n
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash(("SnElem", self.n, self.a, self.b))

    def __add__(self, other: "SnElem") -> "SnElem":
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: S_{self.n} vs S_{other.n}")
        return SnElem(self.n, self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: "SnElem") -> "SnElem":
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: S_{self.n} vs S_{other.n}")
        wide_a = _mul_bits(self.a, other.a)
        wide_b = _mul_bits(self.a, other.b) ^ _mul_bits(self.b, other.a)
        return SnElem(self.n, *_fold(self.n, wide_a, wide_b))

    def times_u(self) -> "SnElem":
        """u * self; the a part moves to the u part, u^2 dies."""
        return SnElem(self.n, 0, self.a)

    def times_x(self) -> "SnElem":
        """x * self, the twisted cyclic shift of the coefficients."""
        n, a, b = self.n, self.a, self.b
        mask = (1 << n) - 1
        ha, hb = a >> (n - 1), b >> (n - 1)
        return SnElem(n, ((a << 1) & mask) | ha, ((b << 1) & mask) | (ha ^ hb))

    def scale(self, c: RingElem) -> "SnElem":
        a = self.a if c.a else 0
        b = self.b if c.a else 0
        if c.b:
            b ^= self.a
        return SnElem(self.n, a, b)

    def coeff(self, i: int) -> RingElem:
        return RingElem((self.a >> i) & 1, (self.b >> i) & 1)

    def coeffs(self) -> tuple:
        return tuple(self.coeff(i) for i in range(self.n))

    def parts(self) -> tuple:
        """The F2 part and u part as polynomials."""
        return BinPoly(self.a), BinPoly(self.b)

    def to_vec(self) -> "RVec":
        return RVec(self.n, self.a, self.b)

    def to_text(self) -> str:
        if not self:
            return "0"
        pieces = []
        if self.a:
            pieces.append(BinPoly(self.a).to_text())
        if self.b:
            pieces.append("u" if self.b == 1 else f"u*({BinPoly(self.b).to_text()})")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SnElem(n={self.n}, {self.to_text()})"


def sn_reduce(p, n: int) -> SnElem:
    """Reduce a polynomial into S_n.

    Accepts a BinPoly (pure F2 part), a pair (a_poly, b_poly) for
    a + u*b, or an SnElem already in S_n.  Terms of degree n and above
    fold down through x^n = 1+u, so e.g. x^3+1 reduces to u in S_3.
    """
    if isinstance(p, SnElem):
        if p.n != n:
            raise ValueError(f"cannot reinterpret S_{p.n} element in S_{n}")
        return p
    if isinstance(p, BinPoly):
        a, b = p.bits, 0
    else:
        pa, pb = p
        a, b = pa.bits, pb.bits
    return SnElem(n, *_fold(n, a, b))


def sn_mul(x: SnElem, y: SnElem) -> SnElem:
    """Product in S_n; both factors must share the same n."""
    return x * y


class RVec:
    """A vector in R^N, bit-packed like SnElem but with no x-action.

    Used for codewords: position i of the vector lives at bit i of both
    masks.  Hashable, so codes can be plain sets of RVec.
    """

    __slots__ = ("n", "a", "b")

    def __init__(self, n: int, a: int, b: int = 0):
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        if not (0 <= a < (1 << n) and 0 <= b < (1 << n)):
            raise ValueError("component masks out of range for this length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("RVec is immutable")

    @classmethod
    def from_symbols(cls, symbols) -> "RVec":
        a = b = 0
        count = 0
        for i, s in enumerate(symbols):
            a |= s.a << i
            b |= s.b << i
            count += 1
        return cls(count, a, b)

    def symbols(self) -> tuple:
        return tuple(
            RingElem((self.a >> i) & 1, (self.b >> i) & 1) for i in range(self.n)
        )

    def __bool__(self):
        return bool(self.a | self.b)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return (
            isinstance(other, RVec)
            and self.n == other.n
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash(("RVec", self.n, self.a, self.b))

    def __add__(self, other: "RVec") -> "RVec":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return RVec(self.n, self.a ^ other.a, self.b ^ other.b)

    def times_u(self) -> "RVec":
        return RVec(self.n, 0, self.a)

    def scale(self, c: RingElem) -> "RVec":
        a = self.a if c.a else 0
        b = self.b if c.a else 0
        if c.b:
            b ^= self.a
        return RVec(self.n, a, b)

    @property
    def lee(self) -> int:
        return self.a.bit_count() + 2 * (self.b & ~self.a).bit_count()

    def gray(self) -> "GrayWord":
        return GrayWord(2 * self.n, self.b | ((self.a ^ self.b) << self.n))

    def __repr__(self):
        syms = ",".join(repr(s) for s in self.symbols())
        return f"RVec({syms})"


@dataclass(frozen=True)
class GrayWord:
    """A binary word of nbits bits; bit p of value is position p."""

    nbits: int
    value: int

    def __post_init__(self):
        if self.nbits < 0 or not 0 <= self.value < (1 << self.nbits):
            raise ValueError("value out of range for nbits")

    def weight(self) -> int:
        return self.value.bit_count()

    def bits(self) -> tuple:
        return tuple((self.value >> p) & 1 for p in range(self.nbits))

    def __add__(self, other: "GrayWord") -> "GrayWord":
        if self.nbits != other.nbits:
            raise ValueError(f"length mismatch: {self.nbits} vs {other.nbits}")
        return GrayWord(self.nbits, self.value ^ other.value)

    def __len__(self):
        return self.nbits


def lee_weight(v) -> int:
    """Lee weight of a vector over R.

    Accepts an RVec, an SnElem (its coefficient vector), or any
    iterable of RingElem.
    """
    if isinstance(v, (RVec, SnElem)):
        return v.a.bit_count() + 2 * (v.b & ~v.a).bit_count()
    return sum(s.lee for s in v)


def gray_map(v) -> GrayWord:
    """Binary image of a vector over R.

    The first block of the output is the b parts, the second block the
    a+b parts, position for position; the Hamming weight of the image
    equals the Lee weight of v.
    """
    if isinstance(v, SnElem):
        v = v.to_vec()
    elif not isinstance(v, RVec):
        v = RVec.from_symbols(v)
    return v.gray()


def parse_ring_poly(text: str) -> tuple:
    """Parse "A + u*(B)" into the pair (A, B) of BinPoly.

    Either part may be absent: "x^2+x", "u*(x+1)" and the bare unit "u"
    are all valid.  Offsets in parse errors refer to the original text.
    """
    iu = text.find("u")
    if iu == -1:
        return parse(text), ZERO
    head = text[:iu].rstrip()
    if head.endswith("+"):
        head = head[:-1]
    elif head:
        raise PolyParseError("expected '+' before the u part", iu)
    a_part = parse(head) if head.strip() else ZERO
    tail = text[iu + 1 :]
    stripped = tail.strip()
    if stripped == "":
        return a_part, ONE
    if not stripped.startswith("*("):
        raise PolyParseError("expected '*(' after u", iu + 1)
    if not stripped.endswith(")"):
        raise PolyParseError("unterminated u*(...) part", len(text) - 1)
    inner_start = iu + 1 + tail.index("(") + 1
    inner = stripped[2:-1]
    if "u" in inner:
        raise PolyParseError("nested u inside u*(...)", inner_start + inner.index("u"))
    try:
        b_part = parse(inner)
    except PolyParseError as exc:
        raise PolyParseError(
            str(exc).rsplit(" (at offset", 1)[0], inner_start + exc.position
        ) from None
    return a_part, b_part
