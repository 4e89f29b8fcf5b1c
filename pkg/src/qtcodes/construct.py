"""Quasi-twisted code constructions over R = F2 + u*F2.

A one-generator quasi-twisted code of index l and length n*l is the
S_n-module generated by one tuple (g_0, ..., g_{l-1}) of S_n elements,
flattened into R^(n*l) by the interleaving rho: coefficient i of
component j sits at position i*l + j.  Under rho, multiplication by x
becomes the l-fold twisted shift T^l, where T feeds the last symbol
back to the front scaled by 1+u.

Each build_* function returns a minimum generating set for one family
of such codes: s1 rows take coefficients from all of R, s2 rows only
from F2, and every codeword is a unique combination, so the code has
exactly 4^|s1| * 2^|s2| words.  The families differ in what the
component tuple looks like:

  A1         components g_i over F2, some g_i unit-involved
  A2         components u*g_i, pure torsion
  B          components q_i*f*g mixing a free and a torsion part
  SpecialA2  components u*g*f_i with the f_i coprime to (x^n+1)/g

Inputs of degree n or higher are first reduced: plain F2 inputs mod
x^n+1 for the F2-side bookkeeping, full products through x^n = 1+u
where the u part matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GuardError, PreconditionError
from .gf2poly import ONE, BinPoly, b_gcd, xn_minus_1, _mul_bits
from .ring import R_ONE_PLUS_U, RVec, SnElem, sn_reduce
from . import kernels

SPAN_GUARD_LOG2 = 26


def rho_pack(components) -> RVec:
    """Interleave l same-length S_n elements into one vector of R^(n*l)."""
    comps = tuple(components)
    if not comps:
        raise ValueError("nothing to pack")
    n = comps[0].n
    l = len(comps)
    if any(c.n != n for c in comps):
        raise ValueError("components live in different S_n")
    a = b = 0
    for j, c in enumerate(comps):
        for i in range(n):
            pos = i * l + j
            a |= ((c.a >> i) & 1) << pos
            b |= ((c.b >> i) & 1) << pos
    return RVec(n * l, a, b)


def rho_unpack(v: RVec, l: int) -> tuple:
    """Inverse of rho_pack; v must have length divisible by l."""
    if l < 1 or v.n % l:
        raise ValueError(f"length {v.n} does not split into {l} components")
    n = v.n // l
    out = []
    for j in range(l):
        a = b = 0
        for i in range(n):
            pos = i * l + j
            a |= ((v.a >> pos) & 1) << i
            b |= ((v.b >> pos) & 1) << i
        out.append(SnElem(n, a, b))
    return tuple(out)


def t_shift(c):
    """The (1+u)-twisted cyclic shift of a vector over R.

    (c_0, ..., c_{N-1}) maps to ((1+u)c_{N-1}, c_0, ..., c_{N-2}).
    Accepts an RVec (returned as RVec) or a sequence of RingElem
    (returned as a tuple).
    """
    if isinstance(c, RVec):
        n, a, b = c.n, c.a, c.b
        if n == 0:
            return c
        mask = (1 << n) - 1
        ha, hb = a >> (n - 1), b >> (n - 1)
        return RVec(n, ((a << 1) & mask) | ha, ((b << 1) & mask) | (ha ^ hb))
    syms = tuple(c)
    if not syms:
        return syms
    return (R_ONE_PLUS_U * syms[-1],) + syms[:-1]


@dataclass(frozen=True)
class QtGenerator:
    """The defining generator of a one-generator QT code.

    components are the S_n elements whose S_n-multiples sweep out the
    code; inputs keeps the raw construction data for reporting.
    """

    n: int
    l: int
    family: str
    components: tuple
    inputs: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class GeneratingSet:
    """A minimum generating set: R-rows s1, F2-rows s2, both packed."""

    n: int
    l: int
    family: str
    s1: tuple
    s2: tuple
    generator: QtGenerator
    meta: dict = field(default_factory=dict, compare=False)


def card_log2(gs: GeneratingSet) -> int:
    """log2 of the code size: two free bits per s1 row, one per s2 row."""
    return 2 * len(gs.s1) + len(gs.s2)


def span_rows(gs: GeneratingSet) -> tuple:
    """F2 spanning rows of the code: (w, u*w) per s1 row, then s2."""
    rows = []
    for w in gs.s1:
        rows.append(w)
        rows.append(w.times_u())
    rows.extend(gs.s2)
    return tuple(rows)


def rows_to_arrays(rows):
    """Pack RVec rows (length <= 64) into uint64 kernel arrays."""
    return (
        np.array([r.a for r in rows], np.uint64),
        np.array([r.b for r in rows], np.uint64),
    )


def span_enumerate(gs: GeneratingSet, *, guard_log2=SPAN_GUARD_LOG2, force=False):
    """The full codeword set of a generating set.

    Refuses when 4^|s1| * 2^|s2| exceeds 2^guard_log2 unless forced.
    Lengths up to 64 go through the packed kernels; longer vectors fall
    back to big-int doubling, which is exact but only sensible for
    small spans.
    """
    k = card_log2(gs)
    if k > guard_log2 and not force:
        raise GuardError(
            f"span holds 2^{k} codewords, over the 2^{guard_log2} guard; "
            "pass force=True (or --force-enum) to enumerate anyway"
        )
    rows = span_rows(gs)
    nl = gs.n * gs.l
    if nl <= 64:
        ra, rb = rows_to_arrays(rows)
        a, b = kernels.span_codewords(ra, rb)
        a, b = kernels.sort_unique(a, b)
        return {RVec(nl, int(x), int(y)) for x, y in zip(a.tolist(), b.tolist())}
    pairs = [(0, 0)]
    for w in rows:
        wa, wb = w.a, w.b
        pairs += [(a ^ wa, b ^ wb) for a, b in pairs]
    return {RVec(nl, a, b) for a, b in pairs}


def _x_multiples(comps, count) -> tuple:
    rows = []
    cur = tuple(comps)
    for _ in range(count):
        rows.append(rho_pack(cur))
        cur = tuple(c.times_x() for c in cur)
    return tuple(rows)


def _f2_shadows(n, l, g_list):
    if len(g_list) != l:
        raise PreconditionError(f"expected {l} components, got {len(g_list)}")
    xn1 = xn_minus_1(n)
    shadows = [g % xn1 for g in g_list]
    if not any(shadows):
        raise PreconditionError("all components vanish mod x^n+1")
    g = b_gcd(shadows + [xn1])
    h = xn1 // g
    return shadows, g, h, int(h.degree)


def build_a1(n: int, l: int, g_list) -> GeneratingSet:
    """Free-part family: one F2 tuple (g_0, ..., g_{l-1}).

    With g = gcd of the components and x^n+1 and r = deg((x^n+1)/g),
    the code needs r rows of the packed tuple G itself (coefficients in
    R) and n-r rows of the u-scaled quotient tuple uF, F_i = g_i/g.
    The count assumes the tuple generates a free ideal of the matching
    rank; degenerate tuples (see classify_constacyclic) can span fewer
    words than 4^r * 2^(n-r).
    """
    shadows, g, h, r = _f2_shadows(n, l, g_list)
    f_list = tuple(s // g for s in shadows)
    comps = tuple(sn_reduce(s, n) for s in shadows)
    torsion = tuple(sn_reduce(f, n).times_u() for f in f_list)
    gen = QtGenerator(n, l, "A1", comps, {"g": tuple(g_list)})
    meta = {"g": g, "h": h, "r": r, "f": f_list}
    return GeneratingSet(
        n, l, "A1", _x_multiples(comps, r), _x_multiples(torsion, n - r), gen, meta
    )


def build_a2(n: int, l: int, g_list) -> GeneratingSet:
    """Torsion family: components u*g_i, all codewords u-multiples.

    Same g, h, r bookkeeping as build_a1, but the whole code is killed
    by u, so there are no R-rows: just r F2-rows of the packed uG.
    """
    shadows, g, h, r = _f2_shadows(n, l, g_list)
    comps = tuple(sn_reduce(s, n).times_u() for s in shadows)
    gen = QtGenerator(n, l, "A2", comps, {"g": tuple(g_list)})
    meta = {"g": g, "h": h, "r": r}
    return GeneratingSet(n, l, "A2", (), _x_multiples(comps, r), gen, meta)


def build_b(n: int, l: int, q_list, f: BinPoly, g: BinPoly) -> GeneratingSet:
    """Mixed family: components q_i*f*g with f | g | x^n+1.

    Needs gcd(q_i, (x^n+1)/g) = 1 for every i and deg f < deg g < n.
    The code takes n-r R-rows of the packed component tuple and r-t
    F2-rows of the u-scaled tuple (u*q_i*f), r = deg g, t = deg f.
    The returned set is minimal when g is the largest divisor of x^n+1
    with f*g dividing every component, which is not re-verified here.
    """
    if len(q_list) != l:
        raise PreconditionError(f"expected {l} multipliers, got {len(q_list)}")
    xn1 = xn_minus_1(n)
    if not f:
        raise PreconditionError("f must be nonzero")
    if not f.divides(g):
        raise PreconditionError("f does not divide g")
    if not g.divides(xn1):
        raise PreconditionError("g does not divide x^n+1")
    h = xn1 // g
    r, t = int(g.degree), int(f.degree)
    if not t < r < n:
        raise PreconditionError(f"need deg f < deg g < n, got {t}, {r}, {n}")
    for i, q in enumerate(q_list):
        if b_gcd([q, h]) != ONE:
            raise PreconditionError(f"q_{i} shares a factor with (x^n+1)/g")
    comps = tuple(sn_reduce(q * f * g, n) for q in q_list)
    torsion = tuple(sn_reduce((q * f) % xn1, n).times_u() for q in q_list)
    gen = QtGenerator(n, l, "B", comps, {"q": tuple(q_list), "f": f, "g": g})
    meta = {"g": g, "f": f, "h": h, "r": r, "t": t}
    return GeneratingSet(
        n, l, "B", _x_multiples(comps, n - r), _x_multiples(torsion, r - t), gen, meta
    )


@dataclass(frozen=True)
class CompanionCode:
    """The length-n torsion code (u*g) used to bound a SpecialA2 code."""

    n: int
    g: BinPoly

    def d_lee(self) -> int:
        """Twice the minimum weight of the cyclic F2 code generated by g."""
        deg_g = int(self.g.degree)
        best = min(
            _mul_bits(self.g.bits, m).bit_count()
            for m in range(1, 1 << (self.n - deg_g))
        )
        return 2 * best


def build_special_a2(n: int, l: int, g: BinPoly, f_list):
    """Torsion family with a shared divisor: components u*g*f_i.

    g must properly divide x^n+1 and every f_i must be coprime to
    (x^n+1)/g; then each component generates the same length-n code as
    u*g alone, and the index-l code needs r = n - deg(g) F2-rows.
    Returns the generating set together with the companion code (u*g),
    whose Lee distance scaled by l lower-bounds the code's.
    """
    if len(f_list) != l:
        raise PreconditionError(f"expected {l} multipliers, got {len(f_list)}")
    xn1 = xn_minus_1(n)
    if not g or not g.divides(xn1):
        raise PreconditionError("g must divide x^n+1")
    r = n - int(g.degree)
    if r < 1:
        raise PreconditionError("g must be a proper divisor of x^n+1")
    h = xn1 // g
    for i, fp in enumerate(f_list):
        if b_gcd([fp, h]) != ONE:
            raise PreconditionError(f"f_{i} shares a factor with (x^n+1)/g")
    comps = tuple(sn_reduce((g * fp) % xn1, n).times_u() for fp in f_list)
    gen = QtGenerator(
        n, l, "SpecialA2", comps, {"g": g, "f": tuple(f_list)}
    )
    meta = {"g": g, "h": h, "r": r, "f": tuple(f_list)}
    gs = GeneratingSet(n, l, "SpecialA2", (), _x_multiples(comps, r), gen, meta)
    return gs, CompanionCode(n, g)
