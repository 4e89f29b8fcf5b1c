"""Builders: packing, shifts, generating sets, the four families."""

import pytest

from qtcodes.errors import GuardError, PreconditionError
from qtcodes.gf2poly import ONE, BinPoly, parse
from qtcodes.ring import R_ONE, R_ONE_PLUS_U, R_U, R_ZERO, RVec, sn_reduce
from qtcodes.construct import (
    CompanionCode,
    build_a1,
    build_a2,
    build_b,
    build_special_a2,
    card_log2,
    rho_pack,
    rho_unpack,
    rows_to_arrays,
    span_enumerate,
    span_rows,
    t_shift,
)


def test_rho_round_trip():
    c0 = sn_reduce(parse("x^2+1"), 3)
    c1 = sn_reduce((BinPoly(0b010), BinPoly(0b101)), 3)
    v = rho_pack((c0, c1))
    assert v.n == 6
    assert rho_unpack(v, 2) == (c0, c1)
    # coefficient i of component j sits at position i*l+j
    assert v.symbols()[0] == c0.coeff(0)
    assert v.symbols()[1] == c1.coeff(0)
    assert v.symbols()[2] == c0.coeff(1)


def test_rho_rejects_bad_shapes():
    with pytest.raises(ValueError):
        rho_pack(())
    with pytest.raises(ValueError):
        rho_pack((sn_reduce(ONE, 3), sn_reduce(ONE, 4)))
    with pytest.raises(ValueError):
        rho_unpack(RVec(6, 0, 0), 4)


def test_t_shift_symbols():
    syms = (R_ONE, R_ZERO, R_U, R_ONE_PLUS_U)
    shifted = t_shift(syms)
    # last symbol moves to the front scaled by 1+u
    assert shifted == (R_ONE_PLUS_U * R_ONE_PLUS_U, R_ONE, R_ZERO, R_U)
    assert shifted[0] == R_ONE
    v = RVec.from_symbols(syms)
    assert t_shift(v).symbols() == shifted


def test_t_shift_order():
    # N twisted shifts amount to scaling by 1+u
    v = RVec(4, 0b1011, 0b0010)
    w = v
    for _ in range(4):
        w = t_shift(w)
    assert w == v.scale(R_ONE_PLUS_U)


def test_span_rows_doubling():
    gs = build_a1(3, 2, [parse("x+1"), parse("x^2+1")])
    rows = span_rows(gs)
    assert len(rows) == 2 * len(gs.s1) + len(gs.s2)
    # u*w for w = a+ub is (0, a)
    w = gs.s1[0]
    uw = rows[1]
    assert (uw.a, uw.b) == (0, w.a)
    ra, rb = rows_to_arrays(rows)
    assert len(ra) == len(rows) and ra.dtype.name == "uint64"


def test_span_enumerate_full_ring():
    gs = build_a1(3, 1, [ONE])
    words = span_enumerate(gs)
    assert len(words) == 4 ** 3
    assert card_log2(gs) == 6


def test_span_enumerate_frozen_small():
    # the ideal <x+1> in S_2: a-part 0 or x+1, b-part free
    gs = build_a1(2, 1, [parse("x+1")])
    assert card_log2(gs) == 3
    words = sorted((w.a, w.b) for w in span_enumerate(gs))
    assert words == [(0, 0), (0, 1), (0, 2), (0, 3),
                     (3, 0), (3, 1), (3, 2), (3, 3)]


def test_span_guard():
    gs = build_a1(3, 1, [ONE])
    with pytest.raises(GuardError) as ei:
        span_enumerate(gs, guard_log2=3)
    assert ei.value.exit_code == 3
    assert len(span_enumerate(gs, guard_log2=3, force=True)) == 64


def test_build_a1_structure():
    gs = build_a1(3, 2, [parse("x+1"), parse("x^2+1")])
    assert gs.family == "A1"
    assert gs.meta["g"] == parse("x+1")
    assert gs.meta["h"] == parse("x^2+x+1")
    assert gs.meta["r"] == 2
    assert gs.meta["f"] == (ONE, parse("x+1"))
    assert (len(gs.s1), len(gs.s2)) == (2, 1)
    assert card_log2(gs) == 5
    # torsion rows are pure-u vectors
    assert all(row.a == 0 for row in gs.s2)


def test_build_a1_reduces_high_degree():
    # inputs of degree >= n enter mod x^n+1
    assert build_a1(3, 1, [parse("x^4")]) == build_a1(3, 1, [parse("x")])
    with pytest.raises(PreconditionError):
        build_a1(3, 1, [parse("x^4+x")])  # x^4+x = x(x^3+1) = 0 mod x^3+1


def test_build_a1_second_tuple():
    gs = build_a1(3, 2, [parse("x^2+x+1"), parse("x^2+x+1")])
    assert gs.meta["g"] == parse("x^2+x+1") and gs.meta["r"] == 1
    assert (len(gs.s1), len(gs.s2)) == (1, 2)
    assert card_log2(gs) == 4


def test_build_a1_rejects():
    with pytest.raises(PreconditionError):
        build_a1(3, 2, [parse("x+1")])  # wrong arity
    with pytest.raises(PreconditionError):
        build_a1(3, 2, [parse("x^3+1"), parse("x^3+1")])  # vanishes mod x^n+1


def test_build_a2_structure():
    gs = build_a2(3, 3, [parse("x^4+x^3+x^2+1"), parse("x^4+x^3+x+1"), parse("x+1")])
    assert gs.family == "A2"
    assert gs.s1 == ()
    assert gs.meta["g"] == parse("x+1") and gs.meta["r"] == 2
    assert len(gs.s2) == 2
    assert card_log2(gs) == 2
    assert all(row.a == 0 for row in gs.s2)


def test_build_b_structure():
    f = parse("x+1")
    g = parse("x^7+x^6+x^4+x^3+x+1")
    gs = build_b(9, 2, [parse("x"), parse("x^2+x")], f, g)
    assert gs.family == "B"
    assert gs.meta["r"] == 7 and gs.meta["t"] == 1
    assert (len(gs.s1), len(gs.s2)) == (2, 6)
    assert card_log2(gs) == 10
    c0, c1 = gs.generator.components
    assert c0.to_text() == "x^7+x^6+x^4+x^3+x+1 + u"
    assert c1.to_text() == "x^8+x^6+x^5+x^3+x^2+1 + u*(x+1)"
    # torsion rows come from u*q_i*f, not u*q_i*f*g
    t0 = gs.s2[0]
    assert t0.a == 0
    assert rho_unpack(t0, 2)[0].b == (parse("x") * f).bits


def test_build_b_rejects():
    f, g = parse("x+1"), parse("x^3+1")
    with pytest.raises(PreconditionError):
        build_b(9, 1, [ONE], parse("x^2+1"), g)  # f does not divide g
    with pytest.raises(PreconditionError):
        build_b(9, 1, [ONE], f, parse("x^2+1"))  # g does not divide x^9+1
    with pytest.raises(PreconditionError):
        build_b(3, 1, [ONE], f, parse("x^3+1"))  # deg g = n
    with pytest.raises(PreconditionError):
        build_b(9, 1, [parse("x^6+x^3+1")], f, g)  # q shares a factor with h
    with pytest.raises(PreconditionError):
        build_b(9, 1, [ONE], parse("0"), g)
    with pytest.raises(PreconditionError):
        build_b(9, 2, [ONE], f, g)  # wrong arity


def test_build_special_a2_structure():
    g = parse("x+1")
    gs, comp = build_special_a2(3, 2, g, [parse("x^3+x+1"), parse("x^3+x^2+1")])
    assert gs.family == "SpecialA2"
    assert gs.s1 == () and len(gs.s2) == 2
    assert card_log2(gs) == 2
    assert comp == CompanionCode(3, g)
    assert comp.d_lee() == 4  # cyclic <x+1> has minimum weight 2


def test_build_special_a2_rejects():
    with pytest.raises(PreconditionError):
        build_special_a2(3, 1, parse("x^2+1"), [ONE])  # g does not divide x^3+1
    with pytest.raises(PreconditionError):
        build_special_a2(3, 1, parse("x^3+1"), [ONE])  # not a proper divisor
    with pytest.raises(PreconditionError):
        build_special_a2(3, 1, parse("x+1"), [parse("x^2+x+1")])  # f not coprime to h
    with pytest.raises(PreconditionError):
        build_special_a2(3, 2, parse("x+1"), [ONE])  # wrong arity


def test_companion_code_distances():
    assert CompanionCode(4, parse("x+1")).d_lee() == 4
    assert CompanionCode(6, parse("x^3+1")).d_lee() == 4
    assert CompanionCode(9, parse("x^7+x^6+x^4+x^3+x+1")).d_lee() == 12
