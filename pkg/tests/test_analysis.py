"""Verification layer: oracles, classification, ranks, summaries."""

import pytest

from qtcodes.errors import GuardError, PreconditionError
from qtcodes.gf2poly import BinPoly, ONE, parse, xn_minus_1
from qtcodes.ring import RVec, sn_reduce
from qtcodes.construct import (
    GeneratingSet,
    QtGenerator,
    build_a1,
    build_a2,
    build_b,
    build_special_a2,
    card_log2,
    span_enumerate,
)
from qtcodes.analysis import (
    BEST_KNOWN_BINARY_D,
    classify_constacyclic,
    companion_bound,
    equals_oracle,
    generating_set_exact,
    gf2_rank,
    gray_params,
    min_lee,
    min_lee_span,
    optimality_label,
    oracle_enum,
    oracle_params,
    qt_check,
    rank_check,
    residue_torsion,
    summarize,
)


def a1_example():
    return build_a1(3, 2, [parse("x+1"), parse("x^2+1")])


def degenerate_b():
    # satisfies every stated precondition yet cannot span 2^5 words
    return build_b(3, 1, [parse("x+1")], ONE, parse("x+1"))


def test_min_lee_iterable():
    words = [RVec(3, 0, 0), RVec(3, 0b011, 0), RVec(3, 0, 0b001)]
    assert min_lee(words) == 2
    with pytest.raises(ValueError):
        min_lee([RVec(3, 0, 0)])


def test_min_lee_span_frozen():
    assert min_lee_span(a1_example()) == 4
    gs, _ = build_special_a2(3, 2, parse("x+1"), [parse("x^3+x+1"), parse("x^3+x^2+1")])
    assert min_lee_span(gs) == 8


def test_min_lee_span_zero_code():
    gen = QtGenerator(3, 1, "A2", (sn_reduce(BinPoly(0), 3),))
    gs = GeneratingSet(3, 1, "A2", (), (RVec(3, 0, 0),), gen)
    with pytest.raises(ValueError):
        min_lee_span(gs)


def test_oracle_agrees_with_span():
    gs = a1_example()
    assert span_enumerate(gs) == oracle_enum(gs.generator)
    assert equals_oracle(gs)
    assert oracle_params(gs.generator) == (5, 4)


def test_oracle_guard():
    gs = build_a1(13, 1, [ONE])
    with pytest.raises(GuardError):
        oracle_enum(gs.generator)


def test_degenerate_b_is_caught():
    gs = degenerate_b()
    assert card_log2(gs) == 5
    # the row span still equals the code as a set, so set equality alone
    # cannot catch the bad count; the rank gate does
    assert equals_oracle(gs)
    assert rank_check(gs) == 4
    assert not generating_set_exact(gs)


def test_exactness_on_good_sets():
    assert generating_set_exact(a1_example())
    gs = build_b(
        9, 2, [parse("x"), parse("x^2+x")], parse("x+1"),
        parse("x^7+x^6+x^4+x^3+x+1"),
    )
    assert generating_set_exact(gs)
    assert rank_check(gs) == card_log2(gs) == 10


def test_classify_frozen_cases():
    rep = classify_constacyclic(sn_reduce(parse("x+1"), 3))
    assert (rep.family, rep.divisor, rep.size_log2) == ("A1", parse("x+1"), 5)
    rep = classify_constacyclic(sn_reduce(parse("x^2+1"), 2))  # reduces to u
    assert (rep.family, rep.divisor, rep.size_log2) == ("A2", ONE, 2)
    cube = parse("x+1") * parse("x+1") * parse("x+1")
    rep = classify_constacyclic(sn_reduce(cube, 6))
    assert (rep.family, rep.divisor, rep.size_log2) == ("B", None, 9)
    rep = classify_constacyclic(sn_reduce(parse("x^2+1"), 3))
    assert (rep.family, rep.size_log2) == ("B", 4)


def test_classify_guard():
    with pytest.raises(GuardError):
        classify_constacyclic(sn_reduce(ONE, 13))
    e = sn_reduce(parse("x+1"), 3)
    with pytest.raises(GuardError):
        classify_constacyclic(e, guard_n=2)
    assert classify_constacyclic(e, guard_n=2, force=True).family == "A1"


def test_residue_torsion_frozen():
    e = sn_reduce(parse("x+1"), 3)
    assert residue_torsion(e) == (parse("x+1"), ONE)
    assert residue_torsion(e.times_u()) == (parse("x^3+1"), parse("x+1"))
    cube = parse("x+1") * parse("x+1") * parse("x+1")
    assert residue_torsion(sn_reduce(cube, 4)) == (parse("x^3+x^2+x+1"), ONE)


def test_residue_torsion_reads_type_pair():
    # the published mixed-type components carry (res, tor) = (g, f)
    f, g = parse("x+1"), parse("x^7+x^6+x^4+x^3+x+1")
    for q in (parse("x"), parse("x^2+x")):
        assert residue_torsion(sn_reduce(q * f * g, 9)) == (g, f)


def test_gf2_rank():
    assert gf2_rank([[1, 0], [0, 1]]) == 2
    assert gf2_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2  # rows sum to zero
    assert gf2_rank([[0, 0]]) == 0
    assert gf2_rank([]) == 0


def test_qt_check():
    gs = a1_example()
    assert qt_check(span_enumerate(gs), 3, 2)
    assert not qt_check({RVec(6, 0, 0), RVec(6, 1, 0)}, 3, 2)
    with pytest.raises(ValueError):
        qt_check({RVec(4, 0, 0)}, 3, 2)


def test_companion_bound():
    assert companion_bound(parse("x+1"), 3, 2) == 8
    assert companion_bound(parse("x+1"), 4, 3) == 12
    with pytest.raises(PreconditionError):
        companion_bound(parse("x+1"), 3, 0)
    with pytest.raises(PreconditionError):
        companion_bound(parse("x^2+1"), 3, 2)
    with pytest.raises(PreconditionError):
        companion_bound(parse("x^3+1"), 3, 2)


def test_gray_params():
    assert gray_params(3, 2, 5, 4) == (12, 5, 4)
    with pytest.raises(ValueError):
        gray_params(3, 2, 0, 4)


def test_optimality_label():
    assert BEST_KNOWN_BINARY_D[(12, 5)] == 4
    assert optimality_label(12, 5, 4) == "optimal"
    assert optimality_label(12, 5, 2) == "suboptimal (best known d=4)"
    assert "stale" in optimality_label(12, 5, 9)
    assert optimality_label(10, 3, 4) is None


def test_summarize_full():
    s = summarize(a1_example(), claims={"gray": [12, 5, 4]}, bound=None)
    assert (s.size_log2, s.rank, s.d_lee) == (5, 5, 4)
    assert s.gray == (12, 5, 4)
    assert s.exact and s.enumerated
    assert s.optimality == "optimal"
    assert s.claims["ok"] and s.claims["verdict"]["gray"] == "match"
    d = s.to_dict()
    assert d["gray"] == [12, 5, 4] and d["claims"]["ok"]


def test_summarize_flags_wrong_claims():
    s = summarize(a1_example(), claims={"gray": [12, 5, 6], "lee": [6, 32, 4]})
    assert not s.claims["ok"]
    assert s.claims["verdict"]["gray"] == "mismatch"
    assert s.claims["verdict"]["lee"] == "match"
    assert s.claims["computed"]["gray"] == [12, 5, 4]


def test_summarize_inexact_note():
    s = summarize(degenerate_b())
    assert not s.exact
    assert any("row span" in note for note in s.notes)


def test_summarize_cardinality_only():
    s = summarize(a1_example(), distance=False)
    assert s.d_lee is None and s.gray is None and not s.enumerated
    assert s.size_log2 == 5


def test_summarize_with_bound():
    gs, comp = build_special_a2(3, 2, parse("x+1"), [ONE, ONE])
    s = summarize(gs, bound=2 * comp.d_lee())
    assert s.d_lee_bound == 8
    assert s.d_lee >= s.d_lee_bound


def test_a2_completion_params():
    gs = build_a2(3, 3, [parse("x^4+x^3+x^2+1"), parse("x^4+x^3+x+1"), parse("x+1")])
    s = summarize(gs, claims={"gray": [18, 2, 12]})
    assert s.gray == (18, 2, 8)
    assert not s.claims["ok"]
