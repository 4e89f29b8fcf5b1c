"""Exhaustive search over small construction spaces.

Candidates are enumerated in a fixed deterministic order per family:
free polynomial slots ascend through all packed integers up to the
degree bound, lexicographically across slots, and structural divisors
of x^n+1 ascend by (degree, bits).  For every dimension k reached, the
first candidate attaining the best distance is kept, so results are
reproducible run to run and worker count never changes the outcome
(chunks are merged back in candidate order).
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import EmptySearchError, PreconditionError
from .gf2poly import ONE, BinPoly, b_gcd, xn_minus_1
from .construct import (
    SPAN_GUARD_LOG2,
    build_a1,
    build_a2,
    build_b,
    build_special_a2,
    card_log2,
)
from .analysis import generating_set_exact, gray_params, min_lee_span, _xn1_divisors

FAMILIES = ("A1", "A2", "B", "SpecialA2")
_CHUNK = 64


@dataclass(frozen=True)
class SearchSpec:
    """What to sweep: one family at one (n, l), bounded degrees.

    max_deg caps the free polynomial slots (the g_i of A1/A2, the q_i
    of B, the f_i of SpecialA2); divisor-valued slots range over the
    whole divisor lattice of x^n+1.
    """

    n: int
    l: int
    family: str
    max_deg: int
    workers: int = 1
    max_candidates: int | None = None
    time_budget: float | None = None
    guard_log2: int = SPAN_GUARD_LOG2

    def validate(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        if self.n < 1 or self.l < 1:
            raise PreconditionError(f"need n, l >= 1, got n={self.n}, l={self.l}")
        if self.n * self.l > 64:
            raise PreconditionError(
                f"search needs n*l <= 64 packed positions, got {self.n * self.l}"
            )
        if self.max_deg < 0:
            raise PreconditionError(f"need max_deg >= 0, got {self.max_deg}")
        if self.workers < 1:
            raise PreconditionError(f"need workers >= 1, got {self.workers}")


@dataclass(frozen=True)
class SearchRow:
    """Best candidate found for one dimension."""

    k: int
    d_lee: int
    gray: tuple
    recipe: dict
    index: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d_lee": self.d_lee,
            "gray": list(self.gray),
            "recipe": dict(self.recipe),
            "candidate_index": self.index,
        }


@dataclass
class SearchResult:
    spec: SearchSpec
    rows: tuple = ()
    evaluated: int = 0
    skipped_precondition: int = 0
    skipped_degenerate: int = 0
    skipped_guard: int = 0
    truncated: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.spec.n,
            "l": self.spec.l,
            "family": self.spec.family,
            "max_deg": self.spec.max_deg,
            "rows": [r.to_dict() for r in sorted(self.rows, key=lambda r: r.k)],
            "evaluated": self.evaluated,
            "skipped_precondition": self.skipped_precondition,
            "skipped_degenerate": self.skipped_degenerate,
            "skipped_guard": self.skipped_guard,
            "truncated": self.truncated,
        }


def _free_polys(max_deg):
    return [BinPoly(bits) for bits in range(1 << (max_deg + 1))]


def _candidates(spec: SearchSpec):
    """Yield (index, recipe, thunk) triples in canonical order."""
    n, l, d = spec.n, spec.l, spec.max_deg
    polys = _free_polys(d)
    idx = 0
    if spec.family in ("A1", "A2"):
        build = build_a1 if spec.family == "A1" else build_a2
        for tup in itertools.product(polys, repeat=l):
            if not any(tup):
                continue
            recipe = {
                "family": spec.family, "n": n, "l": l,
                "g": [p.to_text() for p in tup],
            }
            yield idx, recipe, (lambda t=tup: build(n, l, list(t)))
            idx += 1
        return
    divisors = _xn1_divisors(n)
    if spec.family == "B":
        xn1 = xn_minus_1(n)
        for g in divisors:
            if not 0 < int(g.degree) < n:
                continue
            h = xn1 // g
            for f in divisors:
                if f.degree >= g.degree or not f.divides(g):
                    continue
                for q_tup in itertools.product(polys, repeat=l):
                    if any(not q or b_gcd([q, h]) != ONE for q in q_tup):
                        continue
                    recipe = {
                        "family": "B", "n": n, "l": l,
                        "q": [q.to_text() for q in q_tup],
                        "f": f.to_text(), "g_poly": g.to_text(),
                    }
                    yield idx, recipe, (
                        lambda qt=q_tup, ff=f, gg=g: build_b(n, l, list(qt), ff, gg)
                    )
                    idx += 1
        return
    # SpecialA2
    xn1 = xn_minus_1(n)
    for g in divisors:
        if int(g.degree) >= n:
            continue
        h = xn1 // g
        for f_tup in itertools.product(polys, repeat=l):
            if any(not f or b_gcd([f, h]) != ONE for f in f_tup):
                continue
            recipe = {
                "family": "SpecialA2", "n": n, "l": l,
                "g_poly": g.to_text(), "f": [f.to_text() for f in f_tup],
            }
            yield idx, recipe, (
                lambda ft=f_tup, gg=g: build_special_a2(n, l, gg, list(ft))[0]
            )
            idx += 1


def _evaluate(spec, batch):
    """Score one batch; returns (best per k, counters)."""
    best = {}
    evaluated = skipped_pre = skipped_deg = skipped_guard = 0
    for idx, recipe, thunk in batch:
        try:
            gs = thunk()
        except PreconditionError:
            skipped_pre += 1
            continue
        k = card_log2(gs)
        if k > spec.guard_log2:
            skipped_guard += 1
            continue
        # reported (k, d) must be the code's, not just the row span's
        if not generating_set_exact(gs):
            skipped_deg += 1
            continue
        d = min_lee_span(gs, guard_log2=spec.guard_log2)
        evaluated += 1
        held = best.get(k)
        if held is None or d > held.d_lee:
            best[k] = SearchRow(k, d, gray_params(spec.n, spec.l, k, d), recipe, idx)
    return best, evaluated, skipped_pre, skipped_deg, skipped_guard


def _merge(into: dict, part: dict):
    # parts arrive in candidate order; only a strictly better d replaces
    for k, row in part.items():
        held = into.get(k)
        if held is None or row.d_lee > held.d_lee:
            into[k] = row


def run_search(spec: SearchSpec) -> SearchResult:
    """Sweep the whole space and keep the best distance per dimension.

    Untruncated runs are deterministic for any worker count.  A time
    budget cuts enumeration short between batches and flags the result
    as truncated; truncated output depends on timing and should not be
    treated as reproducible.
    """
    spec.validate()
    started = time.perf_counter()
    result = SearchResult(spec)
    best: dict = {}
    stream = _candidates(spec)
    if spec.max_candidates is not None:
        stream = itertools.islice(stream, spec.max_candidates)

    def out_of_time():
        return (
            spec.time_budget is not None
            and time.perf_counter() - started > spec.time_budget
        )

    def absorb(part, ev, sp, sd, sg):
        _merge(best, part)
        result.evaluated += ev
        result.skipped_precondition += sp
        result.skipped_degenerate += sd
        result.skipped_guard += sg

    batches = iter(lambda: list(itertools.islice(stream, _CHUNK)), [])
    if spec.workers == 1:
        for batch in batches:
            absorb(*_evaluate(spec, batch))
            if out_of_time():
                result.truncated = True
                break
    else:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            window = []

            def drain(upto):
                while len(window) > upto:
                    absorb(*window.pop(0).result())

            for batch in batches:
                window.append(pool.submit(_evaluate, spec, batch))
                drain(2 * spec.workers)
                if out_of_time():
                    result.truncated = True
                    break
            drain(0)
    if not best:
        raise EmptySearchError(
            f"no feasible {spec.family} candidate at n={spec.n}, l={spec.l}, "
            f"max_deg={spec.max_deg} ({result.skipped_precondition} precondition "
            f"rejects, {result.skipped_degenerate} degenerate, "
            f"{result.skipped_guard} guard skips)"
        )
    result.rows = tuple(sorted(best.values(), key=lambda r: r.k))
    return result
