"""Seeded invariant suite behind ``grsdeep selftest``.

Covers q in {4, 5, 7}.  Output is a plain dict so the CLI can print it as
JSON; identical seeds give identical dicts.
"""
from __future__ import annotations

import random

from .census import run_census
from .code import GrsCode, encode, interpolate_word, word_add, word_scale
from .deephole import DeepHoleSpec, construct_deep_hole, inverse_word, witness_polynomial
from .distance import cross_check, distance_bounds, error_distance_subsets
from .errors import EngineMismatch
from .gf import get_field
from .poly import Polynomial

FIELDS = ((2, 2), (5, 1), (7, 1))


def _random_poly(rng, F, max_len):
    return Polynomial(F, [rng.randrange(F.q) for _ in range(max_len)])


def _field_axioms(rng):
    cases = 0
    for p, m in FIELDS:
        F = get_field(p, m)
        els = F.elements()
        for a in els:
            assert F.pow(a, F.q) == a
            if a:
                assert F.mul(a, F.pow(a, F.q - 2)) == 1
            for b in els:
                assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
                for c in els:
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                    cases += 1
    return cases


def _codes(rng):
    for p, m in FIELDS:
        F = get_field(p, m)
        for l in (1, 2):
            excluded = rng.sample(F.elements(), l)
            for k in range(1, F.q - l):
                yield GrsCode.punctured(F, excluded, k)


def _interpolation(rng):
    cases = 0
    for code in _codes(rng):
        for _ in range(5):
            f = _random_poly(rng, code.field, code.n)
            word = tuple(f(x) for x in code.points)
            assert interpolate_word(code.eval_set, word) == f
            cases += 1
    return cases


def _engines_and_bounds(rng):
    cases = 0
    for code in _codes(rng):
        for _ in range(10):
            u = tuple(rng.randrange(code.q) for _ in range(code.n))
            cert = cross_check(code, u)
            lo, hi = distance_bounds(code, u)
            assert lo <= cert.distance <= hi or (lo, hi) == (0, 0) == (cert.distance, cert.distance)
            cases += 1
    return cases


def _theorem(rng):
    cases = 0
    for p, m in FIELDS:
        F = get_field(p, m)
        for l in (1, 2):
            excluded = rng.sample(F.elements(), l)
            for k in range(2, F.q - l):
                code = GrsCode.punctured(F, excluded, k)
                for j in range(1, l + 1):
                    bare = error_distance_subsets(code, inverse_word(code, j))
                    assert bare.max_agreements == k
                    w = witness_polynomial(code, j)
                    assert w.verified and w.g.degree == k - 1 and len(w.agreement_points) == k
                    for _ in range(5):
                        spec = DeepHoleSpec(code, j, rng.randrange(1, F.q), _random_poly(rng, F, k))
                        assert cross_check(code, construct_deep_hole(spec)).distance == code.n - k
                        cases += 1
    return cases


def _orbit_invariance(rng):
    cases = 0
    for code in _codes(rng):
        F = code.field
        for _ in range(5):
            v = tuple(rng.randrange(F.q) for _ in range(code.n))
            lam = rng.randrange(1, F.q)
            f = _random_poly(rng, F, code.k)
            u = word_add(F, word_scale(F, lam, v), encode(code, f))
            assert cross_check(code, u).distance == cross_check(code, v).distance
            cases += 1
    return cases


def _census(rng):
    F4, F5 = get_field(2, 2), get_field(5)
    t4 = run_census(GrsCode.punctured(F4, [0], 2)).to_dict()["totals"]
    assert (t4["codewords"], t4["deep_holes"], t4["trivial"]) == (16, 48, 48)
    code5 = GrsCode.punctured(F5, [0], 2)
    orbits = run_census(code5).to_dict()
    full = run_census(code5, mode="full").to_dict()
    t5 = orbits["totals"]
    assert t5["trivial"] == 100 and t5["theorem"] == 100 and t5["overlaps"]["trivial_and_theorem"] == 0
    assert t5["deep_holes"] >= 200 and t5 == full["totals"] and orbits["histogram"] == full["histogram"]
    return 3


CHECKS = (
    ("field_axioms", _field_axioms),
    ("interpolation_round_trip", _interpolation),
    ("engine_equivalence_and_bounds", _engines_and_bounds),
    ("deep_hole_construction", _theorem),
    ("orbit_invariance", _orbit_invariance),
    ("census_golden", _census),
)


def run_selftest(seed: int = 0) -> dict:
    results = []
    for name, check in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            cases = check(rng)
            results.append({"name": name, "passed": True, "cases": cases})
        except (AssertionError, EngineMismatch) as exc:
            results.append({"name": name, "passed": False, "error": str(exc) or type(exc).__name__})
    return {"seed": seed, "passed": all(r["passed"] for r in results), "checks": results}
