import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from grsdeep.code import EvaluationSet, GrsCode, encode, is_codeword, word_degree
from grsdeep.distance import (
    choose_engine,
    cross_check,
    distance_bounds,
    error_distance,
    error_distance_exhaustive,
    error_distance_subsets,
)
from grsdeep.errors import BudgetExceeded, GrsError
from grsdeep.gf import get_field
from grsdeep.poly import Polynomial

from oracles import brute_distance, ref_field_for

F4, F5 = get_field(2, 2), get_field(5)
C5 = GrsCode.punctured(F5, [0], 2)
WORD = (1, 3, 2, 4)


@pytest.mark.parametrize("engine", [error_distance_exhaustive, error_distance_subsets, cross_check])
def test_known_word(engine):
    cert = engine(C5, WORD)
    assert cert.distance == 2 and cert.max_agreements == 2 and cert.is_deep_hole
    # Six lines meet the cubic in exactly two points each.
    assert [m.to_csv() for m in cert.nearest_messages] == ["0,1", "1,2", "4,2", "2,3", "3,3", "0,4"]


@pytest.mark.parametrize("engine", [error_distance_exhaustive, error_distance_subsets, cross_check])
def test_codeword_and_trivial_hole(engine):
    cw = encode(C5, Polynomial(F5, [4, 1]))
    cert = engine(C5, cw)
    assert cert.distance == 0 and cert.max_agreements == 4 and cert.nearest_count == 1
    assert cert.nearest_messages == (Polynomial(F5, [4, 1]),)
    square = (1, 4, 4, 1)
    assert engine(C5, square).distance == 2


def test_gf4_every_noncodeword_at_distance_one():
    code = GrsCode.punctured(F4, [0], 2)
    for u in itertools.product(range(4), repeat=3):
        expected = 0 if is_codeword(code, u) else 1
        assert error_distance_subsets(code, u).distance == expected


def _codes_up_to(q_list):
    for pm in q_list:
        F = get_field(*pm)
        for l in range(0, 3):
            for excluded in itertools.combinations(F.elements(), l):
                for k in range(1, F.q - l + 1):
                    yield GrsCode.punctured(F, excluded, k)
                break  # one exclusion set per l keeps this quick


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2)])
def test_engines_match_oracle_on_full_word_space(pm):
    for code in _codes_up_to([pm]):
        if code.q ** (code.n + code.k) > 1 << 14:
            continue
        ref = ref_field_for(code.field)
        for u in itertools.product(range(code.q), repeat=code.n):
            dist, nearest = brute_distance(ref, code.points, code.k, u)
            for engine in (error_distance_exhaustive, error_distance_subsets):
                cert = engine(code, u, nearest_cap=10 ** 6)
                assert cert.distance == dist
                assert [m.index for m in cert.nearest_messages] == nearest


def test_engines_match_oracle_sampled():
    rng = random.Random(7)
    for pm, excluded, k in [((5, 1), [2], 2), ((3, 2), [0, 5], 3), ((7, 1), [1], 2), ((2, 3), [], 3)]:
        F = get_field(*pm)
        code = GrsCode.punctured(F, excluded, k)
        ref = ref_field_for(F)
        for _ in range(15):
            u = tuple(rng.randrange(F.q) for _ in range(code.n))
            dist, nearest = brute_distance(ref, code.points, k, u)
            cert = cross_check(code, u, nearest_cap=10 ** 6)
            assert cert.distance == dist and [m.index for m in cert.nearest_messages] == nearest


def test_distance_bounds_examples():
    assert distance_bounds(C5, WORD) == (1, 2)
    assert distance_bounds(C5, (1, 4, 4, 1)) == (2, 2)
    assert distance_bounds(C5, encode(C5, Polynomial(F5, [1, 1]))) == (0, 0)
    assert distance_bounds(C5, (0, 0, 0, 0)) == (0, 0)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]), st.data())
def test_sandwich_and_zero_iff_codeword(pm, data):
    F = get_field(*pm)
    l = data.draw(st.integers(0, 2))
    excluded = data.draw(st.lists(st.integers(0, F.q - 1), min_size=l, max_size=l, unique=True))
    n = F.q - l
    k = data.draw(st.integers(1, n).filter(lambda k: F.q ** k <= 1 << 16))
    code = GrsCode.punctured(F, excluded, k)
    u = tuple(data.draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n)))
    cert = cross_check(code, u)
    lo, hi = distance_bounds(code, u)
    assert lo <= cert.distance <= hi
    assert 0 <= cert.distance <= code.covering_radius
    assert cert.distance + cert.max_agreements == code.n
    assert (cert.distance == 0) == is_codeword(code, u)
    if word_degree(code.eval_set, u) == k:
        assert cert.distance == n - k


def test_arbitrary_evaluation_set():
    F = get_field(7)
    code = GrsCode(EvaluationSet.from_points(F, [6, 0, 2, 3, 5]), 2)
    ref = ref_field_for(F)
    rng = random.Random(3)
    for _ in range(20):
        u = tuple(rng.randrange(7) for _ in range(5))
        assert cross_check(code, u).distance == brute_distance(ref, code.points, 2, u)[0]


def test_nearest_cap_keeps_smallest_and_count():
    cert = error_distance_exhaustive(C5, WORD, nearest_cap=3)
    assert cert.nearest_count == 6
    assert [m.to_csv() for m in cert.nearest_messages] == ["0,1"]
    assert cross_check(C5, WORD, nearest_cap=3).nearest_messages == cert.nearest_messages


def test_worker_count_does_not_change_result():
    code = GrsCode.punctured(get_field(3, 2), [1, 7], 4)
    rng = random.Random(11)
    for _ in range(10):
        u = tuple(rng.randrange(9) for _ in range(code.n))
        base = cross_check(code, u)
        assert cross_check(code, u, workers=3) == base


def test_chunked_paths_agree(monkeypatch):
    import grsdeep.code as code_mod
    import grsdeep.distance as dist_mod
    code = GrsCode.punctured(get_field(2, 3), [5], 4)
    rng = random.Random(5)
    words = [tuple(rng.randrange(8) for _ in range(code.n)) for _ in range(8)]
    before = [cross_check(code, u) for u in words]
    monkeypatch.setattr(code_mod, "_CACHE_ENTRIES", 0)
    monkeypatch.setattr(code_mod, "_CHUNK", 8)
    monkeypatch.setattr(dist_mod, "_SUBSET_CACHE_ENTRIES", 0)
    monkeypatch.setattr(dist_mod, "_SUBSET_BATCH", 4)
    after = [cross_check(code, u, workers=2) for u in words]
    assert before == after


def test_budgets():
    code = GrsCode.punctured(get_field(7), [0], 5)
    u = (1, 2, 3, 4, 5, 6)
    with pytest.raises(BudgetExceeded):
        error_distance_exhaustive(code, u, budget=1000)
    with pytest.raises(BudgetExceeded):
        error_distance_subsets(GrsCode.punctured(get_field(2, 4), [], 8), (0,) * 16, budget=1000)


def test_engine_selection():
    # With n <= q, C(n,k) k^2 < q^k n always holds, so the subset engine wins.
    for pm in [(2, 1), (2, 2), (5, 1), (3, 2)]:
        F = get_field(*pm)
        for k in range(1, F.q + 1):
            code = GrsCode.punctured(F, [], k)
            assert math.comb(code.n, k) * k * k < F.q ** k * code.n
            assert choose_engine(code) == "subsets"
    assert error_distance(C5, WORD).engine == "subsets"
    assert error_distance(C5, WORD, engine="exhaustive").engine == "exhaustive"
    assert error_distance(C5, WORD, engine="cross").engine == "cross"
    with pytest.raises(GrsError):
        error_distance(C5, WORD, engine="nope")


def test_certificate_dict():
    d = cross_check(C5, WORD).to_dict()
    assert list(d) == ["distance", "max_agreements", "is_deep_hole", "nearest_count", "nearest_messages", "engine"]
    assert d["nearest_messages"][0] == "0,1"
