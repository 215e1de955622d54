import itertools
import json
from collections import Counter

import pytest

from grsdeep.census import (
    CODEWORD,
    OTHER,
    THEOREM,
    TRIVIAL,
    classify_word,
    count_forms,
    iter_forms,
    run_census,
)
from grsdeep.code import GrsCode, encode
from grsdeep.deephole import DeepHoleSpec, construct_deep_hole, orbit_size
from grsdeep.errors import BudgetExceeded
from grsdeep.gf import get_field
from grsdeep.poly import Polynomial

from oracles import brute_distance, ref_field_for

F4, F5 = get_field(2, 2), get_field(5)
C4 = GrsCode.punctured(F4, [0], 2)
C5 = GrsCode.punctured(F5, [0], 2)


def test_gf4_census():
    t = run_census(C4).to_dict()["totals"]
    assert t["words"] == 64 and t["codewords"] == 16
    assert t["deep_holes"] == 48 == t["trivial"] == orbit_size(C4)
    assert t["theorem"] == t["other"] == 0


def test_gf5_census_against_oracle():
    # Frozen from a brute-force scan of all 625 words: 25 / 400 / 200 at distances 0 / 1 / 2.
    ref = ref_field_for(F5)
    by_distance = Counter(brute_distance(ref, C5.points, 2, u)[0] for u in itertools.product(range(5), repeat=4))
    assert by_distance == {0: 25, 1: 400, 2: 200}
    report = run_census(C5).to_dict()
    t = report["totals"]
    assert (t["codewords"], t["trivial"], t["theorem"], t["overlaps"]["trivial_and_theorem"]) == (25, 100, 100, 0)
    assert t["deep_holes"] == by_distance[2] == 200
    assert t["other"] == 0 and t["ordinary"] == by_distance[1]


@pytest.mark.parametrize("pm,excluded,k", [((2, 2), [0], 2), ((5, 1), [0], 2), ((5, 1), [2], 3), ((5, 1), [1, 4], 2),
                                           ((2, 2), [], 2), ((3, 1), [], 2), ((2, 2), [1, 2], 1)])
def test_orbit_and_full_modes_agree(pm, excluded, k):
    code = GrsCode.punctured(get_field(*pm), excluded, k)
    orbits = run_census(code, mode="orbits").to_dict()
    full = run_census(code, mode="full").to_dict()
    assert orbits["totals"] == full["totals"]
    assert orbits["histogram"] == full["histogram"]
    assert orbits["totals"]["words"] == code.q ** code.n


def test_overlap_is_counted_not_double_counted():
    # k = n-1 makes (x-a)^(q-2), of degree n-1 = k, a trivial deep hole too.
    code = GrsCode.punctured(F5, [0], 3)
    t = run_census(code).to_dict()["totals"]
    assert t["trivial"] == orbit_size(code)
    assert t["theorem"] == 0
    assert t["overlaps"]["trivial_and_theorem"] == orbit_size(code)
    assert t["deep_holes"] == t["trivial"] + t["theorem"] + t["other"]


def test_forms_enumeration_order_and_count():
    code = GrsCode.punctured(F5, [], 2)
    forms = list(iter_forms(code))
    assert len(forms) == count_forms(code) == 1 + 5 + 25
    assert [f.degree for f in forms] == sorted(f.degree for f in forms)
    assert forms[0].high == Polynomial.monomial(F5, 2)
    assert forms[1].high == Polynomial.monomial(F5, 3)
    assert forms[2].high == Polynomial(F5, [0, 0, 1, 1])
    assert len({f.high for f in forms}) == len(forms)


def test_classify_word_examples():
    assert classify_word(C5, (1, 3, 2, 4)).label == THEOREM
    assert classify_word(C5, (1, 4, 4, 1)).label == TRIVIAL
    assert classify_word(C5, encode(C5, Polynomial(F5, [2, 3]))).label == CODEWORD


def test_constructed_words_classified_as_theorem():
    for pm, excluded in [((7, 1), [0]), ((7, 1), [1, 5]), ((2, 3), [6])]:
        F = get_field(*pm)
        for k in range(2, F.q - len(excluded)):
            code = GrsCode.punctured(F, excluded, k)
            for j in range(1, len(excluded) + 1):
                u = construct_deep_hole(DeepHoleSpec(code, j, 3 % F.q or 1, Polynomial(F, [1] * k)))
                cls = classify_word(code, u)
                assert cls.label in (THEOREM, TRIVIAL) and cls.in_theorem_class


def test_census_budget():
    with pytest.raises(BudgetExceeded):
        run_census(GrsCode.punctured(get_field(7), [0], 2), budget=100)
    with pytest.raises(BudgetExceeded):
        run_census(C5, mode="full", budget=600)


def test_records_stream_in_form_order():
    records = []
    run_census(C5, on_record=records.append)
    assert [r.index for r in records] == list(range(count_forms(C5)))
    assert records[1].form.high == Polynomial.monomial(F5, 3) and records[1].classification.label == THEOREM


def test_checkpoint_resume(tmp_path):
    code = GrsCode.punctured(get_field(7), [0], 3)
    full = run_census(code).to_dict()
    ckpt = tmp_path / "ckpt.json"

    class Stop(Exception):
        pass

    seen = []

    def interrupt(rec):
        seen.append(rec.index)
        if len(seen) == 20:
            raise Stop

    with pytest.raises(Stop):
        run_census(code, checkpoint=str(ckpt), checkpoint_every=8, on_record=interrupt)
    state = json.loads(ckpt.read_text())
    assert state["records"] == 16
    rest = []
    resumed = run_census(code, checkpoint=str(ckpt), checkpoint_every=8, on_record=lambda r: rest.append(r.index))
    assert rest[0] == 16 and rest[-1] == count_forms(code) - 1
    assert resumed.to_dict() == full


def test_worker_count_does_not_change_census():
    code = GrsCode.punctured(get_field(7), [2], 2)
    a, b = [], []
    ra = run_census(code, on_record=lambda r: a.append(r.csv_row()))
    rb = run_census(code, on_record=lambda r: b.append(r.csv_row()), workers=3)
    assert ra.to_dict() == rb.to_dict() and a == b


def test_other_class_is_reported():
    # A finding, not a claim: record whatever OTHER count appears and check the bookkeeping.
    code = GrsCode.punctured(get_field(7), [0], 2)
    report = run_census(code)
    t = report.to_dict()["totals"]
    assert t["deep_holes"] == t["trivial"] + t["theorem"] + t["other"]
    assert report.orbit_counts[OTHER] * orbit_size(code) == t["other"]
