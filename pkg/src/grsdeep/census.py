"""Deep-hole census over the whole word space of a small code.

Orbit mode visits one representative per canonical form and weights it by
the orbit size (q-1) q^k; full mode visits all q^n words.  Both produce the
same totals.
"""
from __future__ import annotations

import itertools
import json
import os
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterator

from .code import DEFAULT_BUDGET, GrsCode, check_budget, word_degree
from .deephole import CanonicalForm, canonical_form, form_word, inverse_word, orbit_size
from .distance import error_distance
from .errors import GrsError
from .poly import Polynomial

CODEWORD = "CODEWORD"
TRIVIAL = "TRIVIAL_DEEP_HOLE"
THEOREM = "THEOREM_DEEP_HOLE"
OTHER = "OTHER_DEEP_HOLE"
ORDINARY = "ORDINARY"
LABELS = (CODEWORD, TRIVIAL, THEOREM, OTHER, ORDINARY)


def theorem_forms(code: GrsCode) -> set:
    """Canonical forms of (x - a_j)^(q-2) on D for every excluded point."""
    forms = set()
    for j in range(1, code.eval_set.l + 1):
        form = canonical_form(code, inverse_word(code, j))
        if not form.is_zero:
            forms.add(form.high.coeffs)
    return forms


@dataclass(frozen=True)
class Classification:
    label: str
    distance: int
    degree: object
    form: CanonicalForm
    in_theorem_class: bool

    @property
    def overlap(self) -> bool:
        return self.label == TRIVIAL and self.in_theorem_class


def _classify(code: GrsCode, u, distance: int, degree, form: CanonicalForm, forms: set) -> Classification:
    in_theorem = not form.is_zero and form.high.coeffs in forms
    if distance == 0:
        label = CODEWORD
    elif distance != code.covering_radius:
        label = ORDINARY
    elif degree == code.k:
        label = TRIVIAL
    elif in_theorem:
        label = THEOREM
    else:
        label = OTHER
    return Classification(label, distance, degree, form, in_theorem)


def classify_word(code: GrsCode, u, engine: str = "cross", budget: int = DEFAULT_BUDGET,
                  forms: set | None = None) -> Classification:
    """Label a word; TRIVIAL takes precedence over THEOREM, which beats OTHER."""
    if forms is None:
        forms = theorem_forms(code)
    cert = error_distance(code, u, engine=engine, budget=budget)
    return _classify(code, u, cert.distance, word_degree(code.eval_set, u), canonical_form(code, u), forms)


def count_forms(code: GrsCode) -> int:
    return sum(code.q ** (d - code.k) for d in range(code.k, code.n))


def iter_forms(code: GrsCode) -> Iterator[CanonicalForm]:
    """Non-zero canonical forms by degree, then by coefficient index."""
    F = code.field
    k = code.k
    for d in range(k, code.n):
        for idx in range(F.q ** (d - k)):
            middle = Polynomial.from_index(F, idx, d - k).coeffs
            middle = list(middle) + [0] * (d - k - len(middle))
            yield CanonicalForm(Polynomial(F, [0] * k + middle + [1]))


@dataclass
class CensusReport:
    params: dict
    mode: str
    totals: Counter = dc_field(default_factory=Counter)
    orbit_counts: Counter = dc_field(default_factory=Counter)
    histogram: Counter = dc_field(default_factory=Counter)
    records: int = 0
    engine: str = "cross"
    runtime: float = 0.0

    def add(self, cls: Classification, weight: int) -> None:
        self.totals["words"] += weight
        self.totals[cls.label] += weight
        if cls.label != CODEWORD and cls.distance == self.params["n"] - self.params["k"]:
            self.totals["deep_holes"] += weight
        if cls.overlap:
            self.totals["trivial_and_theorem"] += weight
        self.orbit_counts[cls.label] += 1
        deg = None if cls.degree == float("-inf") else int(cls.degree)
        self.histogram[(deg, cls.distance)] += weight

    def to_dict(self, timing: bool = False) -> dict:
        t = self.totals
        out = {
            "params": self.params,
            "mode": self.mode,
            "engine": self.engine,
            "totals": {
                "words": t["words"],
                "codewords": t[CODEWORD],
                "deep_holes": t["deep_holes"],
                "trivial": t[TRIVIAL],
                "theorem": t[THEOREM],
                "other": t[OTHER],
                "ordinary": t[ORDINARY],
                "overlaps": {"trivial_and_theorem": t["trivial_and_theorem"]},
            },
            "orbit_counts": {label: self.orbit_counts[label] for label in LABELS} if self.mode == "orbits" else None,
            "histogram": [
                {"degree": d, "distance": dist, "count": c}
                for (d, dist), c in sorted(self.histogram.items(),
                                           key=lambda kv: (-1 if kv[0][0] is None else kv[0][0], kv[0][1]))
            ],
        }
        if timing:
            out["runtime_seconds"] = round(self.runtime, 3)
        return out

    # Checkpoint state: everything needed to resume after ``records`` orbits.
    def state(self) -> dict:
        return {
            "params": self.params,
            "mode": self.mode,
            "records": self.records,
            "totals": dict(self.totals),
            "orbit_counts": dict(self.orbit_counts),
            "histogram": [[d, dist, c] for (d, dist), c in sorted(
                self.histogram.items(), key=lambda kv: (-1 if kv[0][0] is None else kv[0][0], kv[0][1]))],
        }

    @classmethod
    def from_state(cls, state: dict, engine: str) -> "CensusReport":
        rep = cls(params=state["params"], mode=state["mode"], engine=engine)
        rep.records = state["records"]
        rep.totals.update(state["totals"])
        rep.orbit_counts.update(state["orbit_counts"])
        for d, dist, c in state["histogram"]:
            rep.histogram[(d, dist)] = c
        return rep


def census_params(code: GrsCode) -> dict:
    F = code.field
    return {
        "field": F.spec,
        "q": F.q,
        "p": F.p,
        "m": F.m,
        "modulus": F.modulus_index,
        "l": code.eval_set.l,
        "excluded": list(code.eval_set.excluded),
        "points": list(code.points),
        "k": code.k,
        "n": code.n,
    }


@dataclass(frozen=True)
class OrbitRecord:
    index: int
    form: CanonicalForm
    classification: Classification

    def csv_row(self) -> list:
        return [self.form.to_csv(), self.classification.distance, self.classification.label]


CSV_HEADER = ["canonical_form_coeffs", "distance", "class"]


def _write_json_atomic(path: str, data: dict) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def run_census(code: GrsCode, mode: str = "orbits", engine: str | None = None, budget: int = DEFAULT_BUDGET,
               on_record: Callable[[OrbitRecord], None] | None = None, checkpoint: str | None = None,
               checkpoint_every: int = 256, workers: int = 1) -> CensusReport:
    """Classify the whole word space of ``code``.

    ``on_record`` receives one :class:`OrbitRecord` per orbit (orbit mode
    only), in form order.  With ``checkpoint`` set, progress is saved every
    ``checkpoint_every`` orbits and an existing checkpoint is resumed.
    """
    if mode not in ("orbits", "full"):
        raise GrsError(f"unknown census mode {mode!r}")
    if engine is None:
        engine = "cross" if mode == "orbits" else "auto"
    started = time.perf_counter()
    forms = theorem_forms(code)
    params = census_params(code)

    if mode == "full":
        check_budget(code.q ** code.n, budget, "words")
        report = CensusReport(params=params, mode=mode, engine=engine)
        for u in itertools.product(range(code.q), repeat=code.n):
            cert = error_distance(code, u, engine=engine, budget=budget)
            cls = _classify(code, u, cert.distance, word_degree(code.eval_set, u),
                            canonical_form(code, u), forms)
            report.add(cls, 1)
            report.records += 1
        report.runtime = time.perf_counter() - started
        return report

    check_budget(count_forms(code), budget, "canonical forms")
    report = None
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint, encoding="utf-8") as fh:
            state = json.load(fh)
        if state.get("params") != params or state.get("mode") != mode:
            raise GrsError(f"checkpoint {checkpoint} belongs to a different census")
        report = CensusReport.from_state(state, engine)
    if report is None:
        report = CensusReport(params=params, mode=mode, engine=engine)
        # The codeword orbit: the zero word plus (q-1) q^d words of each degree d < k.
        F = code.field
        report.totals["words"] += 1
        report.totals[CODEWORD] += 1
        report.histogram[(None, 0)] += 1
        for d in range(code.k):
            c = (F.q - 1) * F.q ** d
            report.totals["words"] += c
            report.totals[CODEWORD] += c
            report.histogram[(d, 0)] += c
        report.orbit_counts[CODEWORD] += 1

    weight = orbit_size(code)

    def work(item):
        index, form = item
        u = form_word(code, form)
        cert = error_distance(code, u, engine=engine, budget=budget)
        return OrbitRecord(index, form, _classify(code, u, cert.distance, form.degree, form, forms))

    pending = itertools.islice(enumerate(iter_forms(code)), report.records, None)
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            batch = list(itertools.islice(pending, checkpoint_every))
            if not batch:
                break
            results = pool.map(work, batch) if pool else map(work, batch)
            for rec in results:
                report.add(rec.classification, weight)
                report.records += 1
                if on_record:
                    on_record(rec)
            if checkpoint:
                _write_json_atomic(checkpoint, report.state())
    finally:
        if pool:
            pool.shutdown()
    report.runtime = time.perf_counter() - started
    return report
