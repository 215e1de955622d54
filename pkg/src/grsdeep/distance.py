"""Exact error distance to a GRS code.

Two engines compute the same certificate by different routes:

* ``exhaustive`` compares the word against every codeword;
* ``subsets`` interpolates through every k-subset of positions and keeps the
  candidate polynomial agreeing with the word most often.

Both partition their search space into chunks whose partial results merge
with an order-independent max/union, so ``workers`` never changes the output.
"""
from __future__ import annotations

import functools
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Sequence

import numpy as np

from .code import (
    DEFAULT_BUDGET,
    GrsCode,
    check_budget,
    check_word,
    codebook_chunks,
    word_degree,
)
from .errors import EngineMismatch, GrsError
from .poly import Polynomial

NEAREST_CAP = 64
ENGINES = ("auto", "exhaustive", "subsets", "cross")

_SUBSET_BATCH = 4096
_SUBSET_CACHE_ENTRIES = 1 << 24


@dataclass(frozen=True)
class DistanceCertificate:
    n: int
    k: int
    distance: int
    max_agreements: int
    nearest_count: int
    nearest_messages: tuple[Polynomial, ...]
    engine: str
    is_deep_hole: bool = dc_field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "is_deep_hole", self.distance == self.n - self.k)

    def to_dict(self) -> dict:
        return {
            "distance": self.distance,
            "max_agreements": self.max_agreements,
            "is_deep_hole": self.is_deep_hole,
            "nearest_count": self.nearest_count,
            "nearest_messages": [m.to_csv() for m in self.nearest_messages],
            "engine": self.engine,
        }


def _map_chunks(fn: Callable, chunks: Iterable, workers: int) -> list:
    if workers <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


@dataclass
class _Best:
    """Running maximum with the set of message indices attaining it."""

    agreements: int = -1
    indices: set = dc_field(default_factory=set)

    def merge(self, other: "_Best") -> None:
        if other.agreements > self.agreements:
            self.agreements = other.agreements
            self.indices = set(other.indices)
        elif other.agreements == self.agreements:
            self.indices |= other.indices


def _certificate(code: GrsCode, best: _Best, engine: str, cap: int) -> DistanceCertificate:
    ordered = sorted(best.indices)
    count = len(ordered)
    keep = ordered if count <= cap else ordered[:1]
    F = code.field
    return DistanceCertificate(
        n=code.n,
        k=code.k,
        distance=code.n - best.agreements,
        max_agreements=best.agreements,
        nearest_count=count,
        nearest_messages=tuple(Polynomial.from_index(F, i, code.k) for i in keep),
        engine=engine,
    )


# -- exhaustive engine ---------------------------------------------------------

def error_distance_exhaustive(code: GrsCode, u: Sequence[int], budget: int = DEFAULT_BUDGET,
                              nearest_cap: int = NEAREST_CAP, workers: int = 1) -> DistanceCertificate:
    """Minimum Hamming distance from ``u`` over all q^k codewords."""
    u = np.array(check_word(code.eval_set, u), dtype=np.int64)

    def scan(item):
        start, chunk = item
        agree = (chunk == u[None, :]).sum(axis=1)
        top = int(agree.max())
        hits = np.flatnonzero(agree == top) + start
        return _Best(top, set(hits.tolist()))

    best = _Best()
    for part in _map_chunks(scan, _split_chunks(codebook_chunks(code, budget), workers), workers):
        best.merge(part)
    return _certificate(code, best, "exhaustive", nearest_cap)


def _split_chunks(chunks, workers):
    # A cached codebook arrives as one block; slice it so workers share the scan.
    for start, block in chunks:
        if workers > 1 and len(block) > workers:
            step = -(-len(block) // workers)
            for s in range(0, len(block), step):
                yield start + s, block[s:s + step]
        else:
            yield start, block


# -- subsets engine --------------------------------------------------------------

def _subset_tables(code: GrsCode, subsets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Lagrange data for a batch of k-subsets of positions.

    Returns ``values`` of shape (S, n, k): basis polynomial j of subset s
    evaluated at every point of D, and ``coeffs`` of shape (S, k, k): the
    coefficients (low first) of basis polynomial j.
    """
    F = code.field
    k, n = code.k, code.n
    pts = np.array(code.points, dtype=np.int64)
    xs = pts[subsets]  # (S, k)
    S = len(subsets)
    values = np.empty((S, n, k), dtype=np.int64)
    coeffs = np.empty((S, k, k), dtype=np.int64)
    for j in range(k):
        num = np.ones((S, n), dtype=np.int64)
        den = np.ones(S, dtype=np.int64)
        poly = np.zeros((S, k), dtype=np.int64)
        poly[:, 0] = 1
        for i in range(k):
            if i == j:
                continue
            num = F.mul_vec(num, F.sub_vec(pts[None, :], xs[:, i:i + 1]))
            den = F.mul_vec(den, F.sub_vec(xs[:, j], xs[:, i]))
            # poly *= (x - xs_i)
            shifted = np.zeros_like(poly)
            shifted[:, 1:] = poly[:, :-1]
            poly = F.add_vec(shifted, F.mul_vec(F.neg_vec(xs[:, i:i + 1]), poly))
        inv_den = F.inv_vec(den)
        values[:, :, j] = F.mul_vec(num, inv_den[:, None])
        coeffs[:, j, :] = F.mul_vec(poly, inv_den[:, None])
    return values, coeffs


@functools.lru_cache(maxsize=16)
def _cached_subset_tables(code: GrsCode):
    subsets = np.array(list(itertools.combinations(range(code.n), code.k)), dtype=np.int64)
    subsets = subsets.reshape(-1, code.k)
    values, coeffs = _subset_tables(code, subsets)
    for arr in (subsets, values, coeffs):
        arr.setflags(write=False)
    return subsets, values, coeffs


def _subset_batches(code: GrsCode):
    total = math.comb(code.n, code.k)
    if total * code.n * code.k <= _SUBSET_CACHE_ENTRIES:
        subsets, values, coeffs = _cached_subset_tables(code)
        for s in range(0, total, _SUBSET_BATCH):
            yield subsets[s:s + _SUBSET_BATCH], values[s:s + _SUBSET_BATCH], coeffs[s:s + _SUBSET_BATCH]
        return
    combos = itertools.combinations(range(code.n), code.k)
    while True:
        batch = list(itertools.islice(combos, _SUBSET_BATCH))
        if not batch:
            return
        subsets = np.array(batch, dtype=np.int64)
        yield (subsets, *_subset_tables(code, subsets))


def _combine(F, weights: np.ndarray, samples: np.ndarray) -> np.ndarray:
    """sum_j weights[..., j] * samples[..., j] over the field."""
    out = F.mul_vec(weights[..., 0], samples[..., 0])
    for j in range(1, weights.shape[-1]):
        out = F.add_vec(out, F.mul_vec(weights[..., j], samples[..., j]))
    return out


def error_distance_subsets(code: GrsCode, u: Sequence[int], budget: int = DEFAULT_BUDGET,
                           nearest_cap: int = NEAREST_CAP, workers: int = 1) -> DistanceCertificate:
    """Maximise agreements over polynomials through k positions of ``u``."""
    check_budget(math.comb(code.n, code.k), budget, "k-subsets")
    F = code.field
    q = F.q
    u = np.array(check_word(code.eval_set, u), dtype=np.int64)
    place = q ** np.arange(code.k, dtype=np.int64)

    def scan(batch):
        subsets, values, coeffs = batch
        samples = u[subsets]  # (S, k)
        fitted = _combine(F, values, samples[:, None, :])  # (S, n)
        agree = (fitted == u[None, :]).sum(axis=1)
        top = int(agree.max())
        rows = np.flatnonzero(agree == top)
        # coefficient i of the fitted polynomial = sum_j u_j * coeffs[s, j, i]
        msg = _combine(F, np.swapaxes(coeffs[rows], 1, 2), samples[rows][:, None, :])
        return _Best(top, set((msg * place).sum(axis=1).tolist()))

    best = _Best()
    for part in _map_chunks(scan, _subset_batches(code), workers):
        best.merge(part)
    if best.agreements < code.k:
        raise EngineMismatch(f"best fit agrees on {best.agreements} < k={code.k} positions")
    return _certificate(code, best, "subsets", nearest_cap)


# -- bounds, dispatch and cross-checking ---------------------------------------

def distance_bounds(code: GrsCode, u: Sequence[int]) -> tuple[int, int]:
    """Degree-based lower and upper bounds on the error distance."""
    deg = word_degree(code.eval_set, u)
    if deg <= code.k - 1:
        return 0, 0
    return code.n - deg, code.n - code.k


def choose_engine(code: GrsCode) -> str:
    if math.comb(code.n, code.k) * code.k ** 2 < code.num_codewords * code.n:
        return "subsets"
    return "exhaustive"


def cross_check(code: GrsCode, u: Sequence[int], budget: int = DEFAULT_BUDGET,
                nearest_cap: int = NEAREST_CAP, workers: int = 1) -> DistanceCertificate:
    a = error_distance_exhaustive(code, u, budget, nearest_cap, workers)
    b = error_distance_subsets(code, u, budget, nearest_cap, workers)
    for attr in ("distance", "max_agreements", "nearest_count", "nearest_messages"):
        if getattr(a, attr) != getattr(b, attr):
            raise EngineMismatch(
                f"{attr}: exhaustive={getattr(a, attr)!r} subsets={getattr(b, attr)!r} for word {tuple(u)}")
    for m in a.nearest_messages:
        agree = sum(1 for x, c in zip(code.points, u) if m(x) == c)
        if agree != a.max_agreements:
            raise EngineMismatch(f"nearest message {m!r} agrees on {agree}, not {a.max_agreements}")
    return DistanceCertificate(a.n, a.k, a.distance, a.max_agreements, a.nearest_count,
                               a.nearest_messages, "cross")


def error_distance(code: GrsCode, u: Sequence[int], engine: str = "auto", budget: int = DEFAULT_BUDGET,
                   nearest_cap: int = NEAREST_CAP, workers: int = 1) -> DistanceCertificate:
    if engine == "auto":
        engine = choose_engine(code)
    if engine == "exhaustive":
        return error_distance_exhaustive(code, u, budget, nearest_cap, workers)
    if engine == "subsets":
        return error_distance_subsets(code, u, budget, nearest_cap, workers)
    if engine == "cross":
        return cross_check(code, u, budget, nearest_cap, workers)
    raise GrsError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
