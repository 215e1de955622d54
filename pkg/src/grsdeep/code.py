"""Generalized Reed-Solomon codes and the Hamming metric.

Words are tuples of element indices aligned with the evaluation points.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeTooHigh,
    DimensionOutOfRange,
    DuplicateAbscissa,
    FieldMismatch,
    LengthMismatch,
)
from .gf import FiniteField
from .poly import NEG_INF, Polynomial, lagrange_interpolate

DEFAULT_BUDGET = 1 << 24

# Messages per codebook chunk, and the largest codebook (in entries) kept cached.
_CHUNK = 1 << 15
_CACHE_ENTRIES = 1 << 26

Word = tuple


@dataclass(frozen=True)
class EvaluationSet:
    """Ordered evaluation points D and the excluded points a_1..a_l.

    ``points`` is always in ascending index order.  ``excluded`` keeps the
    order it was given in, since deep-hole constructions refer to a_j by
    position.
    """

    field: FiniteField
    points: tuple[int, ...]
    excluded: tuple[int, ...]

    @classmethod
    def punctured(cls, field: FiniteField, excluded: Sequence[int] = ()) -> "EvaluationSet":
        excl = tuple(field.check(int(a)) for a in excluded)
        if len(set(excl)) != len(excl):
            raise DuplicateAbscissa("excluded points must be distinct")
        gone = set(excl)
        points = tuple(x for x in range(field.q) if x not in gone)
        if not points:
            raise DimensionOutOfRange("evaluation set is empty")
        return cls(field, points, excl)

    @classmethod
    def from_points(cls, field: FiniteField, points: Sequence[int]) -> "EvaluationSet":
        pts = [field.check(int(x)) for x in points]
        if len(set(pts)) != len(pts):
            raise DuplicateAbscissa("evaluation points must be distinct")
        if not pts:
            raise DimensionOutOfRange("evaluation set is empty")
        chosen = set(pts)
        return cls(field, tuple(sorted(pts)), tuple(x for x in range(field.q) if x not in chosen))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.excluded)


@dataclass(frozen=True)
class GrsCode:
    eval_set: EvaluationSet
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.eval_set.n:
            raise DimensionOutOfRange(f"k={self.k} outside 1..{self.eval_set.n}")

    @classmethod
    def punctured(cls, field: FiniteField, excluded: Sequence[int], k: int) -> "GrsCode":
        return cls(EvaluationSet.punctured(field, excluded), k)

    @property
    def field(self) -> FiniteField:
        return self.eval_set.field

    @property
    def points(self) -> tuple[int, ...]:
        return self.eval_set.points

    @property
    def n(self) -> int:
        return self.eval_set.n

    @property
    def q(self) -> int:
        return self.eval_set.field.q

    @property
    def min_distance(self) -> int:
        return self.n - self.k + 1

    @property
    def covering_radius(self) -> int:
        return self.n - self.k

    @property
    def num_codewords(self) -> int:
        return self.q ** self.k

    def __repr__(self):
        return (f"GrsCode({self.field!r}, n={self.n}, k={self.k}, "
                f"excluded={list(self.eval_set.excluded)})")


def code_new(eval_set: EvaluationSet, k: int) -> GrsCode:
    return GrsCode(eval_set, k)


def check_word(eval_set: EvaluationSet, u: Sequence[int]) -> Word:
    u = tuple(int(c) for c in u)
    if len(u) != eval_set.n:
        raise LengthMismatch(f"word has length {len(u)}, expected {eval_set.n}")
    for c in u:
        eval_set.field.check(c)
    return u


def evaluate_on(eval_set: EvaluationSet, f: Polynomial) -> Word:
    if f.field != eval_set.field:
        raise FieldMismatch(f"{f.field!r} vs {eval_set.field!r}")
    return tuple(f(x) for x in eval_set.points)


def encode(code: GrsCode, message: Polynomial) -> Word:
    if message.degree > code.k - 1:
        raise DegreeTooHigh(f"message degree {message.degree} exceeds k-1={code.k - 1}")
    return evaluate_on(code.eval_set, message)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum(1 for a, b in zip(u, v) if a != b)


def hamming_weight(u: Sequence[int]) -> int:
    return sum(1 for a in u if a != 0)


def word_add(field: FiniteField, u: Sequence[int], v: Sequence[int]) -> Word:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    return tuple(field.add(a, b) for a, b in zip(u, v))


def word_scale(field: FiniteField, c: int, u: Sequence[int]) -> Word:
    return tuple(field.mul(c, a) for a in u)


def interpolate_word(eval_set: EvaluationSet, u: Sequence[int]) -> Polynomial:
    u = check_word(eval_set, u)
    return lagrange_interpolate(eval_set.field, list(zip(eval_set.points, u)))


def word_degree(eval_set: EvaluationSet, u: Sequence[int]):
    """Degree of the interpolation polynomial of u; NEG_INF for the zero word."""
    u = check_word(eval_set, u)
    if not any(u):
        return NEG_INF
    return interpolate_word(eval_set, u).degree


def is_codeword(code: GrsCode, u: Sequence[int]) -> bool:
    return word_degree(code.eval_set, u) <= code.k - 1


def check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceeded(f"{what}: {count} exceeds budget {budget}")


def enumerate_codewords(code: GrsCode, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[Polynomial, Word]]:
    """All q^k (message, codeword) pairs in ascending message-index order."""
    check_budget(code.num_codewords, budget, "codewords")
    F = code.field
    for start, chunk in codebook_chunks(code, budget):
        for offset, row in enumerate(chunk):
            msg = Polynomial.from_index(F, start + offset, code.k)
            yield msg, tuple(int(c) for c in row)


# -- vectorised codebook ------------------------------------------------------

@functools.lru_cache(maxsize=64)
def _power_rows(code: GrsCode) -> np.ndarray:
    """Row i holds (x_1^i, ..., x_n^i)."""
    F = code.field
    return np.array([[F.pow(x, i) for x in code.points] for i in range(code.k)],
                    dtype=np.int64).reshape(code.k, code.n)


def _digit_table(code: GrsCode, i: int) -> np.ndarray:
    """(q, n) array whose row c is c * x^i evaluated on D."""
    F = code.field
    values = np.arange(F.q, dtype=np.int64)[:, None]
    return F.mul_vec(values, _power_rows(code)[i][None, :])


def _low_codebook(code: GrsCode, digits: int) -> np.ndarray:
    F = code.field
    book = np.zeros((1, code.n), dtype=np.int64)
    for i in range(digits):
        table = _digit_table(code, i)
        # Digit i varies slowest in the new block, matching base-q message order.
        book = F.add_vec(table[:, None, :], book[None, :, :]).reshape(-1, code.n)
    return book


def _split_digits(code: GrsCode) -> int:
    low = 0
    while low < code.k and code.q ** (low + 1) <= _CHUNK:
        low += 1
    return max(low, 1)


def codebook_chunks(code: GrsCode, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(first_message_index, codewords)`` blocks covering all messages in order."""
    check_budget(code.num_codewords, budget, "codewords")
    if code.num_codewords * code.n <= _CACHE_ENTRIES:
        yield 0, _cached_codebook(code)
        return
    yield from _generate_chunks(code)


def _generate_chunks(code: GrsCode) -> Iterator[tuple[int, np.ndarray]]:
    F = code.field
    low = _split_digits(code)
    low_book = _low_codebook(code, low)
    block = F.q ** low
    high_digits = code.k - low
    tables = [_digit_table(code, low + i) for i in range(high_digits)]
    for h in range(F.q ** high_digits):
        shift = np.zeros(code.n, dtype=np.int64)
        rest = h
        for t in range(high_digits):
            rest, d = divmod(rest, F.q)
            if d:
                shift = F.add_vec(shift, tables[t][d])
        yield h * block, F.add_vec(low_book, shift[None, :]).astype(np.uint16)


@functools.lru_cache(maxsize=8)
def _cached_codebook(code: GrsCode) -> np.ndarray:
    book = np.concatenate([c for _, c in _generate_chunks(code)])
    book.setflags(write=False)
    return book
