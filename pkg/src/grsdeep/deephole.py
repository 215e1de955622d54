"""Deep holes from shifted inverse monomials, their witnesses, and orbit forms.

For a punctured evaluation set D = F_q minus {a_1..a_l}, the word

    u_j = lambda * (x - a_j)^(q-2) + r(x)   evaluated on D

is a deep hole of C_q(D, k) whenever q >= 4, 2 <= k <= q-l-1, lambda != 0
and deg r <= k-1.  Words related by ``u = lambda*v + f(D)`` with
deg f <= k-1 share their error distance, which :func:`canonical_form`
turns into a computable orbit label.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .code import (
    DEFAULT_BUDGET,
    GrsCode,
    Word,
    check_word,
    interpolate_word,
)
from .distance import NEAREST_CAP, DistanceCertificate, cross_check
from .errors import InvalidWitnessSet, PreconditionViolated
from .poly import Polynomial


@dataclass(frozen=True)
class DeepHoleSpec:
    code: GrsCode
    j: int
    lam: int
    r: Polynomial

    def __post_init__(self):
        check_theorem_preconditions(self.code)
        code = self.code
        if not 1 <= self.j <= code.eval_set.l:
            raise PreconditionViolated(f"j={self.j} outside 1..{code.eval_set.l}")
        code.field.check(self.lam)
        if self.lam == 0:
            raise PreconditionViolated("lambda must be nonzero")
        if self.r.field != code.field:
            raise PreconditionViolated("r lives over a different field")
        if self.r.degree > code.k - 1:
            raise PreconditionViolated(f"deg r = {self.r.degree} exceeds k-1 = {code.k - 1}")

    @property
    def a(self) -> int:
        return self.code.eval_set.excluded[self.j - 1]

    def polynomial(self) -> Polynomial:
        """lambda * (x - a_j)^(q-2) + r(x), fully expanded."""
        F = self.code.field
        return (Polynomial.linear(F, self.a) ** (F.q - 2)).scale(self.lam) + self.r


def check_theorem_preconditions(code: GrsCode) -> None:
    q, l, k = code.q, code.eval_set.l, code.k
    if q < 4:
        raise PreconditionViolated(f"need q >= 4, got q={q}")
    if l < 1:
        raise PreconditionViolated("need at least one excluded point")
    if not 2 <= k <= q - l - 1:
        raise PreconditionViolated(f"need 2 <= k <= q-l-1 = {q - l - 1}, got k={k}")


def construct_deep_hole(spec: DeepHoleSpec) -> Word:
    """Evaluate the deep-hole polynomial on D.

    a_j is not in D, so (x - a_j)^(q-2) is just 1/(x - a_j) there.
    """
    F = spec.code.field
    a = spec.a
    return tuple(F.add(F.mul(spec.lam, F.inv(F.sub(x, a))), spec.r(x)) for x in spec.code.points)


def inverse_word(code: GrsCode, j: int) -> Word:
    """The bare word (x - a_j)^(q-2) on D, i.e. lambda = 1 and r = 0."""
    F = code.field
    if not 1 <= j <= code.eval_set.l:
        raise PreconditionViolated(f"j={j} outside 1..{code.eval_set.l}")
    a = code.eval_set.excluded[j - 1]
    return tuple(F.inv(F.sub(x, a)) for x in code.points)


@dataclass(frozen=True)
class WitnessCertificate:
    g: Polynomial
    shift: int
    agreement_points: tuple[int, ...]
    verified: bool

    @property
    def codeword_polynomial(self) -> Polynomial:
        """h(x) = g(x - a_j), the degree k-1 message that attains k agreements."""
        F = self.g.field
        return self.g.compose(Polynomial.linear(F, self.shift))

    def to_dict(self) -> dict:
        return {
            "g": self.g.to_csv(),
            "h": self.codeword_polynomial.to_csv(),
            "agreement_points": list(self.agreement_points),
            "verified": self.verified,
        }


def eligible_witness_elements(code: GrsCode, j: int) -> list[int]:
    F = code.field
    a_j = code.eval_set.excluded[j - 1]
    banned = {F.sub(a, a_j) for a in code.eval_set.excluded}
    return [c for c in F.elements() if c not in banned]


def witness_polynomial(code: GrsCode, j: int, c_choice: Sequence[int] | None = None) -> WitnessCertificate:
    """Build g with (1 - x g(x)) = prod (1 - x / c_i) and check its agreements.

    ``y -> g(y - a_j)`` meets ``y -> 1/(y - a_j)`` on D exactly at the points
    c_i + a_j.
    """
    F = code.field
    k = code.k
    if not 1 <= j <= code.eval_set.l:
        raise PreconditionViolated(f"j={j} outside 1..{code.eval_set.l}")
    a_j = code.eval_set.excluded[j - 1]
    eligible = eligible_witness_elements(code, j)
    if c_choice is None:
        if len(eligible) < k:
            raise InvalidWitnessSet(f"only {len(eligible)} eligible elements for k={k}")
        cs = eligible[:k]
    else:
        cs = [F.check(int(c)) for c in c_choice]
        if len(cs) != k or len(set(cs)) != k:
            raise InvalidWitnessSet(f"need {k} distinct elements, got {cs}")
        allowed = set(eligible)
        bad = [c for c in cs if c not in allowed]
        if bad:
            raise InvalidWitnessSet(f"{bad} collide with a_t - a_j")

    prod = Polynomial(F, [1])
    for c in cs:
        prod = prod * Polynomial(F, [1, F.neg(F.inv(c))])
    numerator = Polynomial(F, [1]) - prod
    assert numerator.coeff(0) == 0
    g = Polynomial(F, numerator.coeffs[1:])
    if g.degree != k - 1:
        raise AssertionError(f"witness degree {g.degree} != k-1")

    points = tuple(sorted(F.add(c, a_j) for c in cs))
    on_d = set(code.points)
    hits = tuple(y for y in code.points if F.inv(F.sub(y, a_j)) == g(F.sub(y, a_j)))
    verified = all(y in on_d for y in points) and hits == points
    return WitnessCertificate(g=g, shift=a_j, agreement_points=points, verified=verified)


def verify_deep_hole(code: GrsCode, u: Sequence[int], budget: int = DEFAULT_BUDGET,
                     nearest_cap: int = NEAREST_CAP, workers: int = 1) -> tuple[bool, DistanceCertificate]:
    cert = cross_check(code, u, budget, nearest_cap, workers)
    return cert.is_deep_hole, cert


@dataclass(frozen=True)
class CanonicalForm:
    """Monic high part of a word's interpolation polynomial; ``high`` is None for codewords."""

    high: Polynomial | None

    @property
    def is_zero(self) -> bool:
        return self.high is None

    @property
    def degree(self):
        return None if self.high is None else self.high.degree

    def to_csv(self) -> str:
        return "ZERO" if self.high is None else self.high.to_csv()

    def __repr__(self):
        return "CanonicalForm(ZERO)" if self.high is None else f"CanonicalForm({self.high!r})"


def canonical_form(code: GrsCode, u: Sequence[int]) -> CanonicalForm:
    high = interpolate_word(code.eval_set, u).high_part(code.k)
    if high.is_zero():
        return CanonicalForm(None)
    return CanonicalForm(high.scale(code.field.inv(high.leading)))


def orbit_size(code: GrsCode) -> int:
    return (code.q - 1) * code.q ** code.k


def orbit_words(code: GrsCode, u: Sequence[int]) -> Iterator[Word]:
    """Every lambda*u + f(D) with lambda != 0 and deg f <= k-1 (with repetition if u is a codeword)."""
    F = code.field
    u = check_word(code.eval_set, u)
    low = [tuple(f(x) for x in code.points)
           for f in (Polynomial(F, cs) for cs in itertools.product(range(F.q), repeat=code.k))]
    for lam in F.nonzero_elements():
        scaled = [F.mul(lam, c) for c in u]
        for shift in low:
            yield tuple(F.add(a, b) for a, b in zip(scaled, shift))


def form_word(code: GrsCode, form: CanonicalForm) -> Word:
    """A representative word for a canonical form."""
    if form.high is None:
        return tuple(0 for _ in code.points)
    return tuple(form.high(x) for x in code.points)
