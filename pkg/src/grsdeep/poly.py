"""Dense univariate polynomials over a :class:`~grsdeep.gf.FiniteField`."""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, DuplicateAbscissa, FieldMismatch
from .gf import FiniteField, from_digits, to_digits

# Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Coefficients are normalised on construction, so ``coeffs`` never ends in
    a zero and the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        for c in cs:
            field.check(c)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, field: FiniteField) -> "Polynomial":
        return cls(field)

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def linear(cls, field: FiniteField, root: int) -> "Polynomial":
        """The monic polynomial x - root."""
        return cls(field, [field.neg(root), 1])

    @classmethod
    def from_index(cls, field: FiniteField, index: int, length: int) -> "Polynomial":
        """Inverse of :attr:`index` for polynomials with at most ``length`` coefficients."""
        return cls(field, to_digits(index, field.q, length))

    @classmethod
    def from_csv(cls, field: FiniteField, text: str) -> "Polynomial":
        text = text.strip()
        if not text:
            return cls(field)
        return cls(field, [int(t) for t in text.split(",")])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def index(self) -> int:
        """Message index: the coefficients read as base-q digits, low first."""
        return from_digits(self.coeffs, self.field.q)

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def to_csv(self) -> str:
        return ",".join(map(str, self.coeffs)) if self.coeffs else "0"

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------

    def _same(self, other: "Polynomial") -> FiniteField:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return self.field

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self._same(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(c, a) for a in self.coeffs])

    def divrem(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        F = self._same(divisor)
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        if len(rem) - 1 < dd:
            return Polynomial(F), self
        inv_lead = F.inv(divisor.leading)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = F.mul(rem[i], inv_lead)
            quot[i - dd] = c
            if c:
                for t, g in enumerate(divisor.coeffs):
                    rem[i - dd + t] = F.sub(rem[i - dd + t], F.mul(c, g))
        return Polynomial(F, quot), Polynomial(F, rem[:dd])

    def __divmod__(self, divisor):
        return self.divrem(divisor)

    def __mod__(self, divisor):
        return self.divrem(divisor)[1]

    def __floordiv__(self, divisor):
        return self.divrem(divisor)[0]

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, a: int) -> int:
        F = self.field
        y = 0
        for c in reversed(self.coeffs):
            y = F.add(F.mul(y, a), c)
        return y

    evaluate = __call__

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)) by Horner's rule."""
        F = self._same(inner)
        out = Polynomial(F)
        for c in reversed(self.coeffs):
            out = out * inner + Polynomial(F, [c])
        return out

    def low_part(self, k: int) -> "Polynomial":
        """Terms of degree < k."""
        return Polynomial(self.field, self.coeffs[:k])

    def high_part(self, k: int) -> "Polynomial":
        """Terms of degree >= k (lower coefficients zeroed)."""
        return Polynomial(self.field, [0] * min(k, len(self.coeffs)) + list(self.coeffs[k:]))


def _distinct(field: FiniteField, xs: Sequence[int]) -> None:
    for x in xs:
        field.check(x)
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("abscissae must be pairwise distinct")


def vanishing_poly(field: FiniteField, points: Sequence[int]) -> Polynomial:
    """N(x) = prod (x - x_i) over the given distinct points."""
    _distinct(field, points)
    out = Polynomial(field, [1])
    for x in points:
        out = out * Polynomial.linear(field, x)
    return out


def _deflate(field: FiniteField, poly: Sequence[int], root: int) -> list[int]:
    # Synthetic division of a polynomial with known root; drops the zero remainder.
    n = len(poly) - 1
    out = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = field.add(poly[i], field.mul(carry, root))
        out[i - 1] = carry
    return out


def lagrange_interpolate(field: FiniteField, points: Sequence[tuple[int, int]]) -> Polynomial:
    """The unique polynomial of degree < len(points) through ``points``.

    Uses the Lagrange basis through the shared vanishing polynomial, so the
    cost is O(n^2) field operations.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [x for x, _ in points]
    _distinct(field, xs)
    F = field
    N = vanishing_poly(F, xs).coeffs
    out = [0] * len(points)
    for i, (xi, yi) in enumerate(points):
        F.check(yi)
        if yi == 0:
            continue
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                denom = F.mul(denom, F.sub(xi, xj))
        c = F.div(yi, denom)
        basis = _deflate(F, N, xi)
        for t, b in enumerate(basis):
            if b:
                out[t] = F.add(out[t], F.mul(c, b))
    return Polynomial(F, out)


def reduce_mod_vanishing(f: Polynomial, points: Sequence[int]) -> Polynomial:
    """f mod N(x); agrees with f at every point of ``points``."""
    if len(f.coeffs) <= len(points):
        _distinct(f.field, points)
        return f
    return f % vanishing_poly(f.field, points)
