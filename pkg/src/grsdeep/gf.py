"""Finite fields GF(p^m) with integer-indexed elements.

An element is a plain ``int`` in ``[0, q)``.  Index ``sum(c_i * p**i)``
stands for the residue class of ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}``
modulo the field's monic irreducible modulus, so 0 and 1 are the additive
and multiplicative identities in every field.

Multiplication goes through exp/log tables built from the smallest-index
primitive element.  Addition is ``(a + b) % p`` for prime fields, XOR in
characteristic 2, and digit-wise otherwise.
"""
from __future__ import annotations

import functools
from typing import Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    ElementOutOfRange,
    InvalidModulus,
    ModulusReducible,
    NotPrime,
    OrderTooLarge,
)

MAX_ORDER = 1 << 16
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def to_digits(x: int, p: int, length: int) -> list[int]:
    ds = []
    for _ in range(length):
        x, r = divmod(x, p)
        ds.append(r)
    return ds


def from_digits(ds: Sequence[int], p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


# Plain coefficient-list arithmetic over GF(p), used only while bootstrapping
# the tables (before the field object exists).

def _prime_poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv_lead = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv_lead % p
        if c:
            for t in range(dg + 1):
                f[i - dg + t] = (f[i - dg + t] - c * g[t]) % p
    r = f[:dg]
    while r and r[-1] == 0:
        r.pop()
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2 over GF(p)."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    if m == 1:
        return True
    if modulus[0] == 0:
        return False
    for d in range(1, m // 2 + 1):
        for low in range(p ** d):
            divisor = to_digits(low, p, d) + [1]
            if not _prime_poly_rem(list(modulus), divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Monic irreducible of degree m with the smallest coefficient index."""
    for low in range(p ** m):
        cand = to_digits(low, p, m) + [1]
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """The field GF(p^m).

    ``modulus`` may be a coefficient list (low to high, length m+1) or its
    integer index, e.g. 7 for x^2+x+1 over GF(2).  When omitted for m > 1 the
    smallest-index monic irreducible is used.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | int | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise InvalidModulus(f"extension degree must be >= 1, got {m}")
        if p ** m > MAX_ORDER:
            raise OrderTooLarge(f"{p}^{m} exceeds the supported order {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = p ** m

        if modulus is None:
            mod = smallest_irreducible(p, m) if m > 1 else [0, 1]
        else:
            if isinstance(modulus, int):
                mod = to_digits(modulus, p, m + 1)
                if from_digits(mod, p) != modulus:
                    raise InvalidModulus(f"modulus index {modulus} has degree above {m}")
            else:
                mod = [int(c) for c in modulus]
            if len(mod) != m + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
                raise InvalidModulus(f"modulus must be monic of degree {m} over GF({p})")
            if not is_irreducible(mod, p):
                raise ModulusReducible(f"modulus {mod} is reducible over GF({p})")
        self.modulus: tuple[int, ...] | None = tuple(mod) if m > 1 else None
        self._mod = mod

        self._neg = [self._neg_raw(a) for a in range(self.q)]
        self.primitive = self._find_primitive()
        self._build_tables()
        self._neg_arr = np.array(self._neg, dtype=np.int64)
        self._add_table = None
        if m > 1 and p != 2 and self.q <= _ADD_TABLE_LIMIT:
            idx = np.arange(self.q)
            self._add_table = self._add_digits(idx[:, None], idx[None, :])

    # -- construction helpers -------------------------------------------

    def _neg_raw(self, a: int) -> int:
        return from_digits([(-d) % self.p for d in to_digits(a, self.p, self.m)], self.p)

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = to_digits(a, p, m), to_digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self._mod
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for t in range(m + 1):
                    prod[i - m + t] = (prod[i - m + t] - c * mod[t]) % p
        return from_digits(prod[:m], p)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        factors = prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_raw(g, order // r) != 1 for r in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self) -> None:
        order = self.q - 1
        exp = [0] * (2 * order)
        log = [0] * self.q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, self.primitive)
        exp[order:] = exp[:order]
        self.exp_table = exp
        self.log_table = log
        self._exp_arr = np.array(exp, dtype=np.int64)
        self._log_arr = np.array(log, dtype=np.int64)

    def _add_digits(self, a, b):
        out = 0
        scale = 1
        for _ in range(self.m):
            out = out + ((a // scale) % self.p + (b // scale) % self.p) % self.p * scale
            scale *= self.p
        return out

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={self.modulus_index})"

    @property
    def modulus_index(self) -> int | None:
        return None if self.modulus is None else from_digits(self.modulus, self.p)

    @property
    def spec(self) -> str:
        """Text form accepted by :func:`parse_field`."""
        if self.m == 1:
            return str(self.p)
        return f"{self.p}^{self.m}/{self.modulus_index}"

    # -- scalar arithmetic -------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ElementOutOfRange(f"{a} is not an element index of {self!r}")
        return a

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero_elements(self) -> list[int]:
        return list(range(1, self.q))

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    # -- vectorised arithmetic on integer arrays ---------------------------

    def add_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_digits(a, b)

    def neg_vec(self, a):
        return self._neg_arr[np.asarray(a, dtype=np.int64)]

    def sub_vec(self, a, b):
        return self.add_vec(a, self.neg_vec(b))

    def mul_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp_arr[self._log_arr[a] + self._log_arr[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_vec(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp_arr[(self.q - 1 - self._log_arr[a]) % (self.q - 1)]


@functools.lru_cache(maxsize=None)
def get_field(p: int, m: int = 1, modulus: int | None = None) -> FiniteField:
    """Cached constructor; fields are immutable so sharing is safe."""
    return FiniteField(p, m, modulus)


def parse_field(spec: str) -> FiniteField:
    """Parse ``"p"``, ``"p^m"`` or ``"p^m/modulus-index"``."""
    text = spec.strip()
    modulus = None
    if "/" in text:
        text, mod_text = text.split("/", 1)
        modulus = int(mod_text)
    if "^" in text:
        p_text, m_text = text.split("^", 1)
        p, m = int(p_text), int(m_text)
    else:
        p, m = int(text), 1
    if m == 1 and modulus is not None:
        raise InvalidModulus("prime fields take no modulus")
    return get_field(p, m, modulus)
