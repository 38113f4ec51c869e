"""Finite fields GF(p^m) with elements encoded as base-p integers.

An element with polynomial coefficients ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}``
is stored as the integer ``sum(c_i * p**i)``.  All arithmetic goes through
precomputed log/antilog tables, so a ``FieldSpec`` is cheap to query once
built.  ``FieldElement`` is a thin operator-overloading wrapper for callers
who prefer ``a + b`` to ``F.add(a, b)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, UsageError

# above this order the addition table is not materialized
_ADD_TABLE_LIMIT = 256


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


# -- polynomials over F_p, coefficient lists low degree first ----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the nonzero polynomial ``b`` over F_p."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DomainError("division by the zero polynomial")
    lead_inv = pow(b[-1], p - 2, p) if p > 2 else 1
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return poly_mod(prod, mod, p)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive test: no monic polynomial of degree 1..deg/2 divides ``poly``."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m``, comparing coefficients c_0, c_1, ... in turn."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise DomainError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


class FieldSpec:
    """The field F_q, q = p**m, defined by a monic irreducible ``modulus``.

    Elements are plain ints in ``range(q)``; every method below takes and
    returns those ints.  Instances are immutable and compare equal when
    ``(p, m, modulus)`` agree.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        if m < 1:
            raise UsageError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise UsageError(f"modulus {modulus} is not monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise UsageError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise UsageError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)[: self.m]):
            v = v * self.p + c
        return v

    def _slow_mul(self, a: int, b: int) -> int:
        return self._encode(poly_mulmod(self._digits(a), self._digits(b), self.modulus, self.p))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        self.generator = None
        for g in range(2 if q > 2 else 1, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == q - 1:
                self.generator = g
                break
        assert self.generator is not None
        self._exp = exp + exp  # doubled so log sums need no reduction
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i
        if q <= _ADD_TABLE_LIMIT:
            self._add_table = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
        self._neg = [self._encode([(-c) % p for c in self._digits(a)]) for a in range(q)]

    def _slow_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    # -- arithmetic on encoded ints -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DomainError("zero has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, t: int) -> int:
        """``a ** (p ** t)`` for ``0 <= t < m``."""
        if not 0 <= t < self.m:
            raise UsageError(f"Frobenius exponent {t} outside [0, {self.m})")
        if a == 0 or t == 0:
            return a
        return self._exp[(self._log[a] * self.p**t) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.q:
            raise UsageError(f"{value} is not an element encoding of F_{self.q}")
        return FieldElement(self, value)

    def enumerate(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def is_prime_subfield(self, a: int) -> bool:
        return a < self.p

    # -- identity ------------------------------------------------------------

    def _key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __str__(self) -> str:
        return format_field(self)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise UsageError("operands belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, t: int) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.value, t))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} in F_{self.field.q}"


_FIELD_RE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*(?::\s*([\d,\s]+))?$")


def parse_field(text: str) -> FieldSpec:
    """Parse ``"p^m"`` or ``"p^m:c0,c1,...,cm"`` (modulus coefficients low degree first)."""
    match = _FIELD_RE.match(text)
    if not match:
        raise UsageError(f"field spec {text!r} is not of the form p^m[:c0,...,cm]")
    p, m = int(match.group(1)), int(match.group(2))
    modulus = None
    if match.group(3):
        modulus = [int(c) for c in match.group(3).split(",") if c.strip()]
    return FieldSpec(p, m, modulus)


def format_field(F: FieldSpec) -> str:
    text = f"{F.p}^{F.m}"
    if F.modulus != default_modulus(F.p, F.m):
        text += ":" + ",".join(str(c) for c in F.modulus)
    return text

