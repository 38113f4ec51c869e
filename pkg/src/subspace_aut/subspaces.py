"""Subspaces of F_q^n held in canonical (RREF) form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, UsageError
from .field import FieldSpec
from .linalg import Matrix, Vector, as_matrix, format_matrix, null_space, parse_matrix, rref


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n given by its RREF basis (nonzero rows only).

    Two instances are equal exactly when they describe the same subspace,
    so ``basis`` doubles as a hash key.  The zero space has an empty basis.
    """

    n: int
    basis: Matrix
    pivots: tuple[int, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        if not self.pivots and self.basis:
            piv = tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)
            object.__setattr__(self, "pivots", piv)

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def key(self) -> Matrix:
        return self.basis

    @property
    def label(self) -> str:
        return format_matrix(self.basis) if self.basis else "0"

    def __str__(self) -> str:
        return f"[{self.label}]"


def span(F: FieldSpec, vectors: Iterable[Sequence[int]], n: int) -> Subspace:
    """Span of ``vectors``; the zero space is allowed here."""
    M = as_matrix(vectors)
    if any(len(v) != n for v in M):
        raise UsageError(f"vectors must have length {n}")
    if not M:
        return Subspace(n, ())
    R, r, piv = rref(F, M)
    return Subspace(n, R[:r], piv)


def canonicalize(F: FieldSpec, vectors: Iterable[Sequence[int]], n: int | None = None) -> Subspace:
    """The subspace ``[S]`` spanned by ``vectors``, which must not all be zero."""
    vectors = as_matrix(vectors)
    if n is None:
        if not vectors:
            raise DomainError("cannot canonicalize an empty set of vectors")
        n = len(vectors[0])
    W = span(F, vectors, n)
    if W.k == 0:
        raise DomainError("the zero subspace is not a vertex")
    return W


def reduce_vector(F: FieldSpec, W: Subspace, v: Sequence[int]) -> list[int]:
    """Residue of ``v`` after clearing the pivot columns of ``W``; zero iff v lies in W."""
    v = list(v)
    add, mul, neg = F.add, F.mul, F.neg
    for row, c in zip(W.basis, W.pivots):
        a = v[c]
        if a:
            f = neg(a)
            v = [add(x, mul(f, y)) for x, y in zip(v, row)]
    return v


def contains_vector(F: FieldSpec, W: Subspace, v: Sequence[int]) -> bool:
    return not any(reduce_vector(F, W, v))


def is_subspace(F: FieldSpec, W1: Subspace, W2: Subspace) -> bool:
    """``W1`` contained in ``W2`` (not necessarily properly)."""
    if W1.n != W2.n:
        raise UsageError("subspaces live in different ambient spaces")
    if W1.k > W2.k:
        return False
    return all(contains_vector(F, W2, row) for row in W1.basis)


def is_proper_subset(F: FieldSpec, W1: Subspace, W2: Subspace) -> bool:
    if W1.n != W2.n:
        raise UsageError("subspaces live in different ambient spaces")
    return W1.k < W2.k and all(contains_vector(F, W2, row) for row in W1.basis)


def perp(F: FieldSpec, W: Subspace) -> Subspace:
    """Orthogonal complement under the dot product ``sum a_i b_i``."""
    basis = null_space(F, W.basis, W.n) if W.basis else tuple(
        tuple(1 if i == j else 0 for j in range(W.n)) for i in range(W.n))
    return Subspace(W.n, basis)


def span_join(F: FieldSpec, W1: Subspace, W2: Subspace) -> Subspace:
    if W1.n != W2.n:
        raise UsageError("subspaces live in different ambient spaces")
    return span(F, W1.basis + W2.basis, W1.n)


def standard_rep(F: FieldSpec, v: Sequence[int]) -> Vector:
    """The scalar multiple of ``v`` whose first nonzero coordinate is 1."""
    lead = next((x for x in v if x), 0)
    if not lead:
        raise DomainError("the zero vector spans no 1-dimensional subspace")
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in v)


def enumerate_subspaces(F: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^n exactly once.

    Walks pivot sets in ``itertools.combinations`` order and, inside each,
    fills the free RREF entries with every tuple of field values in
    lexicographic order.  Each output is already canonical.
    """
    if not 0 <= k <= n:
        raise UsageError(f"dimension {k} outside [0, {n}]")
    if k == 0:
        yield Subspace(n, ())
        return
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        for values in itertools.product(range(F.q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), x in zip(slots, values):
                rows[i][c] = x
            yield Subspace(n, as_matrix(rows), pivots)


def parse_subspace(F: FieldSpec, text: str, n: int) -> Subspace:
    return canonicalize(F, parse_matrix(text, F), n)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))
