"""Dense linear algebra over F_q.

Vectors are tuples of encoded field elements; matrices are tuples of row
tuples.  Everything is immutable so results can be used as dict keys.
The coordinate action of a matrix is ``v -> X v`` (column convention).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, UsageError
from .field import FieldSpec

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def unit(n: int, i: int, j: int) -> Matrix:
    """Matrix unit E_ij (0-based indices): 1 at (i, j), 0 elsewhere."""
    return tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(n)) for r in range(n))


def swap_matrix(n: int, k: int, m: int) -> Matrix:
    """Identity with rows ``k`` and ``m`` exchanged (0-based)."""
    rows = [list(r) for r in identity(n)]
    rows[k], rows[m] = rows[m], rows[k]
    return as_matrix(rows)


def diagonal(entries: Sequence[int]) -> Matrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()


def scale(F: FieldSpec, c: int, M: Matrix) -> Matrix:
    return tuple(tuple(F.mul(c, x) for x in row) for row in M)


def mat_add(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def dot(F: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    add, mul = F.add, F.mul
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = add(s, mul(a, b))
    return s


def mat_mul(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise UsageError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    cols = transpose(B)
    return tuple(tuple(dot(F, row, col) for col in cols) for row in A)


def mat_apply(F: FieldSpec, X: Matrix, v: Sequence[int]) -> Vector:
    """The product ``X v``."""
    if X and len(X[0]) != len(v):
        raise UsageError(f"matrix with {len(X[0]) if X else 0} columns applied to length-{len(v)} vector")
    return tuple(dot(F, row, v) for row in X)


def rref(F: FieldSpec, M: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns ``(R, rank, pivots)`` where ``R`` has the same shape as ``M``
    with its zero rows at the bottom.
    """
    rows = [list(r) for r in M]
    if not rows:
        return (), 0, ()
    ncols = len(rows[0])
    add, mul, inv, neg = F.add, F.mul, F.inv, F.neg
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            s = inv(lead)
            rows[r] = [mul(s, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = neg(rows[i][c])
                rows[i] = [add(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(map(tuple, rows)), r, tuple(pivots)


def rank(F: FieldSpec, M: Matrix) -> int:
    return rref(F, M)[1]


def mat_inv(F: FieldSpec, M: Matrix) -> Matrix:
    n = len(M)
    if any(len(row) != n for row in M):
        raise UsageError("only square matrices can be inverted")
    aug = tuple(row + e for row, e in zip(M, identity(n)))
    R, _, pivots = rref(F, aug)
    if pivots[:n] != tuple(range(n)):
        raise DomainError("matrix is singular")
    return tuple(row[n:] for row in R)


def is_invertible(F: FieldSpec, M: Matrix) -> bool:
    return rank(F, M) == len(M)


def null_space(F: FieldSpec, M: Matrix, ncols: int | None = None) -> Matrix:
    """Basis, in RREF, of ``{v : M v = 0}``.

    ``ncols`` is needed only when ``M`` has no rows.
    """
    if ncols is None:
        if not M:
            raise UsageError("ncols is required for an empty matrix")
        ncols = len(M[0])
    R, r, pivots = rref(F, M) if M else ((), 0, ())
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][fcol])
        basis.append(v)
    if not basis:
        return ()
    return rref(F, as_matrix(basis))[0]


def is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def format_matrix(M: Matrix) -> str:
    """Rows separated by ``;``, entries by spaces: ``"1 0 0; 0 1 1"``."""
    return "; ".join(" ".join(str(x) for x in row) for row in M)


def parse_matrix(text: str, F: FieldSpec | None = None) -> Matrix:
    rows = [r.split() for r in text.strip().split(";") if r.strip()]
    try:
        M = as_matrix(rows)
    except ValueError as exc:
        raise UsageError(f"bad matrix text {text!r}") from exc
    if len({len(r) for r in M}) > 1:
        raise UsageError(f"ragged matrix text {text!r}")
    if F is not None and any(not 0 <= x < F.q for row in M for x in row):
        raise UsageError(f"matrix entries must lie in [0, {F.q})")
    return M
