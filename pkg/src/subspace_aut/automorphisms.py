"""Standard automorphisms of In(F_q^n) and the decomposition of an arbitrary one.

Permutations are tuples ``perm`` with ``perm[i]`` the image of vertex ``i``.
Composition is right-to-left: ``compose(p, r)`` applies ``r`` first.  A
:class:`StandardAutomorphism` ``(delta, X, t)`` stands for
``tau**delta o theta_X o chi_t``, so on a vertex ``W`` the Frobenius power
acts first, then ``X``, then (if ``delta == 1``) the orthogonal complement.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, IntegrityError, UnsupportedError, UsageError
from .field import FieldSpec
from .graph import InclusionGraph
from .linalg import (
    Matrix,
    diagonal,
    format_matrix,
    identity,
    is_invertible,
    mat_apply,
    mat_inv,
    mat_mul,
    mat_sub,
    rref,
    scale,
    swap_matrix,
)
from .subspaces import parse_subspace, perp, unit_vector

Perm = tuple[int, ...]


# -- permutations -----------------------------------------------------------------

def identity_perm(size: int) -> Perm:
    return tuple(range(size))


def compose(p: Sequence[int], r: Sequence[int]) -> Perm:
    """``p o r``: apply ``r``, then ``p``."""
    return tuple(p[x] for x in r)


def invert_perm(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def find_violation(G: InclusionGraph, perm: Sequence[int]) -> tuple[int, int] | None:
    """An adjacent pair ``(i, j)`` whose images are not adjacent, or None.

    Assumes ``perm`` is a bijection; a bijection sending every edge to an
    edge also sends non-edges to non-edges (the edge count is finite).
    """
    for i, nb in enumerate(G.adjacency):
        target = G.adj_sets[perm[i]]
        for j in nb:
            if j > i and perm[j] not in target:
                return i, j
    return None


def is_permutation(perm: Sequence[int], size: int) -> bool:
    return len(perm) == size and sorted(perm) == list(range(size))


def is_automorphism(G: InclusionGraph, perm: Sequence[int]) -> bool:
    return is_permutation(perm, len(G)) and find_violation(G, perm) is None


def check_automorphism(G: InclusionGraph, perm: Sequence[int]) -> None:
    """Raise ``UsageError`` naming the defect when ``perm`` is not an automorphism."""
    if len(perm) != len(G):
        raise UsageError(f"permutation has length {len(perm)}, graph has {len(G)} vertices")
    if not is_permutation(perm, len(G)):
        raise UsageError("map is not a bijection on the vertex set")
    bad = find_violation(G, perm)
    if bad is not None:
        i, j = bad
        Wi, Wj = G.vertices[i], G.vertices[j]
        raise UsageError(
            f"not an automorphism: {Wi} ~ {Wj} (vertices {i}, {j}) but their images "
            f"{G.vertices[perm[i]]}, {G.vertices[perm[j]]} are not adjacent")


# -- single-vertex actions ---------------------------------------------------------

def _lookup(G: InclusionGraph, rows) -> int:
    R, r, _ = rref(G.field, tuple(rows))
    return G.index_of[R[:r]]


def theta_image(G: InclusionGraph, X: Matrix, i: int) -> int:
    """Index of ``theta_X(W_i) = {X w : w in W_i}``."""
    F = G.field
    return _lookup(G, (mat_apply(F, X, row) for row in G.vertices[i].basis))


def chi_image(G: InclusionGraph, t: int, i: int) -> int:
    F = G.field
    if t == 0:
        return i
    return _lookup(G, (tuple(F.frobenius(x, t) for x in row) for row in G.vertices[i].basis))


def tau_perm(G: InclusionGraph) -> Perm:
    """``W -> W^perp``; cached on the graph."""
    cached = getattr(G, "_tau_perm", None)
    if cached is None:
        cached = tuple(G.index(perp(G.field, W)) for W in G.vertices)
        G._tau_perm = cached
    return cached


def theta_perm(G: InclusionGraph, X: Matrix) -> Perm:
    if len(X) != G.n or any(len(r) != G.n for r in X):
        raise UsageError(f"X must be {G.n}x{G.n}")
    if not is_invertible(G.field, X):
        raise DomainError("theta_X needs an invertible matrix")
    return tuple(theta_image(G, X, i) for i in range(len(G)))


def chi_perm(G: InclusionGraph, t: int) -> Perm:
    if not 0 <= t < G.field.m:
        raise UsageError(f"Frobenius exponent {t} outside [0, {G.field.m})")
    return tuple(chi_image(G, t, i) for i in range(len(G)))


# -- standard automorphisms ----------------------------------------------------------

def normalize_matrix(F: FieldSpec, X: Matrix) -> Matrix:
    """Scalar multiple of ``X`` whose first nonzero entry (row-major) is 1."""
    lead = next((x for row in X for x in row if x), 0)
    if not lead:
        raise DomainError("the zero matrix has no projective class")
    return scale(F, F.inv(lead), X) if lead != 1 else X


@dataclass(frozen=True)
class StandardAutomorphism:
    """``tau**delta o theta_X o chi_t`` with ``X`` scalar-normalized."""

    delta: int
    X: Matrix
    t: int

    @classmethod
    def make(cls, F: FieldSpec, delta: int, X: Matrix, t: int) -> StandardAutomorphism:
        if delta not in (0, 1):
            raise UsageError(f"delta must be 0 or 1, got {delta}")
        if not 0 <= t < F.m:
            raise UsageError(f"Frobenius exponent {t} outside [0, {F.m})")
        if not is_invertible(F, X):
            raise DomainError("X is singular")
        return cls(delta, normalize_matrix(F, X), t)

    def __str__(self) -> str:
        return f"delta={self.delta} t={self.t} X={format_matrix(self.X)}"


def std_to_perm(G: InclusionGraph, s: StandardAutomorphism) -> Perm:
    F, n = G.field, G.n
    if len(s.X) != n or not 0 <= s.t < F.m:
        raise UsageError("standard automorphism does not match the graph")
    tau = tau_perm(G) if s.delta else None
    out = []
    for W in G.vertices:
        rows = (mat_apply(F, s.X, tuple(F.frobenius(x, s.t) for x in row)) for row in W.basis)
        j = _lookup(G, rows)
        out.append(tau[j] if tau else j)
    return tuple(out)


def random_standard(F: FieldSpec, n: int, rng: random.Random) -> StandardAutomorphism:
    """Uniform delta and t, and a uniformly random invertible X (by rejection)."""
    delta = rng.randrange(2)
    t = rng.randrange(F.m)
    while True:
        X = tuple(tuple(rng.randrange(F.q) for _ in range(n)) for _ in range(n))
        if is_invertible(F, X):
            return StandardAutomorphism.make(F, delta, X, t)


def pgl_order(n: int, q: int) -> int:
    gl = math.prod(q**n - q**i for i in range(n))
    return gl // (q - 1)


def aut_order(n: int, p: int, m: int) -> int:
    """|Aut In(F_q^n)|, q = p**m."""
    if n < 2:
        raise UsageError(f"n must be >= 2, got {n}")
    q = p**m
    if n == 2:
        return math.factorial(q + 1)
    return 2 * pgl_order(n, q) * m


# -- decomposition ---------------------------------------------------------------------

@dataclass
class DecompositionTrace:
    """Intermediate objects of a decomposition.

    ``f_table`` maps ``(i, j, a)`` (0-based i < j) to ``f_ij(a)``, defined by
    ``sigma_2([e_i + a e_j]) = [e_i + f_ij(a) e_j]``.
    """

    delta: int = 0
    A: Matrix = ()
    A_steps: list[Matrix] = field(default_factory=list)
    f_table: dict[tuple[int, int, int], int] = field(default_factory=dict)
    f: tuple[int, ...] = ()
    D: Matrix = ()
    t: int = 0


def decompose(G: InclusionGraph, sigma: Sequence[int], *, full_tables: bool = False,
              check_input: bool = True) -> tuple[StandardAutomorphism, DecompositionTrace]:
    """Factor an automorphism as ``tau**delta o theta_X o chi_t``.

    Follows the constructive argument step by step: undo tau if [e_1] goes
    to a hyperplane, straighten the coordinate points with elementary
    matrices, read off the scalar functions f_ij on lines [e_i + a e_j],
    identify the field automorphism and the diagonal correction, and
    finally confirm that what remains fixes every vertex.

    ``full_tables`` samples every f_ij on every field element and checks
    the multiplicative and additive relations between them.
    """
    F, n = G.field, G.n
    if n < 3:
        raise UnsupportedError(f"decomposition requires dim(V) >= 3, got n={n}")
    sigma = tuple(sigma)
    if check_input:
        check_automorphism(G, sigma)
    trace = DecompositionTrace()
    point = [G.index_of[(unit_vector(n, i),)] for i in range(n)]

    # Make [e_1] go to a point
    if G.dims[sigma[point[0]]] == n - 1:
        trace.delta = 1
        tau = tau_perm(G)
        sigma1 = tuple(tau[x] for x in sigma)
    elif G.dims[sigma[point[0]]] == 1:
        sigma1 = sigma
    else:
        raise IntegrityError("image of [e_1] is neither a point nor a hyperplane")
    # dimension preservation of the tau-adjusted map
    for i, j in enumerate(sigma1):
        if G.dims[i] != G.dims[j]:
            raise IntegrityError(f"vertex {i} changes dimension under the adjusted map")

    # Accumulate A so that theta_A o sigma1 fixes every [e_k]
    I = identity(n)
    A = I
    for k in range(n):
        (alpha,) = G.vertices[theta_image(G, A, sigma1[point[k]])].basis
        if not any(alpha[i] for i in range(k, n)):
            raise IntegrityError(f"image of [e_{k + 1}] lies in the span of earlier points")
        if alpha[k]:
            c = F.inv(alpha[k])
            S = _column_sum(F, n, alpha, k, skip={k}, c=c)
            Ak = mat_sub(F, I, S)
        else:
            m = next((i for i in range(k + 1, n) if alpha[i]), None)
            if m is None:
                raise IntegrityError(f"image of [e_{k + 1}] has no usable coordinate")
            c = F.inv(alpha[m])
            S = _column_sum(F, n, alpha, k, skip={k, m}, c=c)
            Ak = mat_mul(F, mat_sub(F, I, S), swap_matrix(n, k, m))
        A = mat_mul(F, Ak, A)
        trace.A_steps.append(Ak)
        if theta_image(G, A, sigma1[point[k]]) != point[k]:
            raise IntegrityError(f"elementary step {k + 1} failed to fix [e_{k + 1}]")
    trace.A = A

    def sigma2(i: int) -> int:
        return theta_image(G, A, sigma1[i])

    for k in range(n):
        if sigma2(point[k]) != point[k]:
            raise IntegrityError(f"[e_{k + 1}] not fixed after straightening")

    # The functions f_ij on lines [e_i + a e_j]
    def sample(i: int, j: int, a: int) -> int:
        if a == 0:
            return 0
        key = (i, j, a)
        if key not in trace.f_table:
            v = [0] * n
            v[i], v[j] = 1, a
            src = G.index_of[(tuple(v),)]
            (beta,) = G.vertices[sigma2(src)].basis
            b = beta[j]
            if beta[i] != 1 or any(x for c, x in enumerate(beta) if c not in (i, j)) or not b:
                raise IntegrityError(
                    f"zero pattern of [e_{i + 1} + {a} e_{j + 1}] not preserved: image {beta}")
            trace.f_table[key] = b
        return trace.f_table[key]

    f12_one = sample(0, 1, 1)
    inv12 = F.inv(f12_one)
    f = tuple(F.mul(sample(0, 1, a), inv12) for a in F.elements())
    trace.f = f
    if full_tables:
        _check_f_tables(F, n, sample, f)

    # f must be a Frobenius power
    g = F.generator
    t = next((t for t in range(F.m) if F.frobenius(g, t) == f[g]), None)
    if t is None:
        raise IntegrityError("recovered field map matches no Frobenius power")
    if any(F.frobenius(a, t) != f[a] for a in F.elements()):
        raise IntegrityError("recovered field map is not a field automorphism")
    trace.t = t

    # Diagonal correction
    D = diagonal([1] + [F.inv(sample(0, j, 1)) for j in range(1, n)])
    trace.D = D
    DA = mat_mul(F, D, A)
    t_inv = (F.m - t) % F.m

    # What is left must be the identity on every vertex
    for i in range(len(G)):
        if chi_image(G, t_inv, theta_image(G, DA, sigma1[i])) != i:
            raise IntegrityError(f"residual map moves vertex {i} ({G.vertices[i]})")

    X = mat_mul(F, mat_inv(F, A), mat_inv(F, D))
    return StandardAutomorphism(trace.delta, normalize_matrix(F, X), t), trace


def _column_sum(F: FieldSpec, n: int, alpha, k: int, skip: set[int], c: int) -> Matrix:
    """``c * sum_{i not in skip} alpha_i E_{ik}``."""
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        if i not in skip and alpha[i]:
            S[i][k] = F.mul(c, alpha[i])
    return tuple(tuple(r) for r in S)


def _check_f_tables(F: FieldSpec, n: int, sample, f: Sequence[int]) -> None:
    """Sample every f_ij and verify the relations among them exhaustively."""
    for i in range(n):
        for j in range(i + 1, n):
            one = sample(i, j, 1)
            for a in F.elements():
                if F.mul(f[a], one) != sample(i, j, a):
                    raise IntegrityError(f"f_{i + 1}{j + 1} is not a multiple of f")
    for i in range(1, n):
        for j in range(i + 1, n):
            if sample(0, j, 1) != F.mul(sample(0, i, 1), sample(i, j, 1)):
                raise IntegrityError("f_1j(1) != f_1i(1) f_ij(1)")
    for a in F.elements():
        for b in F.elements():
            if f[F.add(a, b)] != F.add(f[a], f[b]) or f[F.mul(a, b)] != F.mul(f[a], f[b]):
                raise IntegrityError("recovered field map is not additive and multiplicative")


# -- permutation files ---------------------------------------------------------------

def format_permutation(G: InclusionGraph, perm: Sequence[int], header: Sequence[str] = ()) -> str:
    """``src-label -> dst-label`` per vertex; ``header`` lines become ``#`` comments."""
    lines = [f"# {h}" for h in header]
    lines += [f"{G.vertices[i].label} -> {G.vertices[j].label}" for i, j in enumerate(perm)]
    return "\n".join(lines) + "\n"


def parse_permutation(G: InclusionGraph, text: str,
                      table: Sequence[str] | None = None) -> Perm:
    """Read a permutation in label form or as ``"i j"`` index pairs.

    Index pairs refer to ``table`` (labels by index, as in an exported
    vertex table) when given, otherwise to the graph's own indexing.
    """
    F, n = G.field, G.n

    def by_label(label: str) -> int:
        try:
            W = parse_subspace(F, label, n)
        except Exception as exc:
            raise UsageError(f"bad subspace label {label!r}: {exc}") from exc
        if W.key not in G.index_of:
            raise UsageError(f"{label!r} is not a vertex of the graph")
        return G.index_of[W.key]

    remap = None
    if table is not None:
        remap = [by_label(label) for label in table]
    image: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" in line:
            src, dst = (by_label(part.strip()) for part in line.split("->", 1))
        else:
            parts = line.split()
            if len(parts) != 2:
                raise UsageError(f"permutation line {lineno}: expected 'i j' or 'label -> label'")
            src, dst = int(parts[0]), int(parts[1])
            if remap is not None:
                if not (0 <= src < len(remap) and 0 <= dst < len(remap)):
                    raise UsageError(f"permutation line {lineno}: index outside the vertex table")
                src, dst = remap[src], remap[dst]
            elif not (0 <= src < len(G) and 0 <= dst < len(G)):
                raise UsageError(f"permutation line {lineno}: index outside [0, {len(G)})")
        if src in image:
            raise UsageError(f"permutation line {lineno}: vertex {src} mapped twice")
        image[src] = dst
    if len(image) != len(G):
        raise UsageError(f"permutation covers {len(image)} of {len(G)} vertices")
    return tuple(image[i] for i in range(len(G)))


def parse_header(text: str) -> dict[str, str]:
    """``# key value`` comment lines of a permutation file."""
    out = {}
    for line in text.splitlines():
        if line.startswith("#"):
            parts = line[1:].strip().split(None, 1)
            if len(parts) == 2:
                out[parts[0]] = parts[1].strip()
    return out
