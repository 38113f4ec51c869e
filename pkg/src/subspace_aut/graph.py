"""The subspace inclusion graph In(F_q^n) and its structural invariants."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import UsageError
from .field import FieldSpec
from .subspaces import Subspace, enumerate_subspaces, is_proper_subset

Adjacency = Sequence[Sequence[int]]


class Unbounded(enum.Enum):
    """Value of a distance-type invariant that does not exist (no path, no cycle)."""

    INFINITY = "inf"

    def __str__(self) -> str:
        return "inf"


INF = Unbounded.INFINITY
Extended = Union[int, Unbounded]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise UsageError(f"k={k} outside [0, {n}]")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def expected_degree(n: int, k: int, q: int) -> int:
    """Degree of any k-dimensional vertex: proper nonzero subspaces of W plus
    proper subspaces strictly between W and V (counted in V/W)."""
    if not 1 <= k <= n - 1:
        raise UsageError(f"k={k} outside [1, {n - 1}]")
    below = sum(gaussian_binomial(k, i, q) for i in range(1, k))
    above = sum(gaussian_binomial(n - k, i, q) for i in range(1, n - k))
    return below + above


class InclusionGraph:
    """Vertices are the nontrivial proper subspaces of F_q^n in enumeration
    order (by dimension, then pivot set, then free entries); ``i ~ j`` when
    one vertex properly contains the other."""

    def __init__(self, field: FieldSpec, n: int):
        if n < 2:
            raise UsageError(f"In(V) needs dim(V) >= 2, got n={n}")
        self.field = field
        self.n = n
        self.vertices: list[Subspace] = []
        for k in range(1, n):
            self.vertices.extend(enumerate_subspaces(field, n, k))
        self.index_of = {W.key: i for i, W in enumerate(self.vertices)}
        self.dims = [W.k for W in self.vertices]
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        by_dim = {k: [i for i, d in enumerate(self.dims) if d == k] for k in range(1, n)}
        for k1 in range(1, n):
            for k2 in range(k1 + 1, n):
                for i in by_dim[k1]:
                    Wi = self.vertices[i]
                    for j in by_dim[k2]:
                        if is_proper_subset(field, Wi, self.vertices[j]):
                            nbrs[i].append(j)
                            nbrs[j].append(i)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.adj_sets = [frozenset(a) for a in self.adjacency]

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"InclusionGraph(q={self.field.q}, n={self.n}, |V|={len(self)})"

    def index(self, W: Subspace) -> int:
        return self.index_of[W.key]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adj_sets[i]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def build_graph(field: FieldSpec, n: int) -> InclusionGraph:
    return InclusionGraph(field, n)


# -- invariants on plain adjacency lists ---------------------------------------

def bfs_distances(adjacency: Adjacency, source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(adjacency: Adjacency) -> Extended:
    """Largest eccentricity; ``INF`` if the graph is disconnected."""
    best = 0
    for s in range(len(adjacency)):
        dist = bfs_distances(adjacency, s)
        if min(dist) < 0:
            return INF
        best = max(best, max(dist))
    return best


def girth(adjacency: Adjacency) -> Extended:
    """Length of a shortest cycle, ``INF`` for a forest.

    A BFS from every root; a non-tree edge (u, w) closes a walk of length
    dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    best: Extended = INF
    for s in range(len(adjacency)):
        dist = [-1] * len(adjacency)
        parent = [-1] * len(adjacency)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not INF and 2 * dist[u] + 1 >= best:
                break
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if best is INF or cyc < best:
                        best = cyc
    return best


def longest_chain(G: InclusionGraph) -> int:
    """Number of vertices in a longest chain of nested subspaces."""
    order = sorted(range(len(G)), key=G.dims.__getitem__)
    length = [1] * len(G)
    for i in order:
        for j in G.adjacency[i]:
            if G.dims[j] < G.dims[i]:
                length[i] = max(length[i], length[j] + 1)
    return max(length, default=0)


@dataclass(frozen=True)
class GraphInvariants:
    diameter: Extended
    girth: Extended
    clique_number: int


def graph_invariants(G: InclusionGraph) -> GraphInvariants:
    # cliques in an inclusion graph are chains, so a longest chain is a maximum clique
    return GraphInvariants(diameter(G.adjacency), girth(G.adjacency), longest_chain(G))


def dimension_coloring(G: InclusionGraph) -> list[int]:
    return list(G.dims)


def is_proper_coloring(adjacency: Adjacency, colors: Sequence[int]) -> bool:
    return all(colors[i] != colors[j] for i, nb in enumerate(adjacency) for j in nb)


# -- text formats ---------------------------------------------------------------

def edge_list_text(G: InclusionGraph) -> str:
    return "".join(f"{i} {j}\n" for i, j in G.edges())


def vertex_table_text(G: InclusionGraph) -> str:
    return "".join(f"{i}\t{W.k}\t{W.label}\n" for i, W in enumerate(G.vertices))


def dot_text(G: InclusionGraph) -> str:
    lines = [f'graph "In(F_{G.field.q}^{G.n})" {{']
    for i, W in enumerate(G.vertices):
        lines.append(f'  {i} [label="{W.label}", dim={W.k}];')
    lines.extend(f"  {i} -- {j};" for i, j in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, num_vertices: int | None = None) -> list[list[int]]:
    """Adjacency lists from ``"i j"`` lines; isolated vertices need ``num_vertices``."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"edge list line {lineno}: expected 'i j', got {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if i == j or min(i, j) < 0:
            raise UsageError(f"edge list line {lineno}: invalid edge {i} {j}")
        pairs.append((i, j))
    size = max((max(e) + 1 for e in pairs), default=0)
    if num_vertices is not None:
        if num_vertices < size:
            raise UsageError(f"edge list mentions vertex {size - 1} but only {num_vertices} vertices")
        size = num_vertices
    adj: list[set[int]] = [set() for _ in range(size)]
    for i, j in pairs:
        adj[i].add(j)
        adj[j].add(i)
    return [sorted(a) for a in adj]


def parse_vertex_table(text: str) -> list[tuple[int, str]]:
    """``(dim, label)`` per row of a vertex table, in index order."""
    rows = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise UsageError(f"vertex table line {lineno}: expected 3 tab-separated fields")
        rows[int(parts[0])] = (int(parts[1]), parts[2].strip())
    if sorted(rows) != list(range(len(rows))):
        raise UsageError("vertex table indices are not 0..N-1")
    return [rows[i] for i in range(len(rows))]
