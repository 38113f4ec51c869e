"""Exhaustive automorphism search for small simple graphs.

This is deliberately independent of the linear-algebra machinery: it sees
only adjacency lists.  The search colours vertices by degree, refines the
colouring until it is equitable, then backtracks over images vertex by
vertex.  Candidate sets are bitmasks: a vertex may only go to an unused
vertex of its own colour that is adjacent to the images of all its
already-mapped neighbours.  A complete assignment is then a bijection
sending edges to edges, which on a finite graph already forces non-edges
to non-edges.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import UsageError

Adjacency = Sequence[Sequence[int]]


def refine_colors(adjacency: Adjacency, colors: Sequence[int] | None = None) -> list[int]:
    """Coarsest equitable refinement of ``colors`` (degrees by default).

    Colour ids are ranks of the (old colour, sorted neighbour colours)
    signatures, so two isomorphic inputs get matching ids.
    """
    if colors is None:
        colors = [len(nb) for nb in adjacency]
    palette = {c: r for r, c in enumerate(sorted(set(colors)))}
    current = [palette[c] for c in colors]
    while True:
        sigs = [(current[v], tuple(sorted(current[w] for w in adjacency[v])))
                for v in range(len(adjacency))]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(current)):
            return new
        current = new


def is_equitable(adjacency: Adjacency, colors: Sequence[int]) -> bool:
    profile: dict[int, tuple] = {}
    for v, nb in enumerate(adjacency):
        sig = tuple(sorted(colors[w] for w in nb))
        if profile.setdefault(colors[v], sig) != sig:
            return False
    return True


def _search_order(adjacency: Adjacency, colors: Sequence[int]) -> list[int]:
    """Greedy order: most already-placed neighbours first, then small colour classes."""
    size = len(adjacency)
    class_size: dict[int, int] = {}
    for c in colors:
        class_size[c] = class_size.get(c, 0) + 1
    placed_nbrs = [0] * size
    done = [False] * size
    order = []
    for _ in range(size):
        v = min((u for u in range(size) if not done[u]),
                key=lambda u: (-placed_nbrs[u], class_size[colors[u]], u))
        done[v] = True
        order.append(v)
        for w in adjacency[v]:
            placed_nbrs[w] += 1
    return order


def iter_automorphisms(adjacency: Adjacency, colors: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every colour-preserving automorphism, in a fixed order."""
    size = len(adjacency)
    for v, nb in enumerate(adjacency):
        if v in nb or any(not 0 <= w < size for w in nb):
            raise UsageError(f"vertex {v} has an invalid neighbour list")
        if any(v not in adjacency[w] for w in nb):
            raise UsageError(f"adjacency is not symmetric at vertex {v}")
    if size == 0:
        yield ()
        return
    colors = refine_colors(adjacency, colors)
    adj_mask = [sum(1 << w for w in nb) for nb in adjacency]
    class_mask: dict[int, int] = {}
    for v, c in enumerate(colors):
        class_mask[c] = class_mask.get(c, 0) | (1 << v)
    order = _search_order(adjacency, colors)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in adjacency[v] if position[w] < i] for i, v in enumerate(order)]
    base = [class_mask[colors[v]] for v in order]
    image = [0] * size

    limit = sys.getrecursionlimit()
    if size + 50 > limit:
        sys.setrecursionlimit(size + 100)

    def extend(level: int, used: int) -> Iterator[tuple[int, ...]]:
        if level == size:
            yield tuple(image)
            return
        v = order[level]
        cand = base[level] & ~used
        for u in earlier[level]:
            cand &= adj_mask[image[u]]
            if not cand:
                return
        while cand:
            low = cand & -cand
            cand ^= low
            image[v] = low.bit_length() - 1
            yield from extend(level + 1, used | low)

    yield from extend(0, 0)


@dataclass
class AutomorphismSearch:
    count: int
    truncated: bool
    automorphisms: list[tuple[int, ...]] = field(default_factory=list)


def enumerate_automorphisms(adjacency: Adjacency, limit: int | None = None, *, keep: bool = True,
                            colors: Sequence[int] | None = None) -> AutomorphismSearch:
    """Count (and optionally collect) all automorphisms.

    With ``limit`` set, the search stops after ``limit`` automorphisms and
    the result is flagged ``truncated`` if at least one more exists.
    Collected permutations are returned sorted.
    """
    found: list[tuple[int, ...]] = []
    count = 0
    truncated = False
    for perm in iter_automorphisms(adjacency, colors):
        if limit is not None and count >= limit:
            truncated = True
            break
        count += 1
        if keep:
            found.append(perm)
    found.sort()
    return AutomorphismSearch(count, truncated, found)


def relabel(adjacency: Adjacency, perm: Sequence[int]) -> list[list[int]]:
    """Adjacency of the copy where vertex ``v`` is renamed ``perm[v]``."""
    out: list[list[int]] = [[] for _ in adjacency]
    for v, nb in enumerate(adjacency):
        out[perm[v]] = sorted(perm[w] for w in nb)
    return out


def format_index_pairs(perm: Sequence[int]) -> str:
    return "".join(f"{i} {j}\n" for i, j in enumerate(perm))
