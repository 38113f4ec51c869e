"""Check the structural claims about In(F_q^n) on one built graph."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .automorphisms import aut_order
from .bruteforce import enumerate_automorphisms
from .graph import (
    INF,
    InclusionGraph,
    dimension_coloring,
    expected_degree,
    graph_invariants,
    is_proper_coloring,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    expected: str
    actual: str
    status: str

    def line(self) -> str:
        return f"{self.claim}\t{self.expected}\t{self.actual}\t{self.status}"

    def as_dict(self) -> dict:
        return asdict(self)


def _result(claim: str, expected, actual, ok: bool) -> ClaimResult:
    return ClaimResult(claim, str(expected), str(actual), PASS if ok else FAIL)


def verify_graph(G: InclusionGraph, vertex_budget: int = 100,
                 aut_limit: int | None = None) -> list[ClaimResult]:
    """One result per claim; the automorphism count is skipped above ``vertex_budget``
    vertices or when the search hits ``aut_limit``."""
    n, q = G.n, G.field.q
    results = []
    for k in range(1, n):
        measured = sorted({G.degree(i) for i in range(len(G)) if G.dims[i] == k})
        want = expected_degree(n, k, q)
        actual = measured[0] if len(measured) == 1 else measured
        results.append(_result(f"degree[k={k}]", want, actual, measured == [want]))

    inv = graph_invariants(G)
    want_diam = 3 if n >= 3 else INF
    results.append(_result("diameter", want_diam, inv.diameter, inv.diameter == want_diam))
    results.append(_result("girth", "{3,6,inf}", inv.girth, inv.girth in (3, 6, INF)))
    results.append(_result("clique_number", n - 1, inv.clique_number, inv.clique_number == n - 1))
    colors = dimension_coloring(G)
    used = len(set(colors))
    ok = is_proper_coloring(G.adjacency, colors) and used == n - 1
    results.append(_result("coloring", f"proper,{n - 1} colors", f"{'proper' if ok else 'improper'},{used} colors", ok))

    want_aut = aut_order(n, G.field.p, G.field.m)
    if len(G) > vertex_budget:
        results.append(ClaimResult("aut_order", str(want_aut), f"not run (|V|={len(G)} > {vertex_budget})", SKIPPED))
    else:
        search = enumerate_automorphisms(G.adjacency, aut_limit, keep=False)
        if search.truncated:
            results.append(ClaimResult("aut_order", str(want_aut), f">{search.count} (limit)", SKIPPED))
        else:
            results.append(_result("aut_order", want_aut, search.count, search.count == want_aut))
    return results
