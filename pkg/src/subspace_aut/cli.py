"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails
(including a non-automorphism given to ``decompose``), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .automorphisms import (
    StandardAutomorphism,
    aut_order,
    check_automorphism,
    decompose,
    format_permutation,
    parse_header,
    parse_permutation,
    random_standard,
    std_to_perm,
)
from .bruteforce import enumerate_automorphisms, format_index_pairs
from .errors import DomainError, IntegrityError, UnsupportedError, UsageError
from .field import FieldSpec, format_field, parse_field
from .graph import (
    build_graph,
    dot_text,
    edge_list_text,
    parse_edge_list,
    parse_vertex_table,
    vertex_table_text,
)
from .linalg import format_matrix, parse_matrix
from .verify import FAIL, verify_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    field: FieldSpec
    n: int
    command: str
    seed: int = 0
    limit: int | None = None
    out: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        F = parse_field(args.field)
        if args.n < 2:
            raise UsageError(f"--n must be >= 2, got {args.n}")
        out = Path(args.out) if getattr(args, "out", None) else None
        return cls(F, args.n, args.command, getattr(args, "seed", 0), getattr(args, "limit", None), out)


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def cmd_build(cfg: RunConfig, args) -> int:
    G = build_graph(cfg.field, cfg.n)
    out = cfg.out or Path(".")
    out.mkdir(parents=True, exist_ok=True)
    (out / "vertices.tsv").write_text(vertex_table_text(G))
    (out / "edges.txt").write_text(edge_list_text(G))
    if args.dot:
        (out / "graph.dot").write_text(dot_text(G))
    print(f"In(F_{cfg.field.q}^{cfg.n}): {len(G)} vertices, {G.num_edges} edges -> {out}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    G = build_graph(cfg.field, cfg.n)
    results = verify_graph(G, vertex_budget=args.budget, aut_limit=cfg.limit)
    if args.json:
        print(json.dumps({"field": format_field(cfg.field), "n": cfg.n,
                          "claims": [r.as_dict() for r in results]}, indent=2))
    else:
        print("claim\texpected\tactual\tstatus")
        for r in results:
            print(r.line())
    return EXIT_FAILED if any(r.status == FAIL for r in results) else EXIT_OK


def _decomposition_record(s: StandardAutomorphism, verified: bool, roundtrip: bool | None) -> dict:
    rec = {"delta": s.delta, "t": s.t, "X": format_matrix(s.X), "verified": verified}
    if roundtrip is not None:
        rec["roundtrip"] = roundtrip
    return rec


def cmd_decompose(cfg: RunConfig, args) -> int:
    G = build_graph(cfg.field, cfg.n)
    text = Path(args.perm).read_text()
    table = None
    if args.vertices:
        table = [label for _, label in parse_vertex_table(Path(args.vertices).read_text())]
    perm = parse_permutation(G, text, table)
    try:
        check_automorphism(G, perm)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    s, _ = decompose(G, perm, check_input=False)
    verified = std_to_perm(G, s) == perm
    roundtrip = None
    header = parse_header(text)
    if {"delta", "t", "X"} <= header.keys():
        truth = StandardAutomorphism.make(cfg.field, int(header["delta"]),
                                          parse_matrix(header["X"], cfg.field), int(header["t"]))
        roundtrip = truth == s
    rec = _decomposition_record(s, verified, roundtrip)
    if args.json:
        print(json.dumps(rec))
    else:
        for key, value in rec.items():
            print(f"{key}\t{str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK if verified and roundtrip is not False else EXIT_FAILED


def cmd_random_auto(cfg: RunConfig, args) -> int:
    if cfg.n < 3:
        raise UnsupportedError("random-auto needs n >= 3")
    G = build_graph(cfg.field, cfg.n)
    s = random_standard(cfg.field, cfg.n, random.Random(cfg.seed))
    perm = std_to_perm(G, s)
    header = [f"field {format_field(cfg.field)}", f"n {cfg.n}", f"seed {cfg.seed}",
              f"delta {s.delta}", f"t {s.t}", f"X {format_matrix(s.X)}"]
    _emit(format_permutation(G, perm, header), cfg.out)
    return EXIT_OK


def cmd_aut_count(cfg: RunConfig, args) -> int:
    if args.edges:
        adjacency = parse_edge_list(Path(args.edges).read_text(), args.vertex_count)
    else:
        adjacency = build_graph(cfg.field, cfg.n).adjacency
    keep = args.emit is not None
    search = enumerate_automorphisms(adjacency, cfg.limit, keep=keep)
    formula = aut_order(cfg.n, cfg.field.p, cfg.field.m)
    print(f"oracle\t{search.count}{'+ (truncated)' if search.truncated else ''}")
    if not args.edges:
        print(f"formula\t{formula}")
    if keep:
        _emit("\n".join(format_index_pairs(p) for p in search.automorphisms), Path(args.emit))
    if search.truncated or args.edges:
        return EXIT_OK
    return EXIT_OK if search.count == formula else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subspace-aut",
                                     description="Subspace inclusion graphs over finite fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", required=True, help="p^m or p^m:c0,...,cm (modulus, low degree first)")
    common.add_argument("--n", type=int, required=True, help="dimension of the ambient space")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit", type=int, default=None, help="cap on automorphisms enumerated")
    common.add_argument("--out", default=None, help="output directory (build) or file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="write vertex table and edge list")
    p.add_argument("--dot", action="store_true", help="also write graph.dot")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check degree, diameter, girth, clique, |Aut|")
    p.add_argument("--budget", type=int, default=100, help="max vertices for the brute-force |Aut| check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="factor an automorphism from a file")
    p.add_argument("perm", help="permutation file (label -> label, or index pairs)")
    p.add_argument("--vertices", default=None, help="vertex table that index pairs refer to")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("random-auto", parents=[common], help="sample a standard automorphism")
    p.set_defaults(func=cmd_random_auto)

    p = sub.add_parser("aut-count", parents=[common], help="count automorphisms by brute force")
    p.add_argument("--edges", default=None, help="edge list file instead of the built graph")
    p.add_argument("--vertex-count", type=int, default=None, help="vertex count for --edges")
    p.add_argument("--emit", default=None, help="write every automorphism as index pairs")
    p.set_defaults(func=cmd_aut_count)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(cfg, args)
    except (UsageError, UnsupportedError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
