"""Command-line front end: exact, verify, xjoin, lex, solve, decompose, mwis.

Exit codes: 0 success, 1 verification-negative, 2 parse error, 3 oracle
threshold exceeded, 4 unsupported spec, 5 intractable prime node, 9 internal
inconsistency (an emitted witness failed re-verification).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .decomposition import (
    IntractablePrimeError,
    SolverInconsistencyError,
    decompose,
    solve,
    tree_node_counts,
    tree_to_json,
)
from .graph import (
    CYCLE_POWER,
    PATH_POWER,
    EnumerationLimitError,
    Graph,
    GraphFormatError,
    StructuredKind,
    make_structured,
    read_graph_file,
)
from .mwis import mwis_cycle_power, mwis_path_power
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    FootprintCertificate,
    OracleLimitError,
    SequenceViolation,
    VertexSequence,
    gamma_gr_exact,
    verify_sequence,
)
from .powers import XJoinSolveResult, lex_gamma, solve_xjoin_cycle_power, solve_xjoin_path_power
from .products import lift_sequence, xjoin
from .split import lex_gamma_split, solve_xjoin_split, split_recognize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_THRESHOLD = 3
EXIT_UNSUPPORTED = 4
EXIT_INTRACTABLE = 5
EXIT_INTERNAL = 9

_STRUCTURED_ALIASES = {
    "cycle-power": CYCLE_POWER,
    "path-power": PATH_POWER,
    "complete": "complete",
    "edgeless": "edgeless",
    "co-path": "co_path",
    "co-cycle": "co_cycle",
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class MainFactorSpec:
    """Parsed --main argument: a structured family or a graph file."""

    structured: Optional[StructuredKind] = None
    path: Optional[str] = None
    require_split: bool = False

    @property
    def describe(self) -> str:
        if self.structured is not None:
            s = self.structured
            return f"{s.kind}:n={s.n},m={s.m}"
        return ("split:" if self.require_split else "file:") + str(self.path)


def parse_main_spec(text: str) -> MainFactorSpec:
    head, sep, rest = text.partition(":")
    if not sep or not rest:
        raise CliError(f"malformed main spec {text!r}", EXIT_PARSE)
    if head in ("split", "file"):
        return MainFactorSpec(path=rest, require_split=(head == "split"))
    kind = _STRUCTURED_ALIASES.get(head)
    if kind is None:
        raise CliError(f"unknown main kind {head!r}", EXIT_UNSUPPORTED)
    params = {}
    for item in rest.split(","):
        key, eq, value = item.partition("=")
        if not eq or key not in ("n", "m"):
            raise CliError(f"malformed parameter {item!r} in main spec", EXIT_PARSE)
        try:
            params[key] = int(value)
        except ValueError:
            raise CliError(f"non-integer parameter {item!r} in main spec", EXIT_PARSE) from None
    if "n" not in params:
        raise CliError(f"main spec {text!r} is missing n", EXIT_PARSE)
    try:
        structured = StructuredKind(kind, params["n"], params.get("m", 1))
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    return MainFactorSpec(structured=structured)


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise CliError(f"malformed {what} {text!r}; expected comma-separated integers", EXIT_PARSE)


def load_graph(path: str) -> Graph:
    try:
        return read_graph_file(path)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}", EXIT_PARSE) from None
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def certify(g: Graph, witness: VertexSequence, gamma: int) -> FootprintCertificate:
    """Hard gate before any witness is printed."""
    cert = verify_sequence(g, witness)
    if isinstance(cert, SequenceViolation) or len(witness) != gamma:
        raise CliError(
            f"internal inconsistency: witness {list(witness)} failed re-verification",
            EXIT_INTERNAL,
        )
    return cert


def report(
    args,
    input_desc: str,
    gamma: Optional[int],
    witness: Optional[VertexSequence],
    solver: str,
    started: float,
    diagnostics: Optional[dict] = None,
) -> None:
    millis = int((time.perf_counter() - started) * 1000)
    diagnostics = diagnostics or {}
    if getattr(args, "json", False):
        payload = {
            "input": input_desc,
            "gamma": gamma,
            "witness": list(witness) if witness is not None else None,
            "solver": solver,
            "millis": millis,
            "diagnostics": diagnostics,
        }
        print(json.dumps(payload))
        return
    print(f"input {input_desc}")
    if gamma is not None:
        print(f"gamma {gamma}")
    if witness is not None:
        print("witness " + ",".join(map(str, witness)))
    print(f"solver {solver}")
    for key in sorted(diagnostics):
        print(f"{key} {diagnostics[key]}")


def cmd_exact(args) -> int:
    started = time.perf_counter()
    max_n = args.max_n
    if max_n is None:
        max_n = int(os.environ.get("GRUNDY_ORACLE_MAX", DEFAULT_ORACLE_LIMIT))
    g = load_graph(args.file)
    try:
        gamma, witness = gamma_gr_exact(g, max_n=max_n)
    except OracleLimitError as exc:
        raise CliError(str(exc), EXIT_THRESHOLD) from None
    cert = certify(g, witness, gamma)
    report(
        args,
        args.file,
        gamma,
        witness,
        "oracle",
        started,
        {"pn_sizes": [len(pn) for pn in cert.private], "n": g.n},
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.file)
    items = parse_int_list(args.sequence, "--sequence")
    try:
        s = VertexSequence(tuple(items))
        outcome = verify_sequence(g, s)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if isinstance(outcome, SequenceViolation):
        report(
            args,
            args.file,
            None,
            None,
            "verifier",
            started,
            {"legal": False, "violation": outcome.describe()},
        )
        return EXIT_NEGATIVE
    report(
        args,
        args.file,
        len(s),
        s,
        "verifier",
        started,
        {
            "legal": True,
            "pn_sizes": [len(pn) for pn in outcome.private],
            "self_footprinters": sorted(outcome.self_set),
        },
    )
    return EXIT_OK


def _dispatch_xjoin(spec: MainFactorSpec, profile: Sequence[int]) -> tuple[Graph, XJoinSolveResult, str]:
    if spec.structured is not None:
        s = spec.structured
        if s.kind == CYCLE_POWER:
            return make_structured(s), solve_xjoin_cycle_power(s.n, s.m, profile), "cycle-mwis-reduction"
        if s.kind == PATH_POWER:
            return make_structured(s), solve_xjoin_path_power(s.n, s.m, profile), "path-mwis-reduction"
        raise CliError(f"xjoin supports cycle-power, path-power, and split mains, not {s.kind}", EXIT_UNSUPPORTED)
    g = load_graph(spec.path)
    partition = split_recognize(g)
    if partition is None:
        raise CliError(f"{spec.path} is not a split graph", EXIT_UNSUPPORTED)
    return g, solve_xjoin_split(g, partition, profile), "split-closed-form"


def _load_parts(directory: str, main_g: Graph) -> list[Graph]:
    parts = []
    for v in main_g.vertices():
        path = Path(directory) / f"part_{v}.gr"
        if path.exists():
            parts.append(load_graph(str(path)))
        else:
            parts.append(make_structured(StructuredKind("edgeless", 1)))
    return parts


def cmd_xjoin(args) -> int:
    started = time.perf_counter()
    if (args.gammas is None) == (args.parts is None):
        raise CliError("exactly one of --gammas/--parts is required", EXIT_PARSE)
    spec = parse_main_spec(args.main)

    if args.gammas is not None:
        profile = parse_int_list(args.gammas, "--gammas")
        try:
            main_g, result, solver = _dispatch_xjoin(spec, profile)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        certify(main_g, result.main_sequence, len(result.main_sequence))
        report(
            args,
            spec.describe,
            result.gamma,
            None,
            solver,
            started,
            {
                "argmax_set": list(result.argmax_i),
                "main_skeleton": list(result.main_sequence),
                "branch": result.diagnostics.get("branch"),
            },
        )
        return EXIT_OK

    # --parts: solve each part recursively, then lift to an explicit product Gds
    threshold = args.prime_threshold
    probe_main = (
        make_structured(spec.structured) if spec.structured is not None else load_graph(spec.path)
    )
    parts = _load_parts(args.parts, probe_main)
    try:
        solved = [solve(part, prime_threshold=threshold) for part in parts]
    except IntractablePrimeError as exc:
        raise CliError(str(exc), EXIT_INTRACTABLE) from None
    profile = [gamma for gamma, _ in solved]
    try:
        main_g, result, solver = _dispatch_xjoin(spec, profile)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    inst = xjoin(main_g, parts)
    part_seqs = {v: solved[v - 1][1] for v in result.argmax_i}
    lifted = lift_sequence(inst, result.main_sequence, result.argmax_i, part_seqs)
    certify(inst.product, lifted, result.gamma)
    report(
        args,
        spec.describe,
        result.gamma,
        lifted,
        solver,
        started,
        {
            "argmax_set": list(result.argmax_i),
            "main_skeleton": list(result.main_sequence),
            "part_gammas": profile,
            "product_n": inst.product.n,
        },
    )
    return EXIT_OK


def cmd_lex(args) -> int:
    started = time.perf_counter()
    spec = parse_main_spec(args.main)
    gamma_h = args.gamma_h
    if gamma_h < 1:
        raise CliError("--gamma-h must be >= 1", EXIT_PARSE)
    if spec.structured is not None:
        s = spec.structured
        if s.kind not in (CYCLE_POWER, PATH_POWER):
            raise CliError(f"lex supports cycle-power, path-power, and split mains, not {s.kind}", EXIT_UNSUPPORTED)
        try:
            gamma = lex_gamma(s.kind, s.n, s.m, gamma_h)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_UNSUPPORTED) from None
        solver = "lex-closed-form"
    else:
        g = load_graph(spec.path)
        partition = split_recognize(g)
        if partition is None:
            raise CliError(f"{spec.path} is not a split graph", EXIT_UNSUPPORTED)
        gamma = lex_gamma_split(g, partition, gamma_h)
        solver = "lex-split-closed-form"
    report(args, spec.describe, gamma, None, solver, started, {"gamma_h": gamma_h})
    return EXIT_OK


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.file)
    tree = decompose(g)
    try:
        gamma, witness = solve(g, prime_threshold=args.prime_threshold)
    except IntractablePrimeError as exc:
        raise CliError(str(exc), EXIT_INTRACTABLE) from None
    except (OracleLimitError, EnumerationLimitError) as exc:
        raise CliError(str(exc), EXIT_THRESHOLD) from None
    certify(g, witness, gamma)
    counts = tree_node_counts(tree)
    report(
        args,
        args.file,
        gamma,
        witness,
        "decomposition",
        started,
        {"node_counts": counts, "prime_nodes": counts["prime"]},
    )
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph(args.file)
    tree = decompose(g)
    if args.json:
        print(json.dumps(tree_to_json(tree)))
        return EXIT_OK

    def render(node_json, depth):
        pad = "  " * depth
        if node_json["kind"] == "leaf":
            print(f"{pad}leaf {node_json['vertex']}")
            return
        extra = ""
        if node_json["kind"] == "prime":
            extra = f" quotient_edges={node_json['quotient_edges']}"
        print(f"{pad}{node_json['kind']}{extra}")
        for child in node_json["children"]:
            render(child, depth + 1)

    render(tree_to_json(tree), 0)
    return EXIT_OK


def cmd_mwis(args) -> int:
    started = time.perf_counter()
    weights = parse_int_list(args.weights, "--weights")
    try:
        if args.kind == "cycle-power":
            result = mwis_cycle_power(args.n, args.m, weights)
        elif args.kind == "path-power":
            result = mwis_path_power(args.n, args.m, weights)
        else:
            raise CliError(f"unknown mwis kind {args.kind!r}", EXIT_UNSUPPORTED)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    millis = int((time.perf_counter() - started) * 1000)
    if args.json:
        print(
            json.dumps(
                {
                    "input": f"{args.kind}:n={args.n},m={args.m}",
                    "weight": result.weight,
                    "members": sorted(result.members),
                    "solver": "mwis-dp",
                    "millis": millis,
                }
            )
        )
    else:
        print(f"weight {result.weight}")
        print("members " + ",".join(map(str, sorted(result.members))))
    return EXIT_OK


def _run_batch(args, runner) -> int:
    try:
        lines = Path(args.batch).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CliError(f"cannot read batch list: {exc}", EXIT_PARSE) from None
    worst = EXIT_OK
    for line in lines:
        item = line.strip()
        if not item or item.startswith("#"):
            continue
        args.file = item
        try:
            code = runner(args)
        except CliError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = exc.code
        if worst == EXIT_OK:
            worst = code
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grundy",
        description="Exact Grundy domination solver for graphs and X-join products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="exhaustive-search Grundy domination number")
    p_exact.add_argument("file", nargs="?", help="graph file (p/e format)")
    p_exact.add_argument("--max-n", type=int, default=None, help="oracle size limit")
    p_exact.add_argument("--json", action="store_true")
    p_exact.add_argument("--batch", help="file listing graph files, one per line")
    p_exact.set_defaults(func=cmd_exact)

    p_verify = sub.add_parser("verify", help="check a dominating sequence for legality")
    p_verify.add_argument("file")
    p_verify.add_argument("--sequence", required=True, help="comma-separated vertices")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_xjoin = sub.add_parser("xjoin", help="solve an X-join product")
    p_xjoin.add_argument("--main", required=True, help="kind:n=<n>,m=<m> or split:FILE")
    p_xjoin.add_argument("--gammas", help="comma-separated part Grundy numbers")
    p_xjoin.add_argument("--parts", help="directory of part_<v>.gr files (missing parts are K_1)")
    p_xjoin.add_argument("--prime-threshold", type=int, default=14)
    p_xjoin.add_argument("--json", action="store_true")
    p_xjoin.set_defaults(func=cmd_xjoin)

    p_lex = sub.add_parser("lex", help="lexicographic product closed forms")
    p_lex.add_argument("--main", required=True)
    p_lex.add_argument("--gamma-h", type=int, required=True, dest="gamma_h")
    p_lex.add_argument("--json", action="store_true")
    p_lex.set_defaults(func=cmd_lex)

    p_solve = sub.add_parser("solve", help="modular-decomposition pipeline")
    p_solve.add_argument("file", nargs="?")
    p_solve.add_argument("--prime-threshold", type=int, default=14)
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--batch", help="file listing graph files, one per line")
    p_solve.set_defaults(func=cmd_solve)

    p_dec = sub.add_parser("decompose", help="print the modular decomposition tree")
    p_dec.add_argument("file")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(func=cmd_decompose)

    p_mwis = sub.add_parser("mwis", help="max-weight independent set on a power graph")
    p_mwis.add_argument("--kind", required=True, choices=["cycle-power", "path-power"])
    p_mwis.add_argument("--n", type=int, required=True)
    p_mwis.add_argument("--m", type=int, required=True)
    p_mwis.add_argument("--weights", required=True)
    p_mwis.add_argument("--json", action="store_true")
    p_mwis.set_defaults(func=cmd_mwis)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "batch", None):
            return _run_batch(args, args.func)
        if hasattr(args, "file") and args.file is None:
            raise CliError("a graph file (or --batch) is required", EXIT_PARSE)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SolverInconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
