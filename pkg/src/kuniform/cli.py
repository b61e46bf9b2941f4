"""Command-line front end.

Exit codes: 0 success, 1 the requested property does not hold, 2 usage or
parse error, 3 budget or dense-cap exceeded. Errors go to stderr as one JSON
line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Optional, Sequence

from . import circuit as circuit_mod
from . import dense
from .errors import BudgetExceeded, CapExceeded, KUniformError
from .families import FAMILIES, FamilySpec, generate_family
from .graph import Graph, adjacency_display, load_graph, save_graph
from .uniformity import DEFAULT_BUDGET, certify_uniformity

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_error(kind: str, message: str, **extra) -> None:
    print(json.dumps({"error": kind, "message": message, **extra}), file=sys.stderr)


def _read_graph(path: str) -> Graph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    fmt = "json" if path.endswith(".json") else None
    return load_graph(data, fmt)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc) + "\n"


# -- subcommands -------------------------------------------------------------

def cmd_gen(args) -> int:
    fmt = args.format or "json"
    if fmt not in ("json", "edgelist"):
        raise UsageError("gen supports --format json or edgelist")
    spec = FamilySpec(args.family, args.size, args.rows, args.cols)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = generate_family(spec)
    for w in caught:
        print(json.dumps({"warning": str(w.message)}), file=sys.stderr)
    _write(save_graph(g, fmt).decode("ascii"), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    k = None if args.max else args.k
    try:
        report = certify_uniformity(g, k, budget=args.budget, workers=args.threads)
    except BudgetExceeded as exc:
        _emit_error("budget_exceeded", str(exc), required=exc.required, budget=exc.budget)
        return EXIT_LIMIT
    doc = report.to_dict()
    if args.pretty:
        _write(_pretty_report(doc), args.out)
    else:
        _write(_dump(doc), args.out)
    if report.truncated:
        _emit_error("budget_exceeded",
                    f"search truncated: at least {report.uniformity}-uniform")
        return EXIT_LIMIT
    if report.uniform is False:
        return EXIT_FALSE
    return EXIT_OK


def _pretty_report(doc: dict) -> str:
    lines = [f"n = {doc['n']}",
             f"uniformity = {doc['uniformity']}"
             + (" (exact)" if doc["exact"] else " (lower bound)")
             + (", AME" if doc["ame"] else ""),
             "",
             f"{'size':>4}  {'min weight':>10}  witness"]
    for j, w in doc["min_weights"].items():
        wit = doc["witnesses"][j]
        lines.append(f"{j:>4}  {w:>10}  {wit['subset']} {wit['pauli']}")
    if doc["breaking_witness"]:
        b = doc["breaking_witness"]
        lines += ["", f"breaking: {b['subset']} -> {b['pauli']} (weight {b['weight']})"]
    if "uniform" in doc:
        lines.append(f"{doc['k']}-uniform: {'yes' if doc['uniform'] else 'no'}")
    return "\n".join(lines) + "\n"


def _oracle_verdict(g: Graph, k: int, method: str, cap: int) -> dense.DenseVerdict:
    if method == "dense":
        return dense.verify_uniformity_dense(g, k, cap=cap)
    return dense.verify_uniformity_cutrank(g, k)


def _failure_detail(g: Graph, verdict: dense.DenseVerdict, method: str, cap: int) -> dict:
    s = list(verdict.failing_subset)
    if method == "dense":
        rho = dense.reduced_density_matrix(dense.build_state(g, cap), s)
        return {"subset": s, "max_deviation": verdict.max_deviation,
                "entropy_nats": dense.von_neumann_entropy(rho)}
    return {"subset": s, "cut_rank": dense.cut_rank_entropy(g, s)}


def cmd_verify(args) -> int:
    method = args.method or "dense"
    if method not in ("dense", "cutrank"):
        raise UsageError("verify supports --method dense or cutrank")
    g = _read_graph(args.graph)
    if method == "dense" and g.n > args.cap:
        raise CapExceeded(g.n, args.cap)
    half = g.n // 2
    ks = [args.k] if args.k is not None and not args.max else list(range(1, half + 1))
    for k in ks:
        if not 1 <= k <= half:
            raise UsageError(f"--k must lie in [1, {half}] for n={g.n}")
    doc = {"method": method, "n": g.n, "uniformity": 0, "exact": True, "ame": False,
           "checked": {}, "breaking_witness": None, "truncated": False}
    uniformity = ks[0] - 1 if ks else 0
    failed = False
    for k in ks:
        verdict = _oracle_verdict(g, k, method, args.cap)
        doc["checked"][str(k)] = verdict.uniform
        if not verdict.uniform:
            doc["breaking_witness"] = _failure_detail(g, verdict, method, args.cap)
            failed = True
            break
        uniformity = k
    if args.k is not None and not args.max:
        doc["k"] = args.k
        doc["uniform"] = not failed
        # a passing single-k check says nothing about k + 1
        doc["exact"] = failed or uniformity == half
        doc["uniformity"] = uniformity if not failed else None
    else:
        doc["uniformity"] = uniformity
        doc["ame"] = uniformity >= 1 and uniformity == half
    _write(_dump(doc), args.out)
    return EXIT_FALSE if failed and args.k is not None and not args.max else EXIT_OK


def cmd_expand(args) -> int:
    g = _read_graph(args.graph)
    terms = dense.bloch_expansion(g)
    if args.pretty:
        lines = [f"1/{2 ** g.n} {t.to_string()}" for t in terms]
    else:
        lines = [t.to_string() for t in terms]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_circuit(args) -> int:
    fmt = args.format or "plain"
    if fmt not in ("plain", "qasm2"):
        raise UsageError("circuit supports --format plain or qasm2")
    g = _read_graph(args.graph)
    _write(circuit_mod.render(circuit_mod.emit_circuit(g), fmt), args.out)
    return EXIT_OK


def cmd_adjacency(args) -> int:
    _write(adjacency_display(_read_graph(args.graph)), args.out)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    g = _read_graph(args.graph)
    half = g.n // 2
    ks = [args.k] if args.k is not None else list(range(1, half + 1))
    for k in ks:
        if not 1 <= k <= half:
            raise UsageError(f"--k must lie in [1, {half}] for n={g.n}")
    methods = ["stabilizer", "cutrank"]
    if g.n <= args.cap:
        methods.insert(1, "dense")
    verdicts = {}
    agree = True
    for k in ks:
        row = {"stabilizer": certify_uniformity(g, k, budget=args.budget,
                                                workers=args.threads).uniform}
        if "dense" in methods:
            row["dense"] = dense.verify_uniformity_dense(g, k, cap=args.cap).uniform
        row["cutrank"] = dense.verify_uniformity_cutrank(g, k).uniform
        verdicts[str(k)] = row
        agree &= len(set(row.values())) == 1
    doc = {"n": g.n, "methods": methods, "verdicts": verdicts, "agree": agree}
    if args.pretty:
        lines = ["k  " + "  ".join(f"{m:>10}" for m in methods)]
        for k, row in verdicts.items():
            lines.append(f"{k:<3}" + "  ".join(f"{str(row[m]):>10}" for m in methods))
        lines.append("agree" if agree else "DISAGREE")
        _write("\n".join(lines) + "\n", args.out)
    else:
        _write(_dump(doc), args.out)
    return EXIT_OK if agree else EXIT_FALSE


COMMANDS = {
    "gen": cmd_gen,
    "check": cmd_check,
    "verify": cmd_verify,
    "expand": cmd_expand,
    "circuit": cmd_circuit,
    "adjacency": cmd_adjacency,
    "crosscheck": cmd_crosscheck,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph", help="graph file (JSON or edgelist), '-' for stdin")
    common.add_argument("--k", type=int)
    common.add_argument("--max", action="store_true",
                        help="search for the exact uniformity (default without --k)")
    common.add_argument("--method", choices=["stabilizer", "dense", "cutrank"])
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--cap", type=int, default=dense.DEFAULT_CAP,
                        help="largest qubit count for the dense oracle")
    common.add_argument("--format", choices=["json", "edgelist", "plain", "qasm2"])
    common.add_argument("--out")
    common.add_argument("--pretty", action="store_true")

    parser = _Parser(prog="kuniform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    gen = sub.add_parser("gen", parents=[common], help="generate a family graph")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--size", type=int)
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    for name in ("check", "verify", "expand", "circuit", "adjacency", "crosscheck"):
        sub.add_parser(name, parents=[common])
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command != "gen" and not args.graph:
            raise UsageError(f"{args.command} requires --graph")
        if args.threads < 1 or args.budget < 1 or args.cap < 1:
            raise UsageError("--threads, --budget and --cap must be positive")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except CapExceeded as exc:
        _emit_error("cap_exceeded", str(exc), n=exc.n, cap=exc.cap)
        return EXIT_LIMIT
    except BudgetExceeded as exc:
        _emit_error("budget_exceeded", str(exc), required=exc.required, budget=exc.budget)
        return EXIT_LIMIT
    except (KUniformError, ValueError, OSError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
