"""Command line interface.

Data goes to stdout (or --output), diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 invalid arguments or input,
3 budget exhaustion.  Identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import cycleset, graphs, oracle, search, singer

SCHEMA = "cyclespec/1"
BUDGET_ENV = "CYCLESPEC_BUDGET"

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    """One parsed invocation."""

    command: str
    number: int | None = None    # q, n, or qmax depending on the command
    path: str | None = None      # input file for verify
    fmt: str = "tsv"
    budget: int | None = None    # None = command default (or the env override)
    output: str | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclespec",
        description="Hamiltonian graphs whose cycle lengths are pairwise "
                    "distinct, constructed from perfect difference sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices, fmt_default):
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)
        p.add_argument("--output", metavar="FILE",
                       help="write data here instead of stdout")

    p = sub.add_parser("singer", help="perfect difference set for prime power q")
    p.add_argument("q", type=int)
    common(p, ["tsv", "json"], "tsv")

    p = sub.add_parser("derive", help="distinct cycle set derived from the "
                                      "difference set for q")
    p.add_argument("q", type=int)
    common(p, ["tsv", "json"], "tsv")

    p = sub.add_parser("build", help="serialize the chorded cycle graph for q")
    p.add_argument("q", type=int)
    common(p, ["edgelist", "dot", "graph6"], "edgelist")

    p = sub.add_parser("verify", help="enumerate cycles of a serialized graph "
                                      "and report spectrum and bounds as JSON")
    p.add_argument("file")
    p.add_argument("--format", choices=["edgelist", "dot", "graph6"],
                   default="edgelist")
    p.add_argument("--budget", type=int, metavar="CYCLES")
    p.add_argument("--output", metavar="FILE")

    p = sub.add_parser("spectrum", help="predicted vs enumerated spectrum for q")
    p.add_argument("q", type=int)
    p.add_argument("--budget", type=int, metavar="CYCLES")
    common(p, ["tsv", "json"], "tsv")

    p = sub.add_parser("exact-g", help="exhaustive maximum-edge search for n")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, metavar="NODES")
    common(p, ["tsv", "json"], "tsv")

    p = sub.add_parser("table", help="one verified construction row per prime "
                                     "power q <= qmax")
    p.add_argument("qmax", type=int)
    common(p, ["tsv", "json"], "tsv")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    number = None
    for attr in ("q", "n", "qmax"):
        if hasattr(args, attr):
            number = getattr(args, attr)
    return RunConfig(command=args.command,
                     number=number,
                     path=getattr(args, "file", None),
                     fmt=getattr(args, "format"),
                     budget=getattr(args, "budget", None),
                     output=args.output)


def _effective_budget(config: RunConfig, fallback: int) -> int:
    if config.budget is not None:
        value = config.budget
    else:
        raw = os.environ.get(BUDGET_ENV)
        if raw is None:
            return fallback
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError("budget must be positive")
    return value


def _nearest_prime_powers(q: int) -> str:
    below = None
    for candidate in range(q - 1, 1, -1):
        if singer.prime_power(candidate) is not None:
            below = candidate
            break
    above = max(q + 1, 2)
    while singer.prime_power(above) is None:
        above += 1
    return f"{above}" if below is None else f"{below} and {above}"


def _tsv(rows: list[tuple]) -> str:
    return "".join("\t".join(str(cell) for cell in row) + "\n" for row in rows)


def _json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _construction(q: int):
    """Shared pipeline: difference set -> cycle set -> graph."""
    diffset = singer.singer_difference_set(q)
    trace = cycleset.derive_cycle_set_trace(diffset)
    graph = graphs.build_graph(diffset.n, trace.cycle_set.elements)
    return diffset, trace, graph


def _cmd_singer(config: RunConfig) -> tuple[int, str]:
    diffset = singer.singer_difference_set(config.number)
    violation = singer.verify_perfect_difference_set(diffset)
    ok = violation is None
    if config.fmt == "json":
        text = _json({
            "schema": SCHEMA,
            "command": "singer",
            "q": config.number,
            "n": diffset.n,
            "size": diffset.k,
            "elements": list(diffset.elements),
            "verified": ok,
        })
    else:
        text = _tsv([
            ("schema", SCHEMA),
            ("q", config.number),
            ("n", diffset.n),
            ("size", diffset.k),
            ("elements", " ".join(map(str, diffset.elements))),
            ("verified", "pass" if ok else "fail"),
        ])
    return (EXIT_OK if ok else EXIT_VERIFICATION), text


def _cmd_derive(config: RunConfig) -> tuple[int, str]:
    diffset, trace, _ = _construction(config.number)
    cycle_set = trace.cycle_set
    if config.fmt == "json":
        text = _json({
            "schema": SCHEMA,
            "command": "derive",
            "q": config.number,
            "n": diffset.n,
            "difference_set": list(diffset.elements),
            "pair": list(trace.pair),
            "shifted": list(trace.shifted),
            "cycle_set": list(cycle_set.elements),
            "size": cycle_set.k,
        })
    else:
        text = _tsv([
            ("schema", SCHEMA),
            ("q", config.number),
            ("n", diffset.n),
            ("difference_set", " ".join(map(str, diffset.elements))),
            ("pair", " ".join(map(str, trace.pair))),
            ("shifted", " ".join(map(str, trace.shifted))),
            ("cycle_set", " ".join(map(str, cycle_set.elements))),
            ("size", cycle_set.k),
        ])
    return EXIT_OK, text


def _cmd_build(config: RunConfig) -> tuple[int, str]:
    _, _, graph = _construction(config.number)
    return EXIT_OK, graphs.export_graph(graph, graphs.GraphFormat(config.fmt))


def _cmd_verify(config: RunConfig) -> tuple[int, str]:
    with open(config.path, "r") as handle:
        text = handle.read()
    graph = graphs.import_graph(text, graphs.GraphFormat(config.fmt))
    budget = _effective_budget(config, oracle.DEFAULT_CYCLE_BUDGET)
    report = oracle.verification_report(graph, budget=budget)
    payload = {"schema": SCHEMA, "command": "verify"}
    payload.update(report)
    code = EXIT_VERIFICATION if report["repeated"] else EXIT_OK
    return code, _json(payload)


def _cmd_spectrum(config: RunConfig) -> tuple[int, str]:
    diffset, trace, graph = _construction(config.number)
    budget = _effective_budget(config, oracle.DEFAULT_CYCLE_BUDGET)
    predicted = graphs.predicted_spectrum(diffset.n, trace.cycle_set.elements)
    enumerated = oracle.enumerate_cycles(graph, budget=budget)
    equal = predicted == enumerated
    if config.fmt == "json":
        text = _json({
            "schema": SCHEMA,
            "command": "spectrum",
            "q": config.number,
            "n": diffset.n,
            "predicted": list(predicted.lengths),
            "enumerated": list(enumerated.lengths),
            "equal": equal,
        })
    else:
        text = _tsv([
            ("schema", SCHEMA),
            ("q", config.number),
            ("n", diffset.n),
            ("predicted", " ".join(map(str, predicted.lengths))),
            ("enumerated", " ".join(map(str, enumerated.lengths))),
            ("equal", "true" if equal else "false"),
        ])
    return (EXIT_OK if equal else EXIT_VERIFICATION), text


def _cmd_exact_g(config: RunConfig) -> tuple[int, str]:
    budget = _effective_budget(config, search.DEFAULT_NODE_BUDGET)
    result = search.exact_g(config.number, budget=budget)
    chords = " ".join(f"{u}-{v}" for u, v in result.witness.chords) or "-"
    if config.fmt == "json":
        text = _json({
            "schema": SCHEMA,
            "command": "exact-g",
            "n": result.n,
            "g": result.g_value,
            "witness_chords": [list(c) for c in result.witness.chords],
            "nodes_explored": result.nodes_explored,
            "exhaustive": result.exhaustive,
        })
    else:
        text = _tsv([
            ("schema", SCHEMA),
            ("n", result.n),
            ("g", result.g_value),
            ("witness_chords", chords),
            ("nodes_explored", result.nodes_explored),
            ("exhaustive", "true" if result.exhaustive else "false"),
        ])
    return (EXIT_OK if result.exhaustive else EXIT_BUDGET), text


def _cmd_table(config: RunConfig) -> tuple[int, str]:
    if config.number < 2:
        raise ValueError("qmax must be at least 2")
    rows = []
    all_ok = True
    for q in range(2, config.number + 1):
        if singer.prime_power(q) is None:
            continue
        diffset, trace, graph = _construction(q)
        predicted = graphs.predicted_spectrum(diffset.n, trace.cycle_set.elements)
        enumerated = oracle.enumerate_cycles(graph)
        ok = (predicted == enumerated
              and oracle.has_repeated_length(enumerated) is None
              and diffset.n in enumerated)
        exact = oracle.singer_lower_bound_exact(diffset.n)
        assert exact is not None and exact.denominator == 1
        all_ok = all_ok and ok
        rows.append({
            "q": q,
            "n": diffset.n,
            "size": trace.cycle_set.k,
            "edges": graph.edge_count,
            "construction": q * q + 2 * q,
            "bound": int(exact),
            "verified": ok,
        })
    if config.fmt == "json":
        text = _json({"schema": SCHEMA, "command": "table", "rows": rows})
    else:
        header = ("q", "n", "size", "edges", "construction", "bound", "verified")
        body = [(r["q"], r["n"], r["size"], r["edges"], r["construction"],
                 r["bound"], "pass" if r["verified"] else "fail") for r in rows]
        text = _tsv([("schema", SCHEMA), header] + body)
    return (EXIT_OK if all_ok else EXIT_VERIFICATION), text


_COMMANDS = {
    "singer": _cmd_singer,
    "derive": _cmd_derive,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "exact-g": _cmd_exact_g,
    "table": _cmd_table,
}

_NEEDS_PRIME_POWER = {"singer", "derive", "build", "spectrum"}


def run(config: RunConfig) -> int:
    """Execute one configured invocation; returns the exit code."""
    if config.command in _NEEDS_PRIME_POWER:
        if singer.prime_power(config.number) is None:
            print(f"error: {config.number} is not a prime power "
                  f"(nearest: {_nearest_prime_powers(config.number)})",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        code, text = _COMMANDS[config.command](config)
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        # covers parse errors, range errors, bad budgets, unreadable files
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w") as handle:
            handle.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(_config_from_args(args))


if __name__ == "__main__":
    raise SystemExit(main())
