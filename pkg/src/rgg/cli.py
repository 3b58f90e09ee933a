"""Command-line entry point: ``rgg <subcommand> ...``.

Exit codes: 0 success, 1 internal failure, 2 usage or config error,
3 oracle-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, detectors, harness, moments
from .classify import VertexGroupSpec, classify
from .gnp import GnpParams, sample
from .graph import format_edge_list, parse_edge_list

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _probability(text: str) -> float:
    p = float(text)
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"p={text} is outside [0, 1]")
    return p


def _read_graph(path: str):
    try:
        if path == "-":
            return parse_edge_list(sys.stdin.read())
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rgg", description="Graph products of random graphs: detectors, moments, sweeps.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("sample", help="draw one G(n, p) graph as an edge list")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_probability, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trial", type=int, default=0)
    sp.add_argument("--format", choices=["edgelist", "json"], default="edgelist")

    sp = sub.add_parser("analyze", help="detector report for an edge-list graph")
    sp.add_argument("--input", required=True, help="edge-list file, or - for stdin")

    sp = sub.add_parser("classify", help="group-theoretic verdicts for a graph product")
    sp.add_argument("--input", required=True)
    sp.add_argument("--spec", default="artin", help="coxeter, artin, or per-vertex tokens like z,z2,g")
    sp.add_argument("--strict", action="store_true", help="drop the free-product finiteness extension")

    sp = sub.add_parser("moments", help="closed-form moments at (n, p)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_probability, required=True)

    sp = sub.add_parser("oracle-check", help="closed forms against exhaustive enumeration")
    sp.add_argument("--n", type=int, nargs="+")
    sp.add_argument("--p", type=_probability, nargs="+")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("sweep", help="Monte Carlo sweep from a config file")
    sp.add_argument("--config", required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--seed", type=int, help="override the config seed")
    sp.add_argument("--trials", type=int, help="override the config trial count")
    return parser


def _cmd_sample(args) -> int:
    if args.n < 0 or args.trial < 0:
        raise UsageError("--n and --trial must be nonnegative")
    try:
        g = sample(GnpParams(args.n, args.p, args.seed), args.trial)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _dump({"n": g.n, "edges": [list(e) for e in g.edges()]})
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    _dump(detectors.analyze(_read_graph(args.input)))
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = _read_graph(args.input)
    try:
        spec = VertexGroupSpec.parse(args.spec, g.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _dump(classify(g, spec, strict=args.strict).as_dict())
    return EXIT_OK


def _cmd_moments(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    _dump(moments.moments_report(args.n, args.p))
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    if args.n and any(not 0 <= n <= 7 for n in args.n):
        raise UsageError("oracle-check supports 0 <= n <= 7")
    rows = checks.run_oracle_suite(args.n, args.p)
    if args.format == "json":
        _dump([
            {"formula": r.formula, "n": r.n, "p": r.p, "closed_form": r.closed_form,
             "exact": r.exact, "abs_error": r.abs_error, "passed": r.passed}
            for r in rows
        ])
    else:
        sys.stdout.write("formula,n,p,closed_form,exact,abs_error,status\n")
        for r in rows:
            status = "pass" if r.passed else "FAIL"
            sys.stdout.write(f"{r.formula},{r.n},{r.p!r},{r.closed_form!r},{r.exact!r},{r.abs_error!r},{status}\n")
        for name, err in checks.summarize(rows).items():
            sys.stdout.write(f"# max_abs_error {name} {err!r}\n")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_MISMATCH


def _cmd_sweep(args) -> int:
    try:
        config = harness.load_config(args.config)
        if args.seed is not None:
            config.seed = args.seed
        if args.trials is not None:
            config.trials = args.trials
        config.__post_init__()
    except harness.ConfigError as exc:
        raise UsageError(str(exc)) from None
    rows = harness.run_sweep(config, workers=harness.default_workers())
    sys.stdout.write(harness.rows_to_json(rows) if args.format == "json" else harness.rows_to_csv(rows))
    return EXIT_OK


COMMANDS = {
    "sample": _cmd_sample,
    "analyze": _cmd_analyze,
    "classify": _cmd_classify,
    "moments": _cmd_moments,
    "oracle-check": _cmd_oracle_check,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"rgg: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
