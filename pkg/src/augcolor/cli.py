"""Command line interface: gen / color / bound / experiment / oracle /
verify over the library.

stdout carries only the declared payload (DIMACS, CSV, or JSON); the
resolved master seed and library version go to stderr on every run so any
output can be reproduced. Exit codes: 0 success, 1 domain or verification
failure, 2 usage error. LOG_LEVEL in {error,warn,info,debug} controls
logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .bounds import build_bound_report
from .coloring import AlgoParams, exact_chromatic
from .dimacs import read_coloring_csv, read_dimacs, write_coloring_csv, write_dimacs
from .errors import AugcolorError, InputError
from .graph import first_conflict, is_proper_coloring
from .harness import (
    ALGORITHMS,
    load_config,
    run_algorithm,
    run_campaign,
    write_summary_json,
    write_trials_csv,
)
from .hosts import HostSpec, host_graph, parse_host_spec
from .indep import SearchBudget
from .randgraph import augment, sample_gnp

log = logging.getLogger("augcolor")

_LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def _announce(seed) -> None:
    shown = seed if seed is not None else "none"
    print(f"augcolor {__version__} seed={shown}", file=sys.stderr)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="augcolor",
        description="Coloring algorithms and chromatic-number bounds for "
        "randomly augmented graphs H + G(n,p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="sample G(n,p), optionally on top of a host")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--host", help="dimacs path or host spec (multipartite:5,5,5)")
    gen.add_argument("--out", help="DIMACS output path (default stdout)")
    gen.add_argument(
        "--method", choices=("canonical", "skip"), default="canonical",
        help="uniform-per-pair or geometric skip sampling",
    )

    color = sub.add_parser("color", help="color a graph with one of the algorithms")
    color.add_argument("--alg", choices=ALGORITHMS + ("exact",), required=True)
    color.add_argument("--in", dest="graph_path", required=True, metavar="DIMACS")
    color.add_argument("--host", help="host spec for the augmented algorithms")
    color.add_argument("--p", type=float, help="edge probability the graph came from")
    color.add_argument("--epsilon", type=float, default=0.2)
    color.add_argument("--seed", type=int, default=0)
    color.add_argument("--out", help="coloring CSV path (default stdout)")
    color.add_argument("--is-node-limit", type=int, default=None)

    bound = sub.add_parser("bound", help="print the closed-form bound report as JSON")
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--p", type=float, required=True)
    bound.add_argument("--chi-h", type=int, required=True)
    bound.add_argument("--k", type=int, help="override the Markov set size")
    bound.add_argument(
        "--n-hk", type=int,
        help="independent k-set count of the host, enables markov_bound",
    )

    experiment = sub.add_parser("experiment", help="run a Monte Carlo campaign")
    experiment.add_argument("--config", required=True, help="JSON or TOML config")
    experiment.add_argument("--n-grid", help="comma separated override")
    experiment.add_argument("--trials", type=int)
    experiment.add_argument("--seed", type=int)
    experiment.add_argument("--out-dir", default=None)

    oracle = sub.add_parser("oracle", help="exact chromatic number with witness")
    oracle.add_argument("graph_path", metavar="DIMACS")
    oracle.add_argument("--out", help="witness coloring CSV path")

    verify = sub.add_parser("verify", help="check a coloring against a graph")
    verify.add_argument("coloring_path", metavar="COLORING_CSV")
    verify.add_argument("graph_path", metavar="DIMACS")

    return parser


def _host_spec_from_arg(text: str) -> HostSpec:
    if ":" in text:
        return parse_host_spec(text)
    return HostSpec.dimacs(text)  # bare path


def _cmd_gen(args) -> int:
    _announce(args.seed)
    if args.host:
        host = host_graph(_host_spec_from_arg(args.host))
        if host.n != args.n:
            raise InputError(f"--n {args.n} does not match host size {host.n}")
        g = augment(host, args.p, args.seed, method=args.method)
    else:
        g = sample_gnp(args.n, args.p, args.seed, method=args.method)
    if args.out:
        write_dimacs(g, args.out)
        log.info("wrote %s (n=%d, m=%d)", args.out, g.n, g.edge_count)
    else:
        sys.stdout.write(f"p edge {g.n} {g.edge_count}\n")
        for u, v in g.edges():
            sys.stdout.write(f"e {u} {v}\n")
    return 0


def _cmd_color(args) -> int:
    _announce(args.seed)
    g = read_dimacs(args.graph_path)
    if args.alg == "exact":
        _, coloring = exact_chromatic(g)
    else:
        needs_p = args.alg != "greedy"
        if needs_p and args.p is None:
            print(f"--p is required for --alg {args.alg}", file=sys.stderr)
            return 2
        budget = SearchBudget(args.is_node_limit) if args.is_node_limit else SearchBudget()
        params = AlgoParams(
            p=args.p if args.p is not None else 0.5,
            epsilon=args.epsilon,
            seed=args.seed,
            budget=budget,
        )
        host = (
            _host_spec_from_arg(args.host)
            if args.host
            else HostSpec.multipartite([g.n])
        )
        if args.alg.startswith("aug") and not args.host:
            log.warning("no --host given, using the empty (one-class) host")
        coloring, _ = run_algorithm(args.alg, host, g, params)
    proper = is_proper_coloring(g, coloring)
    if args.out:
        write_coloring_csv(coloring, args.out)
        log.info("wrote %s (%d colors)", args.out, coloring.num_colors)
    else:
        sys.stdout.write("vertex,color\n")
        for v, c in enumerate(coloring.colors, start=1):
            sys.stdout.write(f"{v},{c}\n")
    return 0 if proper else 1


def _cmd_bound(args) -> int:
    _announce(None)
    report = build_bound_report(args.n, args.p, args.chi_h, k=args.k, n_hk=args.n_hk)
    print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    return 0


def _cmd_experiment(args) -> int:
    overrides = {
        "trials": args.trials,
        "seed": args.seed,
    }
    if args.n_grid:
        overrides["n_grid"] = tuple(int(x) for x in args.n_grid.split(","))
    config = load_config(args.config, **overrides)
    _announce(config.seed)
    result = run_campaign(config)
    out_dir = args.out_dir or "results"
    os.makedirs(out_dir, exist_ok=True)
    trials_path = os.path.join(out_dir, "trials.csv")
    summary_path = os.path.join(out_dir, "summary.json")
    write_trials_csv(result.records, trials_path)
    write_summary_json(result.summary, summary_path)
    log.info("wrote %s and %s", trials_path, summary_path)
    print(json.dumps(list(result.summary), indent=2, sort_keys=True))
    return 0


def _cmd_oracle(args) -> int:
    _announce(None)
    g = read_dimacs(args.graph_path)
    k, witness = exact_chromatic(g)
    if args.out:
        write_coloring_csv(witness, args.out)
        log.info("wrote witness %s", args.out)
    print(json.dumps({"chromatic_number": k, "n": g.n, "m": g.edge_count}))
    return 0


def _cmd_verify(args) -> int:
    _announce(None)
    g = read_dimacs(args.graph_path)
    coloring = read_coloring_csv(args.coloring_path, g.n)
    conflict = first_conflict(g, coloring)
    if conflict is None:
        print(json.dumps({"proper": True, "colors": coloring.num_colors}))
        return 0
    print(json.dumps({"proper": False, "violating_edge": list(conflict)}))
    return 1


_COMMANDS = {
    "gen": _cmd_gen,
    "color": _cmd_color,
    "bound": _cmd_bound,
    "experiment": _cmd_experiment,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    level = _LOG_LEVELS.get(os.environ.get("LOG_LEVEL", "warn").lower(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except AugcolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
