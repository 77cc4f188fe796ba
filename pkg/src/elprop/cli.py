"""Command-line front end: detection, benchmarking, update-order dumps
and dataset management.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 data integrity.
Graph and truth arguments take either a path or the bare name of a
bundled dataset (karate, dolphins, football, polbooks, lesmis).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import serialize
from .datasets import IntegrityError, fetch_datasets, load_dataset, registry
from .eknnclus import EknnConfig, eknnclus_run
from .evaluation import benchmark, truth_partition
from .graph import GraphFormatError, load_edge_list, load_labels
from .influence import beta_order, build_influence_table
from .propagation import ElpConfig, elp_run, lpa_run

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DATA = 3


def _gamma_arg(text):
    if text == "auto":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"gamma must be 'auto' or a number, not {text!r}")


def _load_graph(source: str):
    path = Path(source)
    if path.exists():
        return load_edge_list(str(path))
    if source in registry():
        graph, _ = load_dataset(source)
        return graph
    raise FileNotFoundError(f"no such file or bundled dataset: {source}")


def _load_truth(source: str):
    path = Path(source)
    if path.exists():
        return load_labels(str(path))
    if source in registry():
        _, truth = load_dataset(source)
        if truth is None:
            raise ValueError(
                f"dataset {source!r} ships without ground-truth labels")
        return truth
    raise FileNotFoundError(f"no such file or bundled dataset: {source}")


def _config_flags(sub):
    sub.add_argument("--algorithm", choices=("elp", "lpa", "eknnclus"),
                     default="elp")
    sub.add_argument("--order", choices=("beta", "random"), default="random")
    sub.add_argument("--eta", type=float, default=1.0)
    sub.add_argument("--alpha0", type=float, default=1.0)
    sub.add_argument("--gamma", type=_gamma_arg, default="auto")
    sub.add_argument("--max-iter", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--k", type=int, default=None,
                     help="evidence partners per node (eknnclus only)")
    sub.add_argument("--overlap-eps", type=float, default=0.05)


def _run_one(g, args, seed):
    """Dispatch one seeded run; returns (result, config echo)."""
    if args.algorithm == "elp":
        cfg = ElpConfig(eta=args.eta, alpha0=args.alpha0, gamma=args.gamma,
                        max_iter=args.max_iter, order=args.order, seed=seed,
                        overlap_eps=args.overlap_eps)
        return elp_run(g, cfg), cfg
    if args.algorithm == "eknnclus":
        if args.k is None:
            raise ValueError("--k is required with --algorithm eknnclus")
        cfg = EknnConfig(k=args.k, alpha0=args.alpha0, gamma=args.gamma,
                         max_iter=args.max_iter, order=args.order, seed=seed,
                         overlap_eps=args.overlap_eps)
        return eknnclus_run(g, cfg), cfg
    part, sweeps, stable = lpa_run(g, seed=seed, max_iter=args.max_iter,
                                   details=True)
    cfg = {"max_iter": args.max_iter, "seed": seed}
    return serialize.partition_result(g, part, sweeps, stable), cfg


def cmd_detect(args) -> int:
    g = _load_graph(args.graph)
    result, cfg = _run_one(g, args, args.seed)
    if args.format == "json":
        text = serialize.result_json(result, args.algorithm, args.seed)
    else:
        text = serialize.result_csv(result)
    if args.output:
        Path(args.output).write_text(text)
        manifest = serialize.run_manifest(args.graph, args.algorithm, cfg,
                                          [args.seed], args.output, args.format)
        serialize.write_manifest(args.output, manifest)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_benchmark(args) -> int:
    g = _load_graph(args.graph)
    truth = truth_partition(g, _load_truth(args.truth))

    def adapter(graph, cfg, seed):
        if args.algorithm == "lpa":
            return lpa_run(graph, seed=seed, max_iter=args.max_iter)
        run = elp_run if args.algorithm == "elp" else eknnclus_run
        return run(graph, replace(cfg, seed=seed))

    _, cfg = _run_one(g, args, args.seed0)  # validates flags, echoes config
    stats = benchmark(g, adapter, cfg, args.runs, truth, seed0=args.seed0,
                      sample=(args.deviation == "sample"))
    sys.stdout.write(f"{args.algorithm} on {args.graph}, {args.runs} runs\n")
    sys.stdout.write(serialize.stats_text(stats))
    if args.output:
        Path(args.output).write_text(serialize.stats_json(stats, args.algorithm))
        manifest = serialize.run_manifest(args.graph, args.algorithm, cfg,
                                          stats.seeds, args.output, "json")
        serialize.write_manifest(args.output, manifest)
    if args.per_run:
        Path(args.per_run).write_text(serialize.runs_csv(stats))
    return EXIT_OK


def cmd_order(args) -> int:
    g = _load_graph(args.graph)
    table = build_influence_table(g, eta=args.eta)
    text = serialize.order_csv(g, table, beta_order(table))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fetch_datasets(args) -> int:
    dest = fetch_datasets(args.dest)
    for name, entry in sorted(registry().items()):
        truth = entry.get("truth_communities")
        note = f"{truth} communities" if truth else "no ground truth"
        sys.stdout.write(f"{name}: {entry['nodes']} nodes, "
                         f"{entry['edges']} edges, {note}\n")
    sys.stdout.write(f"written to {dest}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elprop",
        description="Community detection with evidential label propagation.")
    subs = parser.add_subparsers(dest="command", required=True)

    detect = subs.add_parser("detect", help="run one detection")
    detect.add_argument("graph", help="edge list path or dataset name")
    _config_flags(detect)
    detect.add_argument("--output", default=None)
    detect.add_argument("--format", choices=("json", "csv"), default="json")
    detect.set_defaults(func=cmd_detect)

    bench = subs.add_parser("benchmark", help="repeated seeded runs vs truth")
    bench.add_argument("graph", help="edge list path or dataset name")
    bench.add_argument("truth", help="label file path or dataset name")
    _config_flags(bench)
    bench.add_argument("--runs", type=int, default=50)
    bench.add_argument("--seed0", type=int, default=0)
    bench.add_argument("--deviation", choices=("population", "sample"),
                       default="population")
    bench.add_argument("--output", default=None, help="stats JSON path")
    bench.add_argument("--per-run", default=None, help="per-run CSV path")
    bench.set_defaults(func=cmd_benchmark)

    order = subs.add_parser("order", help="dump the beta update order")
    order.add_argument("graph", help="edge list path or dataset name")
    order.add_argument("--eta", type=float, default=1.0)
    order.add_argument("--output", default=None)
    order.set_defaults(func=cmd_order)

    fetch = subs.add_parser("fetch-datasets",
                            help="materialize the bundled datasets")
    fetch.add_argument("--dest", default=None,
                       help="target directory (default: $ELPROP_DATA "
                            "or ./elprop-data)")
    fetch.set_defaults(func=cmd_fetch_datasets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (IntegrityError, GraphFormatError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
