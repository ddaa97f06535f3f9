"""Command-line interface.

Subcommands: ``run`` (one experiment), ``sweep`` (one experiment per value
along a variability axis), ``info`` (instance stats and derived schedule).
Exit codes: 0 success, 2 usage, 3 unreadable/malformed input data, 4
runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .annealer import Algorithm, AlgorithmConfig
from .engine import SWEEP_AXES, ExperimentSpec, ExperimentSummary, run_trials, sweep
from .gset import GsetParseError, bundled_best_known, load_best_known_path, parse_gset_path, to_graph
from .pbit import VariabilityConfig

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_RUNTIME = 4

SUMMARY_COLUMNS = [
    "graph", "algo", "sigma_lambda", "sigma_delta", "sigma_nu",
    "cycles", "trials", "seed", "mean_cut", "std_cut",
    "normalized_mean_cut", "mean_final_energy", "anneal_seconds",
]
TRACE_COLUMNS = ["trial", "cycle", "i0", "energy", "cut"]


def _fmt(x: object) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="benchmark graph file ('n m' header)")
    p.add_argument("--registry", default=None,
                   help="best-known cut registry file (default: bundled table)")
    p.add_argument("--algo", choices=[a.value for a in Algorithm], default="psa")
    p.add_argument("--cycles", type=int, default=1000)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--sigma-lambda", type=float, default=0.0)
    p.add_argument("--sigma-delta", type=float, default=0.0)
    p.add_argument("--sigma-nu", type=float, default=0.0)
    p.add_argument("--t-res", type=int, default=10)
    p.add_argument("--alpha", type=int, default=4, help="time-average window")
    p.add_argument("--p-stall", type=float, default=0.5, help="stall probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--trace-out", default=None, help="per-cycle trace CSV path")
    p.add_argument("--summary-out", default=None, help="summary CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbitsa",
        description="p-bit simulated annealing for MAX-CUT with device variability",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one experiment")
    _add_common(p_run)

    p_sweep = sub.add_parser("sweep", help="run one experiment per axis value")
    _add_common(p_sweep)
    p_sweep.add_argument("--axis", choices=list(SWEEP_AXES), required=True)
    p_sweep.add_argument("--values", required=True,
                         help="comma-separated sigma values, e.g. 0,0.5,1")

    p_info = sub.add_parser("info", help="instance stats and derived schedule")
    p_info.add_argument("--graph", required=True)
    p_info.add_argument("--cycles", type=int, default=1000)
    p_info.add_argument("--t-res", type=int, default=10)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.cycles < 2:
        parser.error("--cycles must be >= 2")
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    for name in ("sigma_lambda", "sigma_delta", "sigma_nu"):
        if getattr(args, name, 0.0) < 0:
            parser.error(f"--{name.replace('_', '-')} must be >= 0")
    if getattr(args, "t_res", 1) < 1:
        parser.error("--t-res must be >= 1")
    if getattr(args, "alpha", 1) < 1:
        parser.error("--alpha must be >= 1")
    if not 0.0 <= getattr(args, "p_stall", 0.5) <= 1.0:
        parser.error("--p-stall must lie in [0, 1]")


def _parse_values(parser: argparse.ArgumentParser, text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        parser.error(f"--values must be comma-separated numbers, got {text!r}")
    if not values:
        parser.error("--values must name at least one value")
    if any(v < 0 for v in values):
        parser.error("--values must all be >= 0")
    return values


def _load_inputs(args: argparse.Namespace):
    graph_path = Path(args.graph)
    gf = parse_gset_path(graph_path)
    graph = to_graph(gf)
    if args.registry is None:
        registry = bundled_best_known()
    else:
        registry = load_best_known_path(args.registry)
    return gf.name, graph, registry


def _make_spec(args: argparse.Namespace, name: str) -> ExperimentSpec:
    return ExperimentSpec(
        graph=name,
        algo=AlgorithmConfig(
            kind=Algorithm(args.algo), alpha=args.alpha, p_stall=args.p_stall
        ),
        variability=VariabilityConfig(
            sigma_lambda=args.sigma_lambda,
            sigma_delta=args.sigma_delta,
            sigma_nu=args.sigma_nu,
            t_res=args.t_res,
        ),
        cycles=args.cycles,
        trials=args.trials,
        base_seed=args.seed,
        threads=args.threads,
    )


def _summary_row(spec: ExperimentSpec, summary: ExperimentSummary) -> list[str]:
    v = spec.variability
    return [_fmt(x) for x in [
        spec.graph, spec.algo.kind.value, v.sigma_lambda, v.sigma_delta, v.sigma_nu,
        spec.cycles, spec.trials, spec.base_seed, summary.mean_cut, summary.std_cut,
        summary.normalized_mean_cut, summary.mean_final_energy, summary.anneal_seconds,
    ]]


def _write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _trace_rows(summary: ExperimentSummary) -> list[list[str]]:
    rows = []
    for trial, result in enumerate(summary.results):
        for rec in result.trace:
            rows.append([_fmt(x) for x in [trial, rec.cycle, rec.i0, rec.energy, rec.cut]])
    return rows


def _print_summary(spec: ExperimentSpec, summary: ExperimentSummary) -> None:
    v = spec.variability
    print(f"graph={spec.graph} algo={spec.algo.kind.value} cycles={spec.cycles} "
          f"trials={spec.trials} seed={spec.base_seed}")
    print(f"sigma_lambda={v.sigma_lambda} sigma_delta={v.sigma_delta} sigma_nu={v.sigma_nu}")
    print(f"mean_cut={summary.mean_cut:.3f} std_cut={summary.std_cut:.3f}")
    if summary.normalized_mean_cut is not None:
        print(f"normalized_mean_cut={summary.normalized_mean_cut:.6f}")
    print(f"mean_final_energy={summary.mean_final_energy:.3f}")
    print(f"anneal_seconds={summary.anneal_seconds:.3f}")


def cmd_run(args: argparse.Namespace) -> int:
    try:
        name, graph, registry = _load_inputs(args)
    except (OSError, GsetParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    spec = _make_spec(args, name)
    try:
        summary = run_trials(spec, {name: graph}, registry)
        _print_summary(spec, summary)
        if args.summary_out:
            _write_csv(args.summary_out, SUMMARY_COLUMNS, [_summary_row(spec, summary)])
        if args.trace_out:
            _write_csv(args.trace_out, TRACE_COLUMNS, _trace_rows(summary))
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, values: list[float]) -> int:
    try:
        name, graph, registry = _load_inputs(args)
    except (OSError, GsetParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    spec = _make_spec(args, name)
    try:
        summaries = sweep(spec, args.axis, values, {name: graph}, registry)
        rows = []
        trace_rows = []
        for value, summary in zip(values, summaries):
            varied = replace(spec, variability=replace(spec.variability, **{args.axis: value}))
            print(f"--- {args.axis}={value} ---")
            _print_summary(varied, summary)
            rows.append(_summary_row(varied, summary) + [_fmt(args.axis), _fmt(value)])
            if args.trace_out:
                trace_rows.extend(_trace_rows(summary))
        if args.summary_out:
            _write_csv(args.summary_out, SUMMARY_COLUMNS + ["axis", "value"], rows)
        if args.trace_out:
            _write_csv(args.trace_out, TRACE_COLUMNS, trace_rows)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    try:
        gf = parse_gset_path(Path(args.graph))
        graph = to_graph(gf)
    except (OSError, GsetParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    try:
        from .annealer import derive_schedule
        from .model import maxcut_to_ising

        weights = sorted(set(int(w) for w in graph.edge_w))
        schedule = derive_schedule(maxcut_to_ising(graph), args.cycles, args.t_res)
        print(f"name={gf.name} n={gf.n} m={gf.m}")
        print(f"weights={weights}")
        print(f"i0_min={schedule.i0_min!r} i0_max={schedule.i0_max!r} beta={schedule.beta!r} "
              f"cycles={schedule.cycles} t_res={schedule.t_res}")
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    if args.command == "run":
        return cmd_run(args)
    if args.command == "sweep":
        values = _parse_values(parser, args.values)
        return cmd_sweep(args, values)
    return cmd_info(args)


if __name__ == "__main__":
    sys.exit(main())
