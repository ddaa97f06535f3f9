"""Batch experiment runner: deterministic multi-trial anneals and sweeps.

Trial k's seed is a pure function of (base seed, k), and every in-trial
draw is a pure function of that seed, so summaries are identical for any
thread budget and any trial count; adding trials never perturbs existing
ones.  By default each trial samples a fresh variability profile (device
mismatch is redrawn per run); a fixed-realization mode reuses trial 0's
profile everywhere for debugging.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

import numpy as np

from . import streams
from .annealer import AlgorithmConfig, TrialResult, derive_schedule, run_anneal
from .model import MaxCutGraph, maxcut_to_ising
from .pbit import VariabilityConfig, sample_variability

SWEEP_AXES = ("sigma_lambda", "sigma_delta", "sigma_nu")


@dataclass(frozen=True)
class ExperimentSpec:
    graph: str
    algo: AlgorithmConfig
    variability: VariabilityConfig = VariabilityConfig()
    cycles: int = 1000
    trials: int = 100
    base_seed: int = 0
    threads: int = 1
    resample_variability: bool = True

    def __post_init__(self) -> None:
        if self.cycles < 2:
            raise ValueError("cycles must be >= 2")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class ExperimentSummary:
    mean_cut: float
    std_cut: float
    normalized_mean_cut: float | None
    mean_final_energy: float
    anneal_seconds: float
    results: list[TrialResult]


def summarize(
    results: Sequence[TrialResult],
    best_known: int | None = None,
    anneal_seconds: float = 0.0,
) -> ExperimentSummary:
    """Aggregate final cuts/energies; sample std (0 for a single trial)."""
    cuts = np.array([r.final_cut for r in results], dtype=np.float64)
    mean_cut = float(cuts.mean())
    std_cut = float(cuts.std(ddof=1)) if cuts.size > 1 else 0.0
    normalized = None
    if best_known is not None:
        if not (np.isfinite(best_known) and best_known > 0):
            raise ValueError(f"best-known cut {best_known} is not finite and positive")
        normalized = mean_cut / best_known
    return ExperimentSummary(
        mean_cut=mean_cut,
        std_cut=std_cut,
        normalized_mean_cut=normalized,
        mean_final_energy=float(np.mean([r.final_energy for r in results])),
        anneal_seconds=anneal_seconds,
        results=list(results),
    )


def run_trials(
    spec: ExperimentSpec,
    graphs: Mapping[str, MaxCutGraph],
    registry: Mapping[str, int] | None = None,
) -> ExperimentSummary:
    """Anneal spec.trials independent trials and aggregate.

    The normalized mean cut is filled only when the registry knows the
    graph.  Wall-clock time covers the annealing loop itself, not graph
    parsing or model setup.
    """
    try:
        graph = graphs[spec.graph]
    except KeyError:
        raise KeyError(f"unknown graph {spec.graph!r}; have {sorted(graphs)}") from None

    model = maxcut_to_ising(graph)
    schedule = derive_schedule(model, spec.cycles, spec.variability.t_res)

    seeds = [streams.trial_seed(spec.base_seed, k) for k in range(spec.trials)]
    fixed_profile = None
    if not spec.resample_variability:
        rng = np.random.default_rng(streams.profile_seed(seeds[0]))
        fixed_profile = sample_variability(spec.variability, model.n, rng)

    def one_trial(k: int) -> TrialResult:
        if fixed_profile is not None:
            profile = fixed_profile
        else:
            rng = np.random.default_rng(streams.profile_seed(seeds[k]))
            profile = sample_variability(spec.variability, model.n, rng)
        try:
            return run_anneal(model, schedule, spec.algo, profile, seeds[k], graph=graph)
        except Exception as exc:
            raise RuntimeError(f"trial {k} of {spec.graph!r} failed: {exc}") from exc

    t0 = time.perf_counter()
    if spec.threads == 1:
        results = [one_trial(k) for k in range(spec.trials)]
    else:
        with ThreadPoolExecutor(max_workers=spec.threads) as pool:
            results = list(pool.map(one_trial, range(spec.trials)))
    elapsed = time.perf_counter() - t0

    best_known = registry.get(spec.graph) if registry is not None else None
    return summarize(results, best_known, elapsed)


def sweep(
    spec: ExperimentSpec,
    axis: str,
    values: Sequence[float],
    graphs: Mapping[str, MaxCutGraph],
    registry: Mapping[str, int] | None = None,
) -> list[ExperimentSummary]:
    """One summary per value of a variability sigma; same base seed each,
    so runs are paired across the axis."""
    if axis not in SWEEP_AXES:
        raise ValueError(f"sweep axis must be one of {SWEEP_AXES}, got {axis!r}")
    if len(values) == 0:
        raise ValueError("sweep needs at least one value")
    out = []
    for v in values:
        if v < 0:
            raise ValueError(f"sweep value must be >= 0, got {v}")
        varied = replace(spec, variability=replace(spec.variability, **{axis: float(v)}))
        out.append(run_trials(varied, graphs, registry))
    return out
