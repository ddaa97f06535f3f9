"""Deterministic p-bit simulated annealing for MAX-CUT with device variability."""

from .annealer import (
    Algorithm,
    AlgorithmConfig,
    AnnealerState,
    AnnealSchedule,
    TraceRecord,
    TrialResult,
    compute_raw_input,
    derive_schedule,
    next_input_psa,
    next_input_spsa,
    next_input_tapsa,
    run_anneal,
)
from .engine import ExperimentSpec, ExperimentSummary, run_trials, summarize, sweep
from .gset import (
    GsetFile,
    GsetParseError,
    bundled_best_known,
    load_best_known,
    load_best_known_path,
    parse_gset,
    parse_gset_path,
    serialize_gset,
    to_graph,
)
from .model import (
    IsingModel,
    MaxCutGraph,
    cut_value,
    energy,
    local_field,
    maxcut_to_ising,
    random_state,
)
from .pbit import VariabilityConfig, VariabilityProfile, pbit_update, sample_variability

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "AlgorithmConfig",
    "AnnealSchedule",
    "AnnealerState",
    "ExperimentSpec",
    "ExperimentSummary",
    "GsetFile",
    "GsetParseError",
    "IsingModel",
    "MaxCutGraph",
    "TraceRecord",
    "TrialResult",
    "VariabilityConfig",
    "VariabilityProfile",
    "bundled_best_known",
    "compute_raw_input",
    "cut_value",
    "derive_schedule",
    "energy",
    "load_best_known",
    "load_best_known_path",
    "local_field",
    "maxcut_to_ising",
    "next_input_psa",
    "next_input_spsa",
    "next_input_tapsa",
    "parse_gset",
    "parse_gset_path",
    "pbit_update",
    "random_state",
    "run_anneal",
    "run_trials",
    "sample_variability",
    "serialize_gset",
    "summarize",
    "sweep",
    "to_graph",
]
