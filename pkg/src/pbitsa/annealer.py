"""Annealing schedules, algorithm variants, and the per-trial simulation loop.

One main cycle spans ``t_res`` sub-steps.  P-bit ``i`` updates at every
global sub-step count divisible by its period, reading the spin snapshot
taken at the start of that sub-step; fresh uniform noise is drawn per
actual update from the counter-based streams, never recycled.  The pump
amplitude i0 starts at ``i0_min`` and is divided by ``beta`` once per
cycle (not after the last), landing on ``i0_max`` at the final cycle.

Three input rules share that loop.  The plain rule drives each p-bit with
i0 times its raw local field.  The time-averaged rule drives it with i0
times the mean of its last ``alpha`` raw fields (fewer while the history
is still filling).  The stalling rule keeps the previous drive with
probability ``p_stall`` and otherwise refreshes to i0 times the raw field;
a p-bit's first update always computes a fresh drive, so no fabricated
zero ever enters either rule's state.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import streams
from ._kernels import ALGO_PSA, ALGO_SPSA, ALGO_TAPSA, anneal_loop
from .model import IsingModel, MaxCutGraph, SpinState
from .pbit import VariabilityProfile


class Algorithm(str, enum.Enum):
    """Input rule selector."""

    PSA = "psa"        # plain: i0 * raw field
    TAPSA = "tapsa"    # time-averaged over the last alpha raw fields
    SPSA = "spsa"      # stalling: keep previous drive with prob. p_stall

    @property
    def code(self) -> int:
        return {Algorithm.PSA: ALGO_PSA, Algorithm.TAPSA: ALGO_TAPSA, Algorithm.SPSA: ALGO_SPSA}[self]


@dataclass(frozen=True)
class AlgorithmConfig:
    kind: Algorithm
    alpha: int = 4       # time-average window (TAPSA only)
    p_stall: float = 0.5  # stall probability (SPSA only)

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")
        if not 0.0 <= self.p_stall <= 1.0:
            raise ValueError("p_stall must lie in [0, 1]")


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric i0 ramp: i0_min * (i0_max/i0_min)^(c/(cycles-1)) at cycle c."""

    i0_min: float
    i0_max: float
    beta: float
    cycles: int
    t_res: int

    def __post_init__(self) -> None:
        if self.cycles < 2:
            raise ValueError("cycles must be >= 2")
        if self.t_res < 1:
            raise ValueError("t_res must be >= 1")
        if not 0.0 < self.i0_min < self.i0_max:
            raise ValueError("need 0 < i0_min < i0_max")
        expected = (self.i0_min / self.i0_max) ** (1.0 / (self.cycles - 1))
        if not math.isclose(self.beta, expected, rel_tol=1e-12):
            raise ValueError("beta inconsistent with i0 endpoints and cycle count")

    def i0_sequence(self) -> np.ndarray:
        """The amplitude used in each cycle (repeated division, as run)."""
        out = np.empty(self.cycles)
        x = self.i0_min
        for c in range(self.cycles):
            out[c] = x
            if c < self.cycles - 1:
                x = x / self.beta
        return out


def derive_schedule(model: IsingModel, cycles: int, t_res: int = 10) -> AnnealSchedule:
    """Instance-scaled schedule with i0_max / i0_min = 100.

    Each spin's coupling-row spread is sqrt((n-1) * Var(row)), where the
    variance is over the full length-n row, zeros included; the endpoints
    are 0.1 and 10 over the mean spread.  All-zero couplings leave the
    scale undefined and raise.
    """
    if cycles < 2:
        raise ValueError("cycles must be >= 2")
    n = model.n
    sum_w = np.zeros(n)
    sum_w2 = np.zeros(n)
    np.add.at(sum_w, model.edge_i, model.edge_w)
    np.add.at(sum_w, model.edge_j, model.edge_w)
    np.add.at(sum_w2, model.edge_i, model.edge_w**2)
    np.add.at(sum_w2, model.edge_j, model.edge_w**2)
    row_var = sum_w2 / n - (sum_w / n) ** 2
    spread = np.sqrt((n - 1) * np.maximum(row_var, 0.0))
    mean_spread = float(spread.mean())
    if mean_spread == 0.0:
        raise ValueError("all couplings are zero; annealing scale is undefined")
    i0_min = 0.1 / mean_spread
    i0_max = 10.0 / mean_spread
    beta = (i0_min / i0_max) ** (1.0 / (cycles - 1))
    return AnnealSchedule(i0_min=i0_min, i0_max=i0_max, beta=beta, cycles=cycles, t_res=t_res)


def compute_raw_input(model: IsingModel, spins: SpinState, i: int) -> float:
    """Raw field h_i + sum_j J_ij s_j, accumulated in CSR row order."""
    raw = float(model.h[i])
    for k in range(model.indptr[i], model.indptr[i + 1]):
        raw += float(model.values[k]) * float(spins[model.indices[k]])
    return raw


def next_input_psa(raw: float, i0: float) -> float:
    return i0 * raw


def next_input_tapsa(history: Sequence[float], i0: float) -> float:
    """i0 times the mean of the raw-field history (entries present only)."""
    if len(history) == 0:
        raise ValueError("time-average needs at least one raw field")
    acc = 0.0
    for x in history:
        acc += x
    return i0 * (acc / len(history))


def next_input_spsa(prev_input: float, raw: float, i0: float, u: float, p_stall: float) -> float:
    """Keep prev_input when u < p_stall, else refresh to i0 * raw."""
    return prev_input if u < p_stall else i0 * raw


@dataclass
class AnnealerState:
    """End-of-run snapshot of the loop's mutable state."""

    spins: SpinState
    inputs: np.ndarray      # last drive per p-bit
    ti_history: np.ndarray  # (n, alpha) recent raw fields (time-averaged rule)
    substep: int            # total sub-steps executed
    i0: float               # amplitude used in the final cycle


class TraceRecord(NamedTuple):
    cycle: int
    i0: float
    energy: float
    cut: int | None


@dataclass
class TrialResult:
    """Per-cycle trace plus final/best summary of one annealing run."""

    seed: int
    i0_trace: np.ndarray
    energy_trace: np.ndarray
    cut_trace: np.ndarray | None
    final_state: AnnealerState
    final_energy: float
    final_cut: int | None
    best_cut: int | None
    update_counts: np.ndarray

    @property
    def trace(self) -> list[TraceRecord]:
        cuts = self.cut_trace
        return [
            TraceRecord(c, float(self.i0_trace[c]), float(self.energy_trace[c]),
                        int(cuts[c]) if cuts is not None else None)
            for c in range(self.i0_trace.size)
        ]


def run_anneal(
    model: IsingModel,
    schedule: AnnealSchedule,
    algo: AlgorithmConfig,
    profile: VariabilityProfile,
    seed: int,
    graph: MaxCutGraph | None = None,
) -> TrialResult:
    """Run one full anneal; identical seeds give identical results.

    When the originating graph is supplied its cut is recorded per cycle;
    otherwise the cut fields are None.
    """
    if profile.n != model.n:
        raise ValueError(f"profile is for {profile.n} p-bits, model has {model.n}")
    if profile.t_res != schedule.t_res:
        raise ValueError("profile and schedule disagree on t_res")
    if graph is not None and graph.n != model.n:
        raise ValueError("graph and model disagree on n")

    if graph is not None:
        ge_i, ge_j, ge_w = graph.edge_i, graph.edge_j, graph.edge_w
    else:
        ge_i = np.empty(0, dtype=np.int64)
        ge_j = np.empty(0, dtype=np.int64)
        ge_w = np.empty(0, dtype=np.int64)

    key = np.uint64(streams.run_key(seed))
    spins, inputs, hist, counts, i0s, energies, cuts, best = anneal_loop(
        model.indptr,
        model.indices,
        model.values,
        model.h,
        model.edge_i,
        model.edge_j,
        model.edge_w,
        ge_i,
        ge_j,
        ge_w,
        profile.lam,
        profile.delta,
        profile.period,
        schedule.i0_min,
        schedule.beta,
        schedule.cycles,
        schedule.t_res,
        algo.kind.code,
        algo.alpha if algo.kind is Algorithm.TAPSA else 1,
        algo.p_stall,
        key,
    )

    state = AnnealerState(
        spins=spins,
        inputs=inputs,
        ti_history=hist,
        substep=schedule.cycles * schedule.t_res,
        i0=float(i0s[-1]),
    )
    has_graph = graph is not None
    return TrialResult(
        seed=seed,
        i0_trace=i0s,
        energy_trace=energies,
        cut_trace=cuts if has_graph else None,
        final_state=state,
        final_energy=float(energies[-1]),
        final_cut=int(cuts[-1]) if has_graph else None,
        best_cut=int(best) if has_graph else None,
        update_counts=counts,
    )
