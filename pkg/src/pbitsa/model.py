"""Ising models, spin states, and the MAX-CUT correspondence.

Spin states are plain numpy arrays of int8 with every entry in {-1, +1}.
Couplings are kept in two synchronized sparse views built from one edge
list: a CSR adjacency (one contiguous row scan per p-bit's local field)
and the undirected edge arrays themselves (energy and cut evaluation).
A dense n x n matrix is never materialized, so storage stays proportional
to the number of edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

SpinState = np.ndarray  # shape (n,), int8, entries in {-1, +1}


def _build_csr(
    n: int, ei: np.ndarray, ej: np.ndarray, ew: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Symmetric CSR arrays (indptr, indices, values) from i<j edges."""
    rows = np.concatenate([ei, ej])
    cols = np.concatenate([ej, ei])
    vals = np.concatenate([ew, ew]).astype(np.float64)
    order = np.lexsort((cols, rows))
    rows, cols, vals = rows[order], cols[order], vals[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, rows + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, cols.astype(np.int64), vals


def _check_edges(n: int, ei: np.ndarray, ej: np.ndarray, what: str) -> None:
    if ei.size == 0:
        return
    if ei.min() < 0 or ej.min() < 0 or ei.max() >= n or ej.max() >= n:
        raise ValueError(f"{what}: edge endpoint out of range for n={n}")
    if np.any(ei == ej):
        raise ValueError(f"{what}: self-loops are not allowed")
    codes = ei.astype(np.int64) * n + ej.astype(np.int64)
    if np.unique(codes).size != codes.size:
        raise ValueError(f"{what}: duplicate edge")


@dataclass
class MaxCutGraph:
    """Undirected weighted graph with 0-based vertices and integer weights."""

    n: int
    edge_i: np.ndarray  # (m,) int64, edge_i < edge_j
    edge_j: np.ndarray
    edge_w: np.ndarray  # (m,) int64

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "MaxCutGraph":
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        es = list(edges)
        ei = np.array([e[0] for e in es], dtype=np.int64)
        ej = np.array([e[1] for e in es], dtype=np.int64)
        ew = np.array([e[2] for e in es], dtype=np.int64)
        ei, ej = np.minimum(ei, ej), np.maximum(ei, ej)
        _check_edges(n, ei, ej, "MaxCutGraph")
        order = np.lexsort((ej, ei))
        return cls(n=n, edge_i=ei[order], edge_j=ej[order], edge_w=ew[order])

    @property
    def m(self) -> int:
        return int(self.edge_i.size)

    def total_weight(self) -> int:
        return int(self.edge_w.sum())

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [
            (int(i), int(j), int(w))
            for i, j, w in zip(self.edge_i, self.edge_j, self.edge_w)
        ]


@dataclass
class IsingModel:
    """Pairwise Ising energy H = -sum_i h_i s_i - sum_{i<j} J_ij s_i s_j."""

    n: int
    h: np.ndarray       # (n,) float64
    edge_i: np.ndarray  # (m,) int64, edge_i < edge_j
    edge_j: np.ndarray
    edge_w: np.ndarray  # (m,) float64 couplings J_ij
    # CSR adjacency, derived in __post_init__
    indptr: np.ndarray = field(init=False, repr=False)
    indices: np.ndarray = field(init=False, repr=False)
    values: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.indptr, self.indices, self.values = _build_csr(
            self.n, self.edge_i, self.edge_j, self.edge_w
        )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, float]],
        h: Sequence[float] | np.ndarray | None = None,
    ) -> "IsingModel":
        if n < 1:
            raise ValueError("model needs at least one spin")
        es = list(edges)
        ei = np.array([e[0] for e in es], dtype=np.int64)
        ej = np.array([e[1] for e in es], dtype=np.int64)
        ew = np.array([e[2] for e in es], dtype=np.float64)
        ei, ej = np.minimum(ei, ej), np.maximum(ei, ej)
        _check_edges(n, ei, ej, "IsingModel")
        if not np.all(np.isfinite(ew)):
            raise ValueError("IsingModel: couplings must be finite")
        hv = np.zeros(n, dtype=np.float64) if h is None else np.asarray(h, dtype=np.float64)
        if hv.shape != (n,):
            raise ValueError(f"IsingModel: h has shape {hv.shape}, expected ({n},)")
        order = np.lexsort((ej, ei))
        return cls(n=n, h=hv, edge_i=ei[order], edge_j=ej[order], edge_w=ew[order])

    @property
    def m(self) -> int:
        return int(self.edge_i.size)


def _check_state(n: int, spins: np.ndarray) -> np.ndarray:
    spins = np.asarray(spins)
    if spins.shape != (n,):
        raise ValueError(f"spin state has shape {spins.shape}, expected ({n},)")
    if not np.all(np.abs(spins) == 1):
        raise ValueError("spin state entries must be -1 or +1")
    return spins.astype(np.int8, copy=False)


def random_state(n: int, rng: np.random.Generator) -> SpinState:
    """I.i.d. uniform spins in {-1, +1}."""
    return (rng.integers(0, 2, size=n, dtype=np.int8) * 2 - 1).astype(np.int8)


def energy(model: IsingModel, spins: SpinState) -> float:
    """Total energy, accumulated in double precision (each pair once)."""
    s = _check_state(model.n, spins).astype(np.float64)
    pair = float(np.dot(model.edge_w, s[model.edge_i] * s[model.edge_j]))
    return -float(np.dot(model.h, s)) - pair


def local_field(model: IsingModel, spins: SpinState, i: int) -> float:
    """h_i + sum_j J_ij s_j for one spin (CSR row scan)."""
    s = _check_state(model.n, spins)
    lo, hi = model.indptr[i], model.indptr[i + 1]
    return float(model.h[i] + np.dot(model.values[lo:hi], s[model.indices[lo:hi]]))


def cut_value(graph: MaxCutGraph, spins: SpinState) -> int:
    """Signed cut: sum of w_ij over edges whose endpoints disagree.

    Negative-weight edges subtract when cut, so the value can be negative.
    """
    s = _check_state(graph.n, spins)
    crossing = s[graph.edge_i] != s[graph.edge_j]
    return int(graph.edge_w[crossing].sum())


def maxcut_to_ising(graph: MaxCutGraph) -> IsingModel:
    """Map MAX-CUT to an Ising model via J = -w, h = 0.

    Under this mapping 2*cut(s) - total_weight == -H(s), so energy minima
    are exactly maximum cuts.
    """
    return IsingModel.from_edges(
        graph.n,
        zip(graph.edge_i.tolist(), graph.edge_j.tolist(), (-graph.edge_w).tolist()),
    )
