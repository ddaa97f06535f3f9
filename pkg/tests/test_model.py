"""Energy, cut, and mapping oracles for the spin-model core."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pbitsa.model import (
    IsingModel,
    MaxCutGraph,
    cut_value,
    energy,
    local_field,
    maxcut_to_ising,
    random_state,
)


def _all_states(n: int) -> np.ndarray:
    return ((np.arange(2**n)[:, None] >> np.arange(n)) & 1).astype(np.int8) * 2 - 1


def test_energy_hand_oracle_three_spin_path() -> None:
    # H = -(0.5*1 + (-1)(-1) + 2*1) - (1*(1*-1) + (-2)*(-1*1)) = -3.5 - 1 = -4.5
    model = IsingModel.from_edges(3, [(0, 1, 1.0), (1, 2, -2.0)], h=[0.5, -1.0, 2.0])
    s = np.array([1, -1, 1], dtype=np.int8)
    assert energy(model, s) == pytest.approx(-4.5, abs=0.0)


def test_cut_hand_oracle_square_with_negative_chord() -> None:
    g = MaxCutGraph.from_edges(
        4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, -1)]
    )
    # alternating split cuts all four ring edges, chord stays inside
    assert cut_value(g, np.array([1, -1, 1, -1], dtype=np.int8)) == 4
    # pair split cuts two ring edges plus the negative chord
    assert cut_value(g, np.array([1, 1, -1, -1], dtype=np.int8)) == 1


def test_cut_can_be_negative() -> None:
    g = MaxCutGraph.from_edges(2, [(0, 1, -3)])
    assert cut_value(g, np.array([1, -1], dtype=np.int8)) == -3


def test_local_field_includes_bias_and_matches_flip_energy() -> None:
    rng = np.random.default_rng(11)
    edges = [(i, j, float(rng.normal())) for i in range(6) for j in range(i + 1, 6)]
    model = IsingModel.from_edges(6, edges, h=rng.normal(size=6))
    s = random_state(6, rng)
    for i in range(6):
        flipped = s.copy()
        flipped[i] = -flipped[i]
        delta = energy(model, flipped) - energy(model, s)
        assert delta == pytest.approx(2.0 * s[i] * local_field(model, s, i), rel=1e-12)


def test_maxcut_mapping_negates_weights_and_zeroes_bias() -> None:
    g = MaxCutGraph.from_edges(3, [(0, 1, 2), (1, 2, -3)])
    model = maxcut_to_ising(g)
    assert np.array_equal(model.h, np.zeros(3))
    assert np.array_equal(model.edge_w, np.array([-2.0, 3.0]))
    assert np.array_equal(model.edge_i, g.edge_i)
    assert np.array_equal(model.edge_j, g.edge_j)


def test_cut_energy_identity_exhaustive() -> None:
    # 2*cut(s) - total_weight == -H(s) for every state of random small graphs
    rng = np.random.default_rng(5)
    for _ in range(4):
        n = int(rng.integers(3, 8))
        edges = [
            (i, j, int(rng.choice([-2, -1, 1, 3])))
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.6
        ]
        if not edges:
            edges = [(0, 1, 1)]
        g = MaxCutGraph.from_edges(n, edges)
        model = maxcut_to_ising(g)
        w = g.total_weight()
        for s in _all_states(n):
            assert 2 * cut_value(g, s) - w == pytest.approx(-energy(model, s), rel=1e-12)


def test_energy_minimum_is_max_cut_exhaustive() -> None:
    rng = np.random.default_rng(17)
    n = 7
    edges = [(i, j, int(rng.choice([-1, 1])))
             for i in range(n) for j in range(i + 1, n) if rng.random() < 0.7]
    g = MaxCutGraph.from_edges(n, edges)
    model = maxcut_to_ising(g)
    states = _all_states(n)
    cuts = np.array([cut_value(g, s) for s in states])
    energies = np.array([energy(model, s) for s in states])
    assert cuts[int(np.argmin(energies))] == cuts.max()


@given(seed=st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_global_flip_invariance(seed: int) -> None:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 12))
    edges = [(i, j, int(rng.integers(-4, 5)) or 2)
             for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    if not edges:
        edges = [(0, 1, 1)]
    g = MaxCutGraph.from_edges(n, edges)
    model = maxcut_to_ising(g)  # h == 0, so energy is flip-invariant too
    s = random_state(n, rng)
    assert cut_value(g, s) == cut_value(g, -s)
    assert energy(model, s) == pytest.approx(energy(model, -s), rel=1e-12)


def test_from_edges_canonicalizes_orientation_and_order() -> None:
    g = MaxCutGraph.from_edges(4, [(3, 1, 5), (2, 0, 7)])
    assert g.edge_list() == [(0, 2, 7), (1, 3, 5)]
    assert g.m == 2
    assert g.total_weight() == 12


def test_edge_validation_errors() -> None:
    with pytest.raises(ValueError, match="out of range"):
        MaxCutGraph.from_edges(3, [(0, 3, 1)])
    with pytest.raises(ValueError, match="self-loop"):
        MaxCutGraph.from_edges(3, [(1, 1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        MaxCutGraph.from_edges(3, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(ValueError, match="at least one vertex"):
        MaxCutGraph.from_edges(0, [])
    with pytest.raises(ValueError, match="shape"):
        IsingModel.from_edges(3, [(0, 1, 1.0)], h=[1.0, 2.0])
    with pytest.raises(ValueError, match="finite"):
        IsingModel.from_edges(2, [(0, 1, float("nan"))])


def test_state_validation_errors() -> None:
    g = MaxCutGraph.from_edges(3, [(0, 1, 1)])
    with pytest.raises(ValueError, match="shape"):
        cut_value(g, np.array([1, -1], dtype=np.int8))
    with pytest.raises(ValueError, match="-1 or \\+1"):
        cut_value(g, np.array([1, 0, -1], dtype=np.int8))


def test_csr_adjacency_is_symmetric_and_complete() -> None:
    g = MaxCutGraph.from_edges(5, [(0, 1, 2), (0, 4, -1), (2, 3, 3), (1, 4, 1)])
    model = maxcut_to_ising(g)
    dense = np.zeros((5, 5))
    for i, j, w in zip(model.edge_i, model.edge_j, model.edge_w):
        dense[i, j] = dense[j, i] = w
    for i in range(5):
        lo, hi = model.indptr[i], model.indptr[i + 1]
        row = np.zeros(5)
        row[model.indices[lo:hi]] = model.values[lo:hi]
        assert np.array_equal(row, dense[i])
    assert np.array_equal(np.sort(model.indices[model.indptr[0]:model.indptr[1]]),
                          model.indices[model.indptr[0]:model.indptr[1]])


def test_random_state_is_pm_one_and_seeded() -> None:
    a = random_state(50, np.random.default_rng(3))
    b = random_state(50, np.random.default_rng(3))
    assert np.array_equal(a, b)
    assert set(np.unique(a)) <= {-1, 1}
