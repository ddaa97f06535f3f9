"""Shared fixtures: benchmark file cache and reference cut denominators.

Benchmark instances come from :mod:`analogs` (structure-matched stand-ins,
or the real files when PBITSA_GSET_DIR points at them).  Normalization
denominators come from the bundled best-known registry for real files and
from an independent Metropolis solver for stand-ins.
"""

from __future__ import annotations

import pytest

import analogs
import solvers
from pbitsa.gset import bundled_best_known, to_graph


@pytest.fixture(scope="session")
def bench_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("benchmarks")


@pytest.fixture(scope="session")
def load_bench(bench_dir):
    """name -> (GsetFile, MaxCutGraph, is_real_instance), cached per session."""
    cache: dict[str, tuple] = {}

    def _load(name: str):
        if name not in cache:
            gf, is_real = analogs.load_benchmark(name, bench_dir)
            cache[name] = (gf, to_graph(gf), is_real)
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def best_cut_of(load_bench):
    """Normalization denominator per benchmark name, cached per session."""
    registry = bundled_best_known()
    cache: dict[str, int] = {}

    def _best(name: str) -> int:
        if name not in cache:
            _, graph, is_real = load_bench(name)
            if is_real:
                cache[name] = registry[name]
            else:
                cache[name] = solvers.reference_best_cut(graph)
        return cache[name]

    return _best
