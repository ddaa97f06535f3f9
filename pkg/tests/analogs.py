"""Stand-in benchmark instances for the test suite.

The real public benchmark files cannot be redistributed here, so tests run
on structure-matched analogs: same vertex count, same edge count, same
weight set, and same family (uniform random vs. 2-D torus).  Files are
written in the standard text format and re-read through the library
parser, so large-scale parsing is exercised too.

Set PBITSA_GSET_DIR to a directory holding the real files (G1, G22, ...)
to run the same tests against the originals; best-known denominators then
come from the bundled registry instead of a reference solver.
"""

from __future__ import annotations

import os
import zlib
from pathlib import Path

import numpy as np

from pbitsa.gset import GsetFile, parse_gset_path, serialize_gset

# name -> (n, m, family, weights); sizes mirror the benchmark suite used
# by the bundled experiments.  Torus shapes factor n with m == 2n.
BENCHMARKS: dict[str, tuple[int, int, str]] = {
    "G1": (800, 19176, "random"),
    "G22": (2000, 19990, "random"),
    "G47": (1000, 9990, "random"),
    "G48": (3000, 6000, "torus"),
    "G55": (5000, 12498, "random"),
    "G60": (7000, 17148, "random"),
    "G67": (10000, 20000, "torus"),
    "G77": (14000, 28000, "torus"),
    "G81": (20000, 40000, "torus"),
}

TORUS_SHAPE = {3000: (50, 60), 10000: (100, 100), 14000: (100, 140), 20000: (100, 200)}


def _random_edges(n: int, m: int, rng: np.random.Generator) -> list[tuple[int, int, int]]:
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        i = int(rng.integers(0, n))
        j = int(rng.integers(0, n))
        if i == j:
            continue
        if i > j:
            i, j = j, i
        seen.add((i, j))
    return [(i, j, 1) for i, j in sorted(seen)]


def _torus_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int, int]]:
    rows, cols = TORUS_SHAPE[n]
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            right = r * cols + (c + 1) % cols
            down = ((r + 1) % rows) * cols + c
            edges.append(tuple(sorted((v, right))))
            edges.append(tuple(sorted((v, down))))
    edges = sorted(set(edges))
    assert len(edges) == 2 * n
    ws = rng.choice(np.array([-1, 1]), size=len(edges))
    return [(i, j, int(w)) for (i, j), w in zip(edges, ws)]


def make_analog(name: str) -> GsetFile:
    n, m, family = BENCHMARKS[name]
    rng = np.random.default_rng(zlib.crc32(name.encode()))
    if family == "random":
        edges = _random_edges(n, m, rng)
    else:
        edges = _torus_edges(n, rng)
    assert len(edges) == m
    return GsetFile(
        name=name, n=n, m=m, edges=[(i + 1, j + 1, w) for i, j, w in edges]
    )


def real_file_dir() -> Path | None:
    d = os.environ.get("PBITSA_GSET_DIR")
    return Path(d) if d else None


def benchmark_file(name: str, cache_dir: Path) -> tuple[Path, bool]:
    """Path to the benchmark file and whether it is the real instance."""
    real = real_file_dir()
    if real is not None and (real / name).is_file():
        return real / name, True
    path = cache_dir / f"{name}.txt"
    if not path.exists():
        path.write_text(serialize_gset(make_analog(name)))
    return path, False


def load_benchmark(name: str, cache_dir: Path):
    path, is_real = benchmark_file(name, cache_dir)
    return parse_gset_path(path), is_real
