"""Benchmark graph file I/O and the best-known-cut registry.

Graph files use the plain text layout common to public MAX-CUT benchmark
collections: a header line ``n m`` followed by exactly m lines ``i j w``
with 1-based vertex indices and integer weights.  Parsing keeps the
1-based indices; conversion to a 0-based :class:`~pbitsa.model.MaxCutGraph`
is a separate, explicit step.

The registry is a ``name value`` text file ('#' starts a comment); it maps
graph names to the best cut value reported in published results and is
meant to be edited as better cuts appear.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .model import MaxCutGraph


class GsetParseError(ValueError):
    """Malformed benchmark file; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class GsetFile:
    """Parsed benchmark file, still in its on-disk 1-based form."""

    name: str
    n: int
    m: int
    edges: list[tuple[int, int, int]]  # (i, j, w), 1-based


def parse_gset(stream: Iterable[str] | IO[str], name: str = "<gset>") -> GsetFile:
    lines = list(stream)
    if not lines or not lines[0].strip():
        raise GsetParseError(1, "missing 'n m' header")
    parts = lines[0].split()
    if len(parts) != 2:
        raise GsetParseError(1, f"header must be 'n m', got {lines[0].strip()!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GsetParseError(1, f"non-integer header field in {lines[0].strip()!r}") from None
    if n < 1 or m < 0:
        raise GsetParseError(1, f"invalid sizes n={n} m={m}")

    edges: list[tuple[int, int, int]] = []
    for lineno, text in enumerate(lines[1:], start=2):
        if not text.strip():
            continue
        fields = text.split()
        if len(fields) != 3:
            raise GsetParseError(lineno, f"edge line must be 'i j w', got {text.strip()!r}")
        try:
            i, j, w = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise GsetParseError(lineno, f"non-integer edge field in {text.strip()!r}") from None
        if not (1 <= i <= n) or not (1 <= j <= n):
            raise GsetParseError(lineno, f"vertex out of range 1..{n}: ({i}, {j})")
        if i == j:
            raise GsetParseError(lineno, f"self-loop at vertex {i}")
        edges.append((i, j, w))

    if len(edges) != m:
        raise GsetParseError(
            len(lines), f"header declares {m} edges but file has {len(edges)}"
        )
    return GsetFile(name=name, n=n, m=m, edges=edges)


def parse_gset_path(path: str | Path) -> GsetFile:
    p = Path(path)
    with open(p, "r", encoding="ascii") as fh:
        return parse_gset(fh, name=p.stem)


def serialize_gset(gf: GsetFile) -> str:
    out = [f"{gf.n} {gf.m}"]
    out.extend(f"{i} {j} {w}" for i, j, w in gf.edges)
    return "\n".join(out) + "\n"


def to_graph(gf: GsetFile) -> MaxCutGraph:
    """Convert to the in-memory 0-based representation."""
    return MaxCutGraph.from_edges(gf.n, [(i - 1, j - 1, w) for i, j, w in gf.edges])


def load_best_known(stream: Iterable[str] | IO[str]) -> dict[str, int]:
    """Parse a 'name value' registry; duplicates and non-integers error."""
    table: dict[str, int] = {}
    for lineno, text in enumerate(stream, start=1):
        body = text.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'name value', got {body!r}")
        name, value = fields
        try:
            cut = int(value)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer best-known value {value!r}") from None
        if name in table:
            raise ValueError(f"line {lineno}: duplicate entry for {name!r}")
        table[name] = cut
    return table


def load_best_known_path(path: str | Path) -> dict[str, int]:
    with open(Path(path), "r", encoding="ascii") as fh:
        return load_best_known(fh)


def bundled_best_known() -> dict[str, int]:
    """The registry shipped with the package."""
    text = importlib.resources.files("pbitsa").joinpath("data/best_known.txt").read_text()
    return load_best_known(text.splitlines())
