"""DIMACS .col graph files and vertex,color CSV files.

Reader tolerates comment lines, duplicate edge lines, and reversed edge
lines; the writer emits each edge once with u < v. Vertices are 1-based in
the files, matching the in-memory convention.
"""

from __future__ import annotations

import os
from typing import TextIO

from .errors import InputError
from .graph import Coloring, Graph, build_graph

__all__ = [
    "read_dimacs",
    "write_dimacs",
    "read_coloring_csv",
    "write_coloring_csv",
]


def _parse_dimacs(lines: TextIO, name: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "edges", "col"):
                raise InputError(f"{name}:{lineno}: bad problem line {line!r}")
            try:
                n = int(tokens[2])
            except ValueError:
                raise InputError(f"{name}:{lineno}: bad vertex count in {line!r}")
        elif tokens[0] == "e":
            if n is None:
                raise InputError(f"{name}:{lineno}: edge line before problem line")
            if len(tokens) != 3:
                raise InputError(f"{name}:{lineno}: bad edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise InputError(f"{name}:{lineno}: bad edge line {line!r}")
            edges.append((u, v))
        else:
            raise InputError(f"{name}:{lineno}: unknown line {line!r}")
    if n is None:
        raise InputError(f"{name}: missing problem line")
    return build_graph(n, edges)


def read_dimacs(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return _parse_dimacs(fh, str(path))


def write_dimacs(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"p edge {g.n} {g.edge_count}\n")
        for u, v in g.edges():
            fh.write(f"e {u} {v}\n")


def read_coloring_csv(path: str | os.PathLike, n: int) -> Coloring:
    """Read vertex,color rows into a total coloring of 1..n.

    A leading `vertex,color` header row is accepted and skipped.
    """
    colors = [0] * n
    seen = [False] * n
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if lineno == 1 and line.replace(" ", "") == "vertex,color":
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise InputError(f"{path}:{lineno}: expected vertex,color row")
            try:
                v, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputError(f"{path}:{lineno}: non-integer row {line!r}")
            if not 1 <= v <= n:
                raise InputError(f"{path}:{lineno}: vertex {v} out of range 1..{n}")
            if seen[v - 1]:
                raise InputError(f"{path}:{lineno}: vertex {v} colored twice")
            seen[v - 1] = True
            colors[v - 1] = c
    missing = [i + 1 for i, s in enumerate(seen) if not s]
    if missing:
        raise InputError(f"{path}: vertices without a color: {missing[:5]}...")
    return Coloring(tuple(colors))


def write_coloring_csv(coloring: Coloring, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("vertex,color\n")
        for v, c in enumerate(coloring.colors, start=1):
            fh.write(f"{v},{c}\n")
