"""Host graphs: constructors, canonical colorings, and exact counting of
independent k-sets (the quantity driving the Markov lower bound).

A HostSpec describes the deterministic part of an augmented graph in one of
three ways:

  multipartite: complete multipartite graph given by its part sizes; the
      canonical coloring (one color per part) is optimal.
  dimacs: any graph from a .col file; an optimal coloring is computed
      exactly when the graph is small enough, otherwise the caller must
      switch to `explicit`.
  explicit: a graph plus a user-provided proper coloring whose classes are
      taken as the partition (they need not be optimal).

Textual form, used by the CLI: `multipartite:5,5,5`, `dimacs:path.col`,
`explicit:path.col+coloring.csv`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import limits
from .errors import InputError, SizeLimitError
from .graph import Coloring, Graph, is_proper_coloring

__all__ = [
    "HostSpec",
    "complete_multipartite",
    "host_graph",
    "host_coloring",
    "count_independent_sets",
    "parse_host_spec",
]


@dataclass(frozen=True)
class HostSpec:
    kind: str  # "multipartite" | "dimacs" | "explicit"
    parts: tuple[int, ...] | None = None
    path: str | None = None
    graph: Graph | None = None
    coloring: Coloring | None = None

    @classmethod
    def multipartite(cls, parts) -> "HostSpec":
        parts = tuple(int(s) for s in parts)
        if not parts:
            raise InputError("multipartite host needs at least one part")
        if any(s < 1 for s in parts):
            raise InputError(f"part sizes must be positive, got {parts}")
        return cls(kind="multipartite", parts=parts)

    @classmethod
    def dimacs(cls, path: str) -> "HostSpec":
        return cls(kind="dimacs", path=path)

    @classmethod
    def explicit(cls, graph: Graph, coloring: Coloring) -> "HostSpec":
        if coloring.n != graph.n:
            raise InputError(
                f"coloring covers {coloring.n} vertices, host has {graph.n}"
            )
        if not is_proper_coloring(graph, coloring):
            raise InputError("provided host coloring is not proper")
        return cls(kind="explicit", graph=graph, coloring=coloring)

    @property
    def n(self) -> int:
        return host_graph(self).n


def complete_multipartite(parts) -> Graph:
    """Complete multipartite graph: edge iff endpoints lie in different
    parts. Vertices 1..n are numbered part by part."""
    parts = tuple(int(s) for s in parts)
    if not parts:
        raise InputError("need at least one part")
    if any(s < 1 for s in parts):
        raise InputError(f"part sizes must be positive, got {parts}")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in parts:
        part_mask = ((1 << size) - 1) << start
        other = full & ~part_mask
        rows.extend([other] * size)
        start += size
    return Graph(n, tuple(rows))


def _part_masks(parts: tuple[int, ...]) -> list[int]:
    masks = []
    start = 0
    for size in parts:
        masks.append(((1 << size) - 1) << start)
        start += size
    return masks


def host_graph(spec: HostSpec) -> Graph:
    if spec.kind == "multipartite":
        return complete_multipartite(spec.parts)
    if spec.kind == "dimacs":
        from .dimacs import read_dimacs

        return read_dimacs(spec.path)
    if spec.kind == "explicit":
        return spec.graph
    raise InputError(f"unknown host kind {spec.kind!r}")


def host_coloring(spec: HostSpec, exact_cap: int = limits.HOST_EXACT_COLORING_CAP) -> Coloring:
    """Canonical proper coloring whose classes partition the vertices.

    multipartite: one color per part (optimal). explicit: the provided
    coloring. dimacs: exact optimal coloring, only below the exact-size cap.
    """
    if spec.kind == "multipartite":
        colors = []
        for j, size in enumerate(spec.parts, start=1):
            colors.extend([j] * size)
        return Coloring(tuple(colors))
    if spec.kind == "explicit":
        return spec.coloring
    if spec.kind == "dimacs":
        g = host_graph(spec)
        if g.n > exact_cap:
            raise SizeLimitError(
                f"optimal coloring unavailable: host has {g.n} > {exact_cap} "
                "vertices; provide one via an explicit host "
                "(explicit:graph.col+coloring.csv)"
            )
        from .coloring import exact_chromatic

        _, witness = exact_chromatic(g, cap=exact_cap)
        return witness
    raise InputError(f"unknown host kind {spec.kind!r}")


def count_independent_sets(spec: HostSpec, k: int) -> int:
    """Exact number of independent k-sets in the host, as an arbitrary
    precision integer.

    Multipartite hosts are counted in closed form: for k >= 2 an independent
    set cannot straddle two parts, so the count is sum of C(size, k) over
    parts. Arbitrary hosts are counted by brute-force enumeration, capped at
    n <= BRUTE_FORCE_COUNT_CAP vertices.
    """
    if k < 1:
        raise InputError(f"set size must be >= 1, got {k}")
    if spec.kind == "multipartite":
        if k == 1:
            return sum(spec.parts)
        return sum(math.comb(size, k) for size in spec.parts)
    g = host_graph(spec)
    if k == 1:
        return g.n
    if g.n > limits.BRUTE_FORCE_COUNT_CAP:
        raise SizeLimitError(
            f"brute-force independent-set counting capped at "
            f"{limits.BRUTE_FORCE_COUNT_CAP} vertices, host has {g.n}"
        )
    return _count_k_independent(g, k)


def _count_k_independent(g: Graph, k: int) -> int:
    """Count independent sets of size exactly k by ordered enumeration:
    each chosen vertex restricts the pool to higher-numbered non-neighbors."""
    rows = g.rows

    def rec(pool: int, need: int) -> int:
        if need == 0:
            return 1
        if pool.bit_count() < need:
            return 0
        total = 0
        while pool:
            low = pool & -pool
            pool ^= low
            if need == 1:
                total += 1
            else:
                v = low.bit_length()
                total += rec(pool & ~rows[v - 1], need - 1)
        return total

    return rec(g.full_mask(), k)


def parse_host_spec(text: str) -> HostSpec:
    """Parse the CLI textual form of a host description."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InputError(
            f"host spec {text!r} needs the form kind:args, e.g. multipartite:5,5,5"
        )
    if kind == "multipartite":
        try:
            parts = [int(tok) for tok in rest.split(",") if tok.strip()]
        except ValueError:
            raise InputError(f"bad part sizes in host spec {text!r}")
        return HostSpec.multipartite(parts)
    if kind == "dimacs":
        return HostSpec.dimacs(rest)
    if kind == "explicit":
        graph_path, plus, coloring_path = rest.partition("+")
        if not plus:
            raise InputError(
                f"explicit host spec needs graph.col+coloring.csv, got {text!r}"
            )
        from .dimacs import read_coloring_csv, read_dimacs

        g = read_dimacs(graph_path)
        coloring = read_coloring_csv(coloring_path, g.n)
        return HostSpec.explicit(g, coloring)
    raise InputError(f"unknown host kind {kind!r} in {text!r}")
