"""Immutable simple undirected graphs on vertices 1..n with bitrow adjacency.

Each vertex v (1-based in the public API) has a row `rows[v-1]`: an int whose
bit (u-1) is set iff {u,v} is an edge. Rows are kept symmetric and
irreflexive by the constructors; independence and conflict checks are then
word-parallel AND/popcount operations, which is what the backtracking
searches rely on.

Vertex sets cross the API boundary as iterables of 1-based vertex numbers;
internally they travel as bitmasks (bit v-1 for vertex v).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InputError

__all__ = [
    "Graph",
    "Coloring",
    "build_graph",
    "union",
    "induced_subgraph",
    "is_independent",
    "is_proper_coloring",
    "first_conflict",
    "mask_of",
    "vertices_of",
]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with bit v-1 set for each 1-based vertex v."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    """Sorted list of 1-based vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


class Graph:
    """Simple undirected graph, immutable after construction.

    Use :func:`build_graph` (validating) or the generators in
    :mod:`augcolor.randgraph` / :mod:`augcolor.hosts` to create instances;
    the raw constructor trusts its rows.
    """

    __slots__ = ("n", "rows", "_degrees", "_m")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if n < 1:
            raise InputError(f"graph needs at least one vertex, got n={n}")
        if len(rows) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = rows
        self._degrees: tuple[int, ...] | None = None
        self._m: int | None = None

    @property
    def edge_count(self) -> int:
        if self._m is None:
            self._m = sum(self.degrees) // 2
        return self._m

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(r.bit_count() for r in self.rows)
        return self._degrees

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def max_degree(self) -> int:
        return max(self.degrees)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v - 1]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(1, self.n + 1):
            row = self.rows[u - 1] >> u  # bit k set <=> neighbor u+1+k
            while row:
                low = row & -row
                yield (u, u + low.bit_length())
                row ^= low

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def validate(self) -> None:
        """Assert symmetry, irreflexivity, and row width. Test helper."""
        for i, row in enumerate(self.rows):
            if row >> self.n:
                raise InputError(f"row {i + 1} has bits beyond vertex {self.n}")
            if row >> i & 1:
                raise InputError(f"self-loop at vertex {i + 1}")
        for u, v in self.edges():
            if not (self.rows[v - 1] >> (u - 1) & 1):
                raise InputError(f"asymmetric edge {{{u},{v}}}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of positive color indices to vertices 1..n.

    `colors[v-1]` is the color of vertex v. `num_colors` counts the distinct
    colors actually used.
    """

    colors: tuple[int, ...]
    _distinct: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.colors:
            raise InputError("coloring must cover at least one vertex")
        for i, c in enumerate(self.colors):
            if not isinstance(c, int) or c < 1:
                raise InputError(f"vertex {i + 1} has invalid color {c!r}")
        object.__setattr__(self, "_distinct", frozenset(self.colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return len(self._distinct)

    def color_of(self, v: int) -> int:
        return self.colors[v - 1]

    def classes(self) -> dict[int, list[int]]:
        """Map color -> sorted list of vertices with that color."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors, start=1):
            out.setdefault(c, []).append(v)
        return out

    def class_masks(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, c in enumerate(self.colors):
            out[c] = out.get(c, 0) | (1 << i)
        return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicates and reversed
    pairs collapse to one edge.

    Raises InputError on out-of-range vertices or self-loops.
    """
    if n < 1:
        raise InputError(f"graph needs at least one vertex, got n={n}")
    rows = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge {{{u},{v}}} out of range 1..{n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(rows))


def union(g: Graph, h: Graph) -> Graph:
    """Edge-set union of two graphs on the same vertex set."""
    if g.n != h.n:
        raise InputError(f"union needs equal vertex counts, got {g.n} and {h.n}")
    return Graph(g.n, tuple(a | b for a, b in zip(g.rows, h.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by a vertex subset, relabeled to 1..|S|.

    Returns (subgraph, relabeling) where relabeling[j-1] is the original
    vertex that became vertex j. Vertices keep their relative order.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise InputError("induced subgraph needs a nonempty vertex set")
    for v in keep:
        if not (1 <= v <= g.n):
            raise InputError(f"vertex {v} out of range 1..{g.n}")
    pos = {v: j for j, v in enumerate(keep)}
    rows = []
    for v in keep:
        old = g.rows[v - 1]
        new = 0
        for u in keep:
            if old >> (u - 1) & 1:
                new |= 1 << pos[u]
        rows.append(new)
    return Graph(len(keep), tuple(rows)), tuple(keep)


def is_independent(g: Graph, vertices: Iterable[int] | int) -> bool:
    """True iff no edge of g joins two of the given vertices.

    Accepts an iterable of 1-based vertices or a prebuilt bitmask.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    m = mask
    while m:
        low = m & -m
        v = low.bit_length()
        if g.rows[v - 1] & mask:
            return False
        m ^= low
    return True


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff every edge of g has differently colored endpoints."""
    if coloring.n != g.n:
        raise InputError(
            f"coloring covers {coloring.n} vertices, graph has {g.n}"
        )
    return first_conflict(g, coloring) is None


def first_conflict(g: Graph, coloring: Coloring) -> tuple[int, int] | None:
    """Lexicographically first monochromatic edge, or None if the coloring
    is proper."""
    if coloring.n != g.n:
        raise InputError(
            f"coloring covers {coloring.n} vertices, graph has {g.n}"
        )
    masks = coloring.class_masks()
    for u in range(1, g.n + 1):
        same = (g.rows[u - 1] & masks[coloring.colors[u - 1]]) >> u
        if same:  # lowest same-colored neighbor above u
            return (u, u + (same & -same).bit_length())
    return None
