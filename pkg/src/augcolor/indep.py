"""Independent-set machinery: greedy maximal sets, budgeted search for a
set of a given size, and exact maximum independent sets for small graphs.

The size-k search is the hot loop of the phase-1 coloring algorithms, so it
works on bitmasks throughout: the candidate pool is an int, and dropping a
vertex's neighborhood is one AND.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import limits
from .errors import InputError, SizeLimitError
from .graph import Graph, mask_of, vertices_of
from .randgraph import rng_from

__all__ = [
    "FOUND",
    "EXHAUSTED",
    "BUDGET_EXCEEDED",
    "SearchBudget",
    "IndepSearchResult",
    "greedy_maximal_independent_set",
    "find_independent_set_of_size",
    "maximum_independent_set",
]

FOUND = "found"
EXHAUSTED = "exhausted_none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Backtracking-node allowance for one size-k search call."""

    node_limit: int = limits.DEFAULT_IS_NODE_LIMIT


@dataclass(frozen=True)
class IndepSearchResult:
    status: str  # FOUND | EXHAUSTED | BUDGET_EXCEEDED
    vertices: frozenset[int] | None
    nodes_visited: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


def greedy_maximal_independent_set(
    g: Graph, candidates: Iterable[int] | int, order_seed: int
) -> frozenset[int]:
    """Maximal independent subset of the candidates, built by scanning them
    in a seed-derived random order and keeping every vertex with no earlier
    kept neighbor.

    Maximal within the candidate set: no remaining candidate can be added.
    """
    cand_mask = candidates if isinstance(candidates, int) else mask_of(candidates)
    cand = vertices_of(cand_mask)
    if not cand:
        raise InputError("greedy maximal independent set needs candidates")
    order = rng_from(order_seed).permutation(len(cand))
    rows = g.rows
    chosen = 0
    for idx in order:
        v = cand[idx]
        if not rows[v - 1] & chosen:
            chosen |= 1 << (v - 1)
    return frozenset(vertices_of(chosen))


def find_independent_set_of_size(
    g: Graph,
    candidates: Iterable[int] | int,
    k: int,
    budget: SearchBudget = SearchBudget(),
) -> IndepSearchResult:
    """Search the candidates for an independent set of size exactly k.

    Backtracking over candidates in ascending-degree order, pruning branches
    that cannot reach k. EXHAUSTED is returned only after the full search
    space was covered; hitting the node budget is reported distinctly.
    """
    if k < 1:
        raise InputError(f"set size must be >= 1, got {k}")
    cand_mask = candidates if isinstance(candidates, int) else mask_of(candidates)
    order = sorted(vertices_of(cand_mask), key=lambda v: (g.degrees[v - 1], v))
    if len(order) < k:
        return IndepSearchResult(EXHAUSTED, None, 0)
    rows = g.rows
    limit = budget.node_limit
    nodes = 0
    picked: list[int] = []

    def rec(idx: int, pool: int, need: int) -> str:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            return BUDGET_EXCEEDED
        if need == 0:
            return FOUND
        if pool.bit_count() < need:
            return EXHAUSTED
        for i in range(idx, len(order)):
            v = order[i]
            bit = 1 << (v - 1)
            if not pool & bit:
                continue
            pool ^= bit  # v is decided here; later branches exclude it
            picked.append(v)
            status = rec(i + 1, pool & ~rows[v - 1], need - 1)
            if status != EXHAUSTED:
                return status
            picked.pop()
            if pool.bit_count() < need:
                return EXHAUSTED
        return EXHAUSTED

    status = rec(0, cand_mask, k)
    if status == FOUND:
        return IndepSearchResult(FOUND, frozenset(picked), nodes)
    return IndepSearchResult(status, None, nodes)


def maximum_independent_set(g: Graph, cap: int = limits.EXACT_MIS_CAP) -> frozenset[int]:
    """Exact maximum independent set by bitset branch and bound.

    Branches on a maximum-degree vertex of the remaining pool; prunes when
    the pool cannot beat the incumbent. Capped because the search is
    exponential.
    """
    if g.n > cap:
        raise SizeLimitError(
            f"exact maximum independent set capped at {cap} vertices, got {g.n}"
        )
    rows = g.rows

    # Greedy min-degree incumbent gives the bound a head start.
    pool = g.full_mask()
    seed_mask = 0
    while pool:
        best_v, best_d = -1, 1 << 60
        m = pool
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length()
            d = (rows[v - 1] & pool).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        seed_mask |= 1 << (best_v - 1)
        pool &= ~(rows[best_v - 1] | (1 << (best_v - 1)))

    best = [seed_mask.bit_count(), seed_mask]

    def expand(pool: int, size: int, mask: int) -> None:
        if size + pool.bit_count() <= best[0]:
            return
        if not pool:
            best[0], best[1] = size, mask
            return
        # branch vertex: maximum degree within the pool
        pick, pick_d = -1, -1
        m = pool
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length()
            d = (rows[v - 1] & pool).bit_count()
            if d > pick_d:
                pick, pick_d = v, d
        bit = 1 << (pick - 1)
        expand(pool & ~(rows[pick - 1] | bit), size + 1, mask | bit)
        expand(pool ^ bit, size, mask)

    expand(g.full_mask(), 0, 0)
    return frozenset(vertices_of(best[1]))
