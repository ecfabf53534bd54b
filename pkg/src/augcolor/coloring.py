"""The coloring algorithms for G(n,p) and augmented graphs, plus an exact
chromatic-number oracle.

Five heuristics share one shape: a phase that repeatedly extracts an
independent set and gives it a fresh color, then a fallback phase for the
leftovers. The phase thresholds come from the input size and edge
probability:

  constant-p single graph:  extract sets of size
      s = max(1, floor(2*log_b(np) - 4*log_b(log_b(np)))),  b = 1/(1-p),
    while at least nu = ceil(n / log_b(np)^2) vertices remain uncolored;
    then one fresh color per leftover vertex.
  small-p single graph: same s, but nu = ceil(n / ln(np)) and the leftovers
    are colored greedily (repeated maximal independent sets).
  augmented variants: partition by the host coloring's classes, run the
    matching single-graph algorithm inside every class at least as large as
    a threshold g(n), and fall back per class below it. No color is ever
    shared between classes.

s is floored and clamped to >= 1 and nu is ceiled so the algorithms stay
total at desk scale where the asymptotic formulas go degenerate. When the
set search fails (exhausted or budget), the extraction loop ends and the
fallback phase takes over; a budget hit is surfaced in the accounting.
All logarithms are natural unless written log_b (log_b(x) = ln x / ln b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import limits
from .errors import InputError, RegimeError, SizeLimitError
from .graph import Coloring, Graph, induced_subgraph, vertices_of
from .hosts import HostSpec, host_coloring
from .indep import (
    BUDGET_EXCEEDED,
    SearchBudget,
    find_independent_set_of_size,
    greedy_maximal_independent_set,
)
from .randgraph import derive_seed

__all__ = [
    "AlgoParams",
    "PhaseAccounting",
    "greedy_color",
    "bollobas_constant",
    "bollobas_small",
    "augmented_color_constant",
    "augmented_color_small",
    "exact_chromatic",
    "phase_thresholds_constant",
    "phase_thresholds_small",
]


@dataclass(frozen=True)
class AlgoParams:
    """Knobs shared by the heuristics.

    epsilon enters the large-class threshold of the constant-p augmented
    algorithm. theta only documents the intended small-p regime
    p ~ n^(-theta); nothing is computed from it (the regime's delta slack is
    likewise only documentation). seed drives the randomized greedy orders.
    """

    p: float
    epsilon: float = 0.2
    theta: float | None = None
    seed: int = 0
    budget: SearchBudget = field(default_factory=SearchBudget)

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise InputError(f"edge probability must lie in (0,1), got {self.p}")
        if self.epsilon <= 0.0:
            raise InputError(f"epsilon must be positive, got {self.epsilon}")
        if self.theta is not None and not 0.0 < self.theta < 1.0 / 3.0:
            raise InputError(f"theta must lie in (0, 1/3), got {self.theta}")


@dataclass(frozen=True)
class PhaseAccounting:
    """Where the colors went.

    phase1_colors counts independent-set extractions; phase2_colors counts
    fallback colors (singletons or greedy rounds). nu is the number of
    vertices still uncolored when the extraction phase stopped; for the
    augmented algorithms it sums the per-class values, counting small-class
    vertices as never entering the extraction phase. set_size is the
    extraction size s (None where no single s applies). class_colors, for
    the augmented algorithms, lists total colors per host class in class
    order.
    """

    phase1_colors: int
    phase2_colors: int
    nu: int
    set_size: int | None
    budget_exceeded: bool
    class_colors: tuple[int, ...] | None = None

    @property
    def total_colors(self) -> int:
        return self.phase1_colors + self.phase2_colors


def _log_b(x: float, b: float) -> float:
    return math.log(x) / math.log(b)


def _regime(n: int, p: float) -> tuple[float, float]:
    """Common regime guard: returns (b, L) with L = log_b(np), raising
    RegimeError where the phase formulas degenerate."""
    b = 1.0 / (1.0 - p)
    np_ = n * p
    if np_ <= 1.0:
        raise RegimeError(f"need n*p > 1 for the phase formulas, got n*p={np_:g}")
    L = _log_b(np_, b)
    if L <= 1.0:
        raise RegimeError(
            f"need log_b(np) > 1 for the phase formulas, got {L:g} "
            f"(n={n}, p={p:g})"
        )
    return b, L


def phase_thresholds_constant(n: int, p: float) -> tuple[int, int]:
    """(s, nu) for the constant-p extraction loop."""
    b, L = _regime(n, p)
    s = max(1, math.floor(2.0 * L - 4.0 * _log_b(L, b)))
    nu = math.ceil(n / (L * L))
    return s, nu


def phase_thresholds_small(n: int, p: float) -> tuple[int, int]:
    """(s, nu) for the small-p extraction loop; nu uses ln(np)."""
    b, L = _regime(n, p)
    s = max(1, math.floor(2.0 * L - 4.0 * _log_b(L, b)))
    nu = math.ceil(n / math.log(n * p))
    return s, nu


def _extract_phase(
    g: Graph,
    colors: list[int],
    s: int,
    nu: int,
    budget: SearchBudget,
    next_color: int,
) -> tuple[int, int, int, bool]:
    """Run the extraction loop on the fully uncolored graph.

    Returns (next_color, phase1_colors, uncolored_mask, budget_exceeded).
    """
    uncolored = g.full_mask()
    remaining = g.n
    phase1 = 0
    budget_hit = False
    while remaining >= nu:
        result = find_independent_set_of_size(g, uncolored, s, budget)
        if not result.found:
            budget_hit = result.status == BUDGET_EXCEEDED
            break
        for v in result.vertices:
            colors[v - 1] = next_color
            uncolored &= ~(1 << (v - 1))
        remaining -= s
        next_color += 1
        phase1 += 1
    return next_color, phase1, uncolored, budget_hit


def greedy_color(g: Graph, seed: int) -> Coloring:
    """Repeatedly remove a maximal independent set of the uncolored vertices
    and give it a fresh color. Uses at most max_degree+1 colors."""
    colors = [0] * g.n
    uncolored = g.full_mask()
    color = 0
    while uncolored:
        color += 1
        chosen = greedy_maximal_independent_set(g, uncolored, derive_seed(seed, color))
        for v in chosen:
            colors[v - 1] = color
            uncolored &= ~(1 << (v - 1))
    return Coloring(tuple(colors))


def bollobas_constant(g: Graph, params: AlgoParams) -> tuple[Coloring, PhaseAccounting]:
    """Extraction loop with the constant-p thresholds, then one fresh color
    per leftover vertex."""
    s, nu = phase_thresholds_constant(g.n, params.p)
    colors = [0] * g.n
    next_color, phase1, uncolored, budget_hit = _extract_phase(
        g, colors, s, nu, params.budget, 1
    )
    leftovers = vertices_of(uncolored)
    for v in leftovers:
        colors[v - 1] = next_color
        next_color += 1
    acc = PhaseAccounting(
        phase1_colors=phase1,
        phase2_colors=len(leftovers),
        nu=len(leftovers),
        set_size=s,
        budget_exceeded=budget_hit,
    )
    return Coloring(tuple(colors)), acc


def bollobas_small(g: Graph, params: AlgoParams) -> tuple[Coloring, PhaseAccounting]:
    """Extraction loop with the small-p threshold, then greedy coloring of
    whatever remains."""
    s, nu = phase_thresholds_small(g.n, params.p)
    colors = [0] * g.n
    next_color, phase1, uncolored, budget_hit = _extract_phase(
        g, colors, s, nu, params.budget, 1
    )
    nu_actual = uncolored.bit_count()
    phase2 = 0
    while uncolored:
        chosen = greedy_maximal_independent_set(
            g, uncolored, derive_seed(params.seed, 2, phase2)
        )
        for v in chosen:
            colors[v - 1] = next_color
            uncolored &= ~(1 << (v - 1))
        next_color += 1
        phase2 += 1
    acc = PhaseAccounting(
        phase1_colors=phase1,
        phase2_colors=phase2,
        nu=nu_actual,
        set_size=s,
        budget_exceeded=budget_hit,
    )
    return Coloring(tuple(colors)), acc


def _class_order(coloring: Coloring) -> list[list[int]]:
    """Host color classes as vertex lists, in class-color order."""
    classes = coloring.classes()
    return [classes[c] for c in sorted(classes)]


def _augmented(
    host: HostSpec,
    g: Graph,
    params: AlgoParams,
    threshold: float,
    color_large,
    color_small,
) -> tuple[Coloring, PhaseAccounting]:
    """Shared frame of the two augmented algorithms: split by host classes,
    color each class with fresh colors only."""
    base = host_coloring(host)
    if base.n != g.n:
        raise InputError(f"host covers {base.n} vertices, graph has {g.n}")
    colors = [0] * g.n
    offset = 0
    phase1 = 0
    phase2 = 0
    nu_total = 0
    budget_hit = False
    per_class: list[int] = []
    for members in _class_order(base):
        # classes are disjoint, so sharing the caller's seed is safe and
        # makes the single-class host reduce exactly to the plain algorithm
        class_params = params
        used = 0
        if len(members) >= threshold:
            sub, relabel = induced_subgraph(g, members)
            try:
                sub_coloring, acc = color_large(sub, class_params)
            except RegimeError:
                sub_coloring, acc = None, None
            if sub_coloring is not None:
                for j, c in enumerate(sub_coloring.colors):
                    colors[relabel[j] - 1] = offset + c
                used = sub_coloring.num_colors
                phase1 += acc.phase1_colors
                phase2 += acc.phase2_colors
                nu_total += acc.nu
                budget_hit = budget_hit or acc.budget_exceeded
                offset += used
                per_class.append(used)
                continue
        # small class, or the phase formulas degenerate at this class size
        used = color_small(g, members, colors, offset, class_params)
        phase2 += used
        nu_total += len(members)
        offset += used
        per_class.append(used)
    acc = PhaseAccounting(
        phase1_colors=phase1,
        phase2_colors=phase2,
        nu=nu_total,
        set_size=None,
        budget_exceeded=budget_hit,
        class_colors=tuple(per_class),
    )
    return Coloring(tuple(colors)), acc


def _singleton_fill(g: Graph, members, colors, offset, params) -> int:
    for i, v in enumerate(members, start=1):
        colors[v - 1] = offset + i
    return len(members)


def _greedy_fill(g: Graph, members, colors, offset, params) -> int:
    sub, relabel = induced_subgraph(g, members)
    sub_coloring = greedy_color(sub, params.seed)
    for j, c in enumerate(sub_coloring.colors):
        colors[relabel[j] - 1] = offset + c
    return sub_coloring.num_colors


def augmented_color_constant(
    host: HostSpec, g: Graph, params: AlgoParams
) -> tuple[Coloring, PhaseAccounting]:
    """Partition by host classes; classes of size at least
    g(n) = beta^((1+eps/2)^(-1/2)) (beta = n / #classes) get the constant-p
    extraction algorithm on their induced subgraph, every vertex of a small
    class gets its own fresh color."""
    chi = host_coloring(host).num_colors
    beta = g.n / chi
    threshold = beta ** ((1.0 + params.epsilon / 2.0) ** -0.5)
    return _augmented(host, g, params, threshold, bollobas_constant, _singleton_fill)


def augmented_color_small(
    host: HostSpec, g: Graph, params: AlgoParams
) -> tuple[Coloring, PhaseAccounting]:
    """Partition by host classes; classes of size at least
    g(n) = beta / ln(n) run the small-p extraction algorithm, small classes
    are colored greedily, each with fresh colors."""
    chi = host_coloring(host).num_colors
    beta = g.n / chi
    threshold = beta / math.log(g.n) if g.n >= 2 else math.inf
    return _augmented(host, g, params, threshold, bollobas_small, _greedy_fill)


# -- exact chromatic number ------------------------------------------------


def _greedy_clique(g: Graph) -> int:
    """Size of a greedily grown clique; a cheap lower bound for chi."""
    best = 1 if g.n else 0
    degs = g.degrees
    for start in range(1, g.n + 1):
        clique = [start]
        pool = g.rows[start - 1]
        while pool:
            pick, pick_d = -1, -1
            m = pool
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length()
                if degs[v - 1] > pick_d:
                    pick, pick_d = v, degs[v - 1]
            clique.append(pick)
            pool &= g.rows[pick - 1]
        best = max(best, len(clique))
    return best


def _dsatur_witness(g: Graph) -> Coloring:
    """Greedy DSATUR coloring: an upper bound and starting witness."""
    n = g.n
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v_best, key_best = -1, (-1, -1)
        for v in range(1, n + 1):
            if colors[v - 1]:
                continue
            key = (len(neighbor_colors[v - 1]), g.degrees[v - 1])
            if key > key_best:
                v_best, key_best = v, key
        c = 1
        while c in neighbor_colors[v_best - 1]:
            c += 1
        colors[v_best - 1] = c
        row = g.rows[v_best - 1]
        while row:
            low = row & -row
            row ^= low
            neighbor_colors[low.bit_length() - 1].add(c)
    return Coloring(tuple(colors))


def _try_k_coloring(g: Graph, k: int) -> Coloring | None:
    """Complete DSATUR-ordered backtracking for a proper k-coloring.

    New colors are introduced only as max_used+1, which prunes color
    permutations without losing completeness.
    """
    n = g.n
    colors = [0] * n

    def neighbor_color_set(v: int) -> set[int]:
        out = set()
        row = g.rows[v - 1]
        while row:
            low = row & -row
            row ^= low
            c = colors[low.bit_length() - 1]
            if c:
                out.add(c)
        return out

    def pick_vertex() -> int:
        v_best, key_best = -1, (-1, -1)
        for v in range(1, n + 1):
            if colors[v - 1]:
                continue
            key = (len(neighbor_color_set(v)), g.degrees[v - 1])
            if key > key_best:
                v_best, key_best = v, key
        return v_best

    def rec(done: int, max_used: int) -> bool:
        if done == n:
            return True
        v = pick_vertex()
        banned = neighbor_color_set(v)
        for c in range(1, min(max_used + 1, k) + 1):
            if c in banned:
                continue
            colors[v - 1] = c
            if rec(done + 1, max(max_used, c)):
                return True
            colors[v - 1] = 0
        return False

    if rec(0, 0):
        return Coloring(tuple(colors))
    return None


def exact_chromatic(g: Graph, cap: int = limits.EXACT_CHROMATIC_CAP) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness, by iterative deepening on k
    from a clique lower bound; each k-colorability test is a complete
    backtracking search, so the first success proves minimality."""
    if g.n > cap:
        raise SizeLimitError(
            f"exact chromatic number capped at {cap} vertices, got {g.n}"
        )
    if g.edge_count == 0:
        return 1, Coloring((1,) * g.n)
    witness = _dsatur_witness(g)
    upper = witness.num_colors
    lower = max(2, _greedy_clique(g))
    for k in range(lower, upper):
        attempt = _try_k_coloring(g, k)
        if attempt is not None:
            return k, attempt
    return upper, witness
