"""Seeded Monte Carlo campaigns over the coloring algorithms.

A campaign is fully determined by its config: per-trial seeds derive from
(master seed, n, trial index), so adding grid points or running trials
concurrently never perturbs existing cells. Every produced coloring is
validated before it is recorded; an improper one aborts the campaign with
the offending seed (it would be a bug, not noise).

Wall-clock runtime is the one nondeterministic field. Campaigns built for
byte-identical reproduction set timing=False, which records 0.0 for every
trial; everything else in the CSV/JSON output is bit-reproducible.
"""

from __future__ import annotations

import json
import math
import os
import re
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import limits
from .bounds import (
    BoundReport,
    alpha_threshold_k,
    build_bound_report,
    chromatic_lower_from_alpha,
    markov_alpha_bound,
    mcdiarmid_tail,
)
from .coloring import (
    AlgoParams,
    PhaseAccounting,
    augmented_color_constant,
    augmented_color_small,
    bollobas_constant,
    bollobas_small,
    exact_chromatic,
    greedy_color,
)
from .errors import CampaignError, DomainError, InputError, SizeLimitError
from .graph import Coloring, Graph, is_proper_coloring
from .hosts import HostSpec, count_independent_sets, host_coloring, host_graph, parse_host_spec
from .indep import SearchBudget, maximum_independent_set
from .randgraph import RNG_NAME, augment, derive_seed

__all__ = [
    "ALGORITHMS",
    "ExperimentConfig",
    "TrialRecord",
    "CampaignResult",
    "load_config",
    "host_for_n",
    "resolve_p",
    "run_trial",
    "run_campaign",
    "write_trials_csv",
    "write_summary_json",
    "concentration_experiment",
    "class_distribution_check",
    "lower_bound_experiment",
]

ALGORITHMS = ("greedy", "bollobas-const", "bollobas-small", "aug-const", "aug-small")

CSV_HEADER = "n,p,alg,seed,colors,phase1_colors,phase2_colors,nu,runtime_ms,budget_exceeded,alpha"

_SYMBOLIC_P = re.compile(r"^n\^(-?\d+(?:\.\d+)?)$")


@dataclass(frozen=True)
class ExperimentConfig:
    algorithm: str
    n_grid: tuple[int, ...]
    trials: int
    p: float | str
    host: str = "empty"
    epsilon: float = 0.2
    theta: float | None = None
    seed: int = 1
    is_node_limit: int = limits.DEFAULT_IS_NODE_LIMIT
    workers: int = 1
    compute_alpha: bool = False
    timing: bool = True

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise InputError(
                f"unknown algorithm {self.algorithm!r}, expected one of {ALGORITHMS}"
            )
        if self.trials < 1:
            raise InputError(f"need trials >= 1, got {self.trials}")
        if not self.n_grid:
            raise InputError("n_grid must be nonempty")
        if list(self.n_grid) != sorted(set(self.n_grid)):
            raise InputError(f"n_grid must be strictly increasing, got {self.n_grid}")
        if self.workers < 1:
            raise InputError(f"need workers >= 1, got {self.workers}")
        resolve_p(self.p, self.n_grid[0])  # fail early on a bad p spec


@dataclass(frozen=True)
class TrialRecord:
    n: int
    p: float
    algorithm: str
    seed: int
    colors_used: int
    phase1_colors: int
    phase2_colors: int
    nu: int
    runtime_ms: float
    is_proper: bool
    budget_exceeded: bool
    alpha: int | None = None
    rng: str = RNG_NAME

    def csv_row(self) -> str:
        alpha = "" if self.alpha is None else str(self.alpha)
        return (
            f"{self.n},{self.p!r},{self.algorithm},{self.seed},{self.colors_used},"
            f"{self.phase1_colors},{self.phase2_colors},{self.nu},"
            f"{self.runtime_ms:.3f},{int(self.budget_exceeded)},{alpha}"
        )


@dataclass(frozen=True)
class CampaignResult:
    config: ExperimentConfig
    records: tuple[TrialRecord, ...]
    summary: tuple[dict, ...]


def resolve_p(p_spec: float | str, n: int) -> float:
    """Constant probability, or a symbolic n^-theta evaluated at n."""
    if isinstance(p_spec, str):
        match = _SYMBOLIC_P.match(p_spec.strip())
        if not match:
            raise InputError(
                f"bad p spec {p_spec!r}: use a number or the form n^-0.25"
            )
        return float(n) ** float(match.group(1))
    p = float(p_spec)
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0,1], got {p}")
    return p


def host_for_n(family: str, n: int) -> HostSpec:
    """Instantiate a host family at vertex count n.

    Families: `empty` (no edges, one class), `complete` (K_n), `parts:k`
    (complete multipartite with k near-equal parts), or any fixed host spec
    string (multipartite:..., dimacs:..., explicit:...) whose size must then
    match n.
    """
    if family == "empty":
        return HostSpec.multipartite([n])
    if family == "complete":
        return HostSpec.multipartite([1] * n)
    if family.startswith("parts:"):
        k = int(family.split(":", 1)[1])
        if not 1 <= k <= n:
            raise InputError(f"parts:{k} needs 1 <= k <= n={n}")
        base, extra = divmod(n, k)
        return HostSpec.multipartite([base + 1] * extra + [base] * (k - extra))
    spec = parse_host_spec(family)
    if spec.n != n:
        raise InputError(f"host {family!r} has {spec.n} vertices, grid point wants {n}")
    return spec


def _greedy_accounting(coloring: Coloring, n: int) -> PhaseAccounting:
    # Greedy is all fallback: no extraction phase ever ran.
    return PhaseAccounting(
        phase1_colors=0,
        phase2_colors=coloring.num_colors,
        nu=n,
        set_size=None,
        budget_exceeded=False,
    )


def run_algorithm(
    algorithm: str, host: HostSpec, g: Graph, params: AlgoParams
) -> tuple[Coloring, PhaseAccounting]:
    if algorithm == "greedy":
        coloring = greedy_color(g, params.seed)
        return coloring, _greedy_accounting(coloring, g.n)
    if algorithm == "bollobas-const":
        return bollobas_constant(g, params)
    if algorithm == "bollobas-small":
        return bollobas_small(g, params)
    if algorithm == "aug-const":
        return augmented_color_constant(host, g, params)
    if algorithm == "aug-small":
        return augmented_color_small(host, g, params)
    raise InputError(f"unknown algorithm {algorithm!r}")


def run_trial(config: ExperimentConfig, n: int, trial: int) -> TrialRecord:
    seed = derive_seed(config.seed, n, trial)
    p = resolve_p(config.p, n)
    host = host_for_n(config.host, n)
    g = augment(host_graph(host), p, seed)
    params = AlgoParams(
        p=p,
        epsilon=config.epsilon,
        theta=config.theta,
        seed=seed,
        budget=SearchBudget(config.is_node_limit),
    )
    start = time.perf_counter()
    coloring, acc = run_algorithm(config.algorithm, host, g, params)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if not is_proper_coloring(g, coloring):
        raise CampaignError(
            f"improper coloring from {config.algorithm} at n={n}, trial={trial}, "
            f"seed={seed}",
            seed=seed,
        )
    alpha = None
    if config.compute_alpha:
        alpha = len(maximum_independent_set(g))
    return TrialRecord(
        n=n,
        p=p,
        algorithm=config.algorithm,
        seed=seed,
        colors_used=coloring.num_colors,
        phase1_colors=acc.phase1_colors,
        phase2_colors=acc.phase2_colors,
        nu=acc.nu,
        runtime_ms=elapsed_ms if config.timing else 0.0,
        is_proper=True,
        budget_exceeded=acc.budget_exceeded,
        alpha=alpha,
    )


def _bound_for(algorithm: str, report: BoundReport | None) -> tuple[str, float | None]:
    if report is None:
        return ("none", None)
    if algorithm in ("bollobas-const", "aug-const"):
        return ("eqN1_bound", report.eqN1_bound)
    if algorithm in ("bollobas-small", "aug-small"):
        return ("small_p_bound", report.small_p_bound)
    return ("greedy_bound", report.greedy_bound)


def _summarize(config: ExperimentConfig, records: list[TrialRecord]) -> list[dict]:
    rows = []
    for n in config.n_grid:
        cell = [r for r in records if r.n == n]
        p = resolve_p(config.p, n)
        chi_h = host_coloring(host_for_n(config.host, n)).num_colors
        try:
            report = build_bound_report(n, p, chi_h)
        except (DomainError, InputError):
            report = None
        colors = [r.colors_used for r in cell]
        mean = statistics.fmean(colors)
        std = statistics.stdev(colors) if len(colors) > 1 else 0.0
        bound_kind, bound_value = _bound_for(config.algorithm, report)
        rows.append(
            {
                "n": n,
                "alg": config.algorithm,
                "p": p,
                "chi_h": chi_h,
                "trials": len(cell),
                "mean_colors": mean,
                "std_colors": std,
                "bound_kind": bound_kind,
                "bound_value": bound_value,
                "ratio_to_bound": (mean / bound_value) if bound_value else None,
                "budget_exceeded_rate": sum(r.budget_exceeded for r in cell)
                / len(cell),
                "rng": RNG_NAME,
                "bound_report": report.as_dict() if report else None,
            }
        )
    return rows


def run_campaign(config: ExperimentConfig) -> CampaignResult:
    """One TrialRecord per (n, trial), plus per-n summary rows.

    Deterministic given the config; trials may run on several threads, the
    records are keyed and sorted by (n, trial) so the output never depends
    on scheduling.
    """
    tasks = [(n, t) for n in config.n_grid for t in range(config.trials)]
    if config.workers == 1:
        results = {key: run_trial(config, *key) for key in tasks}
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = {key: pool.submit(run_trial, config, *key) for key in tasks}
            results = {key: fut.result() for key, fut in futures.items()}
    records = [results[key] for key in sorted(results)]
    return CampaignResult(
        config=config,
        records=tuple(records),
        summary=tuple(_summarize(config, records)),
    )


def write_trials_csv(records, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(CSV_HEADER + "\n")
        for record in records:
            fh.write(record.csv_row() + "\n")


def write_summary_json(summary, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(list(summary), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_config(path: str | os.PathLike, **overrides) -> ExperimentConfig:
    """Read an ExperimentConfig from a JSON or TOML file; keyword overrides
    win over file values."""
    text_path = str(path)
    if text_path.endswith(".toml"):
        try:
            import tomllib  # py311+
        except ModuleNotFoundError:  # pragma: no cover - py310 path
            import tomli as tomllib
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    data.update({k: v for k, v in overrides.items() if v is not None})
    if "n_grid" in data:
        data["n_grid"] = tuple(int(x) for x in data["n_grid"])
    try:
        return ExperimentConfig(**data)
    except TypeError as exc:
        raise InputError(f"bad experiment config {path}: {exc}") from exc


# -- focused experiments -----------------------------------------------------


@dataclass(frozen=True)
class ConcentrationReport:
    n: int
    p: float
    trials: int
    algorithm: str
    mean: float
    std: float
    # rows (t, empirical fraction of |X - mean| >= t, raw tail, clamped tail)
    grid: tuple[tuple[float, float, float, float], ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "trials": self.trials,
            "algorithm": self.algorithm,
            "mean": self.mean,
            "std": self.std,
            "grid": [list(row) for row in self.grid],
        }


def concentration_experiment(
    n: int,
    p: float,
    trials: int,
    seed: int,
    algorithm: str = "bollobas-const",
) -> ConcentrationReport:
    """Measure how tightly the color count of the chosen algorithm on
    G(n,p) concentrates, next to the bounded-differences tail 2exp(-2t^2/n).
    """
    if trials < 100:
        raise InputError(f"need at least 100 trials, got {trials}")
    config = ExperimentConfig(
        algorithm=algorithm, n_grid=(n,), trials=trials, p=p, seed=seed, timing=False
    )
    counts = [r.colors_used for r in run_campaign(config).records]
    mean = statistics.fmean(counts)
    std = statistics.stdev(counts)
    grid = []
    for t in range(0, math.ceil(2.0 * math.sqrt(n)) + 1):
        frac = sum(abs(x - mean) >= t for x in counts) / trials
        raw = mcdiarmid_tail(float(t), n)
        grid.append((float(t), frac, raw, min(1.0, raw)))
    return ConcentrationReport(
        n=n, p=p, trials=trials, algorithm=algorithm, mean=mean, std=std,
        grid=tuple(grid),
    )


@dataclass(frozen=True)
class ClassDistributionRow:
    class_index: int
    size: int
    pairs: int
    expected_mean: float
    empirical_mean: float
    sigma_mean: float
    within_4_sigma: bool


@dataclass(frozen=True)
class ClassDistributionReport:
    host: str
    p: float
    trials: int
    rows: tuple[ClassDistributionRow, ...]

    @property
    def all_within(self) -> bool:
        return all(r.within_4_sigma for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "host": self.host,
            "p": self.p,
            "trials": self.trials,
            "all_within": self.all_within,
            "rows": [vars(r) for r in self.rows],
        }


def _edges_inside(g: Graph, mask: int) -> int:
    total = 0
    m = mask
    while m:
        low = m & -m
        m ^= low
        total += (g.rows[low.bit_length() - 1] & mask).bit_count()
    return total // 2


def class_distribution_check(
    host: HostSpec, p: float, trials: int, seed: int
) -> ClassDistributionReport:
    """Host color classes are independent in the host, so inside a class the
    augmented graph shows only random edges: the per-class edge count must
    behave binomially with mean C(|S|,2) * p. The verdict compares the
    empirical mean against 4 standard errors of the mean."""
    base = host_coloring(host)
    h = host_graph(host)
    class_masks = [mask for _, mask in sorted(base.class_masks().items())]
    sums = [0] * len(class_masks)
    for t in range(trials):
        g = augment(h, p, derive_seed(seed, t))
        for i, mask in enumerate(class_masks):
            sums[i] += _edges_inside(g, mask)
    rows = []
    for i, mask in enumerate(class_masks):
        size = mask.bit_count()
        pairs = size * (size - 1) // 2
        expected = pairs * p
        sigma_mean = math.sqrt(pairs * p * (1.0 - p) / trials)
        empirical = sums[i] / trials
        ok = (
            abs(empirical - expected) <= 4.0 * sigma_mean
            if sigma_mean > 0.0
            else empirical == expected
        )
        rows.append(
            ClassDistributionRow(
                class_index=i + 1,
                size=size,
                pairs=pairs,
                expected_mean=expected,
                empirical_mean=empirical,
                sigma_mean=sigma_mean,
                within_4_sigma=ok,
            )
        )
    return ClassDistributionReport(
        host=host.kind, p=p, trials=trials, rows=tuple(rows)
    )


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    p: float
    trials: int
    chi_h: int
    k: int
    n_hk: int
    markov_bound: float
    freq_alpha_ge_k: float
    alpha_host: int
    alpha_monotone_ok: bool
    chi_floor_ok: bool | None  # None when exact chi was not computed
    mean_alpha: float

    def as_dict(self) -> dict:
        return vars(self).copy()


def lower_bound_experiment(
    host: HostSpec,
    p: float,
    trials: int,
    seed: int,
    compute_chi: bool | None = None,
) -> LowerBoundReport:
    """Check the Markov estimate against reality: how often does the
    augmented graph keep an independent set of the threshold size k, and
    does the chi >= n/alpha floor hold per trial (exact chi only for small
    hosts)."""
    h = host_graph(host)
    if h.n > limits.EXACT_MIS_CAP:
        raise SizeLimitError(
            f"lower-bound experiment needs exact alpha, capped at "
            f"{limits.EXACT_MIS_CAP} vertices, host has {h.n}"
        )
    if compute_chi is None:
        compute_chi = h.n <= 12
    chi_h = host_coloring(host).num_colors
    k = alpha_threshold_k(h.n, p, chi_h)
    n_hk = count_independent_sets(host, k)
    bound = markov_alpha_bound(n_hk, p, k)
    alpha_host = len(maximum_independent_set(h))
    hits = 0
    alphas = []
    monotone_ok = True
    chi_floor_ok: bool | None = True if compute_chi else None
    for t in range(trials):
        g = augment(h, p, derive_seed(seed, t))
        alpha = len(maximum_independent_set(g))
        alphas.append(alpha)
        if alpha >= k:
            hits += 1
        if alpha > alpha_host:
            monotone_ok = False
        if compute_chi:
            chi, _ = exact_chromatic(g)
            if chi < chromatic_lower_from_alpha(g.n, alpha) - 1e-12:
                chi_floor_ok = False
    return LowerBoundReport(
        n=h.n,
        p=p,
        trials=trials,
        chi_h=chi_h,
        k=k,
        n_hk=n_hk,
        markov_bound=bound,
        freq_alpha_ge_k=hits / trials,
        alpha_host=alpha_host,
        alpha_monotone_ok=monotone_ok,
        chi_floor_ok=chi_floor_ok,
        mean_alpha=statistics.fmean(alphas),
    )
