"""Acceptance suite: one test per criterion, each printing a PASS line as
its final step (a failed assertion surfaces as the FAIL line via pytest).

The headline guarantees behind these algorithms are asymptotic, so the
checks here are property-based (properness, exact small-scale oracles,
accounting identities, determinism) plus finite-n trend and concentration
measurements with explicit tolerances. Single-n inequality assertions
against the asymptotic bounds are deliberately absent.
"""

import itertools
import math

import pytest

from augcolor import (
    AlgoParams,
    ExperimentConfig,
    HostSpec,
    augment,
    augmented_color_constant,
    augmented_color_small,
    bollobas_constant,
    bollobas_small,
    build_graph,
    class_distribution_check,
    complete_multipartite,
    concentration_experiment,
    eqN1_bound,
    exact_chromatic,
    greedy_bound,
    greedy_color,
    host_graph,
    induced_subgraph,
    is_proper_coloring,
    k0,
    k0_sandwich,
    lower_bound_experiment,
    run_campaign,
    sample_gnp,
    union,
)
from augcolor.harness import write_trials_csv, write_summary_json
from augcolor.randgraph import derive_seed

MASTER = 20260810


def report(num: int, name: str) -> None:
    print(f"ACCEPTANCE {num:02d} {name}: PASS")


# -- shared fuzz corpus (criteria 1 and 10) ----------------------------------

FUZZ_SIZES = (30, 50, 70, 90, 120, 160, 210, 280, 380, 500)
FUZZ_P = (0.1, 0.3, 0.5, 0.8, "n^-0.25")
FUZZ_HOSTS = ("empty", "complete", "multipartite", "random")
FUZZ_ALGS = ("greedy", "bollobas-const", "bollobas-small", "aug-const", "aug-small")

_host_cache: dict = {}


def fuzz_host(kind: str, n: int) -> HostSpec:
    key = (kind, n)
    if key not in _host_cache:
        if kind == "empty":
            spec = HostSpec.multipartite([n])
        elif kind == "complete":
            spec = HostSpec.multipartite([1] * n)
        elif kind == "multipartite":
            base, extra = divmod(n, 4)
            spec = HostSpec.multipartite([base + 1] * extra + [base] * (4 - extra))
        else:  # random host with its greedy coloring as the partition
            g = sample_gnp(n, 0.3, derive_seed(MASTER, 7, n))
            spec = HostSpec.explicit(g, greedy_color(g, derive_seed(MASTER, 8, n)))
        _host_cache[key] = spec
    return _host_cache[key]


def fuzz_instances():
    """(index, algorithm, host spec, n, p, augmented graph) for the corpus."""
    combos = itertools.product(FUZZ_ALGS, FUZZ_HOSTS, FUZZ_P, FUZZ_SIZES)
    for index, (alg, host_kind, p_spec, n) in enumerate(combos):
        p = float(n) ** -0.25 if isinstance(p_spec, str) else p_spec
        host = fuzz_host(host_kind, n)
        g = augment(host_graph(host), p, derive_seed(MASTER, 1, index))
        yield index, alg, host, n, p, g


def run_fuzz_algorithm(alg, host, g, p, seed):
    params = AlgoParams(p=p, seed=seed)
    if alg == "greedy":
        return greedy_color(g, seed)
    if alg == "bollobas-const":
        return bollobas_constant(g, params)[0]
    if alg == "bollobas-small":
        return bollobas_small(g, params)[0]
    if alg == "aug-const":
        return augmented_color_constant(host, g, params)[0]
    return augmented_color_small(host, g, params)[0]


def test_criterion_01_properness_universal():
    """All five algorithms produce proper colorings on >= 1000 seeded
    instances; zero violations tolerated."""
    runs = 0
    for index, alg, host, n, p, g in fuzz_instances():
        coloring = run_fuzz_algorithm(alg, host, g, p, derive_seed(MASTER, 2, index))
        assert is_proper_coloring(g, coloring), (
            f"improper coloring: alg={alg}, host={host.kind}, n={n}, p={p}, "
            f"instance index {index}"
        )
        assert coloring.num_colors >= 1
        runs += 1
    assert runs >= 1000
    report(1, f"properness on {runs} fuzz instances")


def chi_by_enumeration(g) -> int:
    if g.n == 1:
        return 1
    edge_list = list(g.edges())
    for k in range(1, g.n + 1):
        for rest in itertools.product(range(1, k + 1), repeat=g.n - 1):
            assignment = (1,) + rest
            if all(assignment[u - 1] != assignment[v - 1] for u, v in edge_list):
                return k
    return g.n


def test_criterion_02_exact_oracle_equivalence(c5, petersen):
    """exact_chromatic agrees with minimal-k exhaustive enumeration on 200
    random graphs with n <= 7, and on the named reference graphs."""
    assert exact_chromatic(c5)[0] == 3
    k33 = build_graph(6, [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])
    assert exact_chromatic(k33)[0] == 2
    assert exact_chromatic(petersen)[0] == 3
    checked = 0
    for i in range(200):
        n = 2 + (i % 6)  # 2..7
        p = (0.15, 0.35, 0.55, 0.75)[i % 4]
        g = sample_gnp(n, p, derive_seed(MASTER, 3, i))
        k, witness = exact_chromatic(g)
        assert k == chi_by_enumeration(g), f"instance {i}: n={n}, p={p}"
        assert is_proper_coloring(g, witness) and witness.num_colors == k
        checked += 1
    assert checked == 200
    report(2, "exact oracle vs exhaustive enumeration (200 instances)")


def test_criterion_03_divide_and_color():
    """chi(g union h) <= sum over an independent partition of chi(h[S]),
    exactly; equality when g is complete multipartite over the partition."""
    import random as _random

    rnd = _random.Random(MASTER)
    for i in range(100):
        n = rnd.randint(4, 10)
        g = sample_gnp(n, rnd.uniform(0.2, 0.8), derive_seed(MASTER, 4, i))
        h = sample_gnp(n, rnd.uniform(0.2, 0.8), derive_seed(MASTER, 5, i))
        # any proper coloring of g partitions [n] into g-independent classes
        partition = greedy_color(g, derive_seed(MASTER, 6, i)).classes().values()
        total = 0
        for members in partition:
            sub, _ = induced_subgraph(h, members)
            total += exact_chromatic(sub)[0]
        assert exact_chromatic(union(g, h))[0] <= total

        # equality case: g complete multipartite with parts = the partition
        sizes = []
        left = n
        while left:
            take = rnd.randint(1, left)
            sizes.append(take)
            left -= take
        gm = complete_multipartite(sizes)
        total = 0
        start = 1
        for size in sizes:
            sub, _ = induced_subgraph(h, range(start, start + size))
            total += exact_chromatic(sub)[0]
            start += size
        assert exact_chromatic(union(gm, h))[0] == total
    report(3, "divide-and-color inequality and equality (100 pairs)")


SANDWICH_GRID = [
    (n, p) for n in (10**5, 10**6, 10**7) for p in (0.3, 0.5, 0.7)
]


@pytest.mark.parametrize("n,p", SANDWICH_GRID)
def test_criterion_04_k0_sandwich_grid(n, p):
    """Whenever k0 is defined on the grid, lower <= k0 <= upper."""
    value = k0(n, p)
    if value is not None:
        lower, upper = k0_sandwich(n, p)
        assert lower <= value <= upper, (
            f"sandwich violated at n={n}, p={p}: k0={value}, "
            f"lower={lower:.3f}, upper={upper:.3f}"
        )
    report(4, f"k0 sandwich at n={n}, p={p}")


def test_criterion_04_k0_exact_confirmation():
    """k0(1e6, 0.5) = 28, confirmed in exact integer arithmetic at 28/29."""
    n = 10**6
    assert k0(n, 0.5) == 28
    assert math.comb(n, 28) > n**4 * 2 ** math.comb(28, 2)
    assert math.comb(n, 29) <= n**4 * 2 ** math.comb(29, 2)
    report(4, "k0(1e6, 0.5) = 28 exact confirmation")


def test_criterion_05_k0_degenerate():
    """The defining set is empty at desk scale."""
    assert k0(1000, 0.5) is None
    report(5, "k0(1000, 0.5) is empty")


@pytest.mark.parametrize("parts,p", [
    ([25] * 4, 0.3), ([25] * 4, 0.5), ([50] * 20, 0.3), ([50] * 20, 0.5),
])
def test_criterion_06_class_distribution(parts, p):
    """Within host color classes the augmented graph shows binomial random
    edges: per-class mean edge count within 4 sigma over 400 trials."""
    host = HostSpec.multipartite(parts)
    result = class_distribution_check(
        host, p, trials=400, seed=derive_seed(MASTER, 9, len(parts), int(p * 10))
    )
    for row in result.rows:
        assert row.within_4_sigma, (
            f"class {row.class_index}: mean {row.empirical_mean} vs "
            f"{row.expected_mean} +- 4*{row.sigma_mean}"
        )
    report(6, f"class edge distribution, {len(parts)} parts, p={p}")


def test_criterion_07_concentration():
    """Constant-p algorithm at n=500, p=0.5, 200 trials: empirical std is
    within the bounded-differences scale sqrt(n), and empirical tail
    fractions stay under the clamped tail + 3 sigma at every grid t."""
    result = concentration_experiment(
        500, 0.5, trials=200, seed=derive_seed(MASTER, 10)
    )
    assert result.std <= math.sqrt(500), f"std {result.std} > sqrt(500)"
    for t, frac, _raw, clamped in result.grid:
        slack = 3 * math.sqrt(clamped * (1 - clamped) / result.trials)
        assert frac <= clamped + slack + 1e-12, f"tail at t={t}"
    report(7, f"concentration: std={result.std:.2f} <= sqrt(500)=22.36")


def test_criterion_08_lower_bound_machinery():
    """Markov bound never understates the 2000-trial frequency beyond 3
    sigma; alpha only shrinks under augmentation; chi >= n/alpha holds
    exactly where exact chi is computable."""
    host = HostSpec.multipartite([5] * 4)
    result = lower_bound_experiment(
        host, 0.5, trials=2000, seed=derive_seed(MASTER, 11)
    )
    assert result.markov_bound < 1
    sigma = math.sqrt(result.markov_bound * (1 - result.markov_bound) / 2000)
    assert result.freq_alpha_ge_k <= result.markov_bound + 3 * sigma
    assert result.alpha_monotone_ok

    small = HostSpec.multipartite([3] * 4)  # n=12: exact chi per trial
    result12 = lower_bound_experiment(
        small, 0.5, trials=2000, seed=derive_seed(MASTER, 12)
    )
    assert result12.n_hk == 0
    assert result12.freq_alpha_ge_k == 0.0  # alpha can only shrink
    assert result12.alpha_monotone_ok
    assert result12.chi_floor_ok is True
    report(8, "Markov lower-bound machinery over 2 x 2000 trials")


def test_criterion_09_constant_p_trend():
    """Empty host, p=0.5, 50 trials per n in {500,1000,2000,4000}: the mean
    ratio of extraction-algorithm colors to n ln2/(2 ln n) is non-increasing
    within 5 percent, and the accounting identity is exact on every trial.
    (The asymptotic (1+eps) inequality itself is NOT asserted at these n.)"""
    config = ExperimentConfig(
        algorithm="bollobas-const",
        host="empty",
        p=0.5,
        n_grid=(500, 1000, 2000, 4000),
        trials=50,
        seed=MASTER,
        timing=False,
    )
    result = run_campaign(config)
    for record in result.records:
        assert record.colors_used == record.phase1_colors + record.phase2_colors
    ratios = []
    for n in config.n_grid:
        cell = [r.colors_used for r in result.records if r.n == n]
        assert len(cell) == 50
        bound = eqN1_bound(n, 0.5, 1)  # = n ln2 / (2 ln n)
        assert bound == pytest.approx(n * math.log(2) / (2 * math.log(n)))
        ratios.append((sum(cell) / len(cell)) / bound)
    for earlier, later in zip(ratios, ratios[1:]):
        assert later <= earlier * 1.05, f"ratio rose: {ratios}"
    report(9, "constant-p ratio trend " + "->".join(f"{r:.2f}" for r in ratios))


def test_criterion_10_greedy_bound_shape():
    """Greedy stays within max_degree+1 on the fuzz corpus, and its mean
    ratio to n ln(b)/ln(np) is non-increasing within 5 percent across
    n in {1000, 2000, 4000} at p = n^-0.25."""
    checked = 0
    for index, alg, host, n, p, g in fuzz_instances():
        if alg != "greedy":
            continue
        coloring = greedy_color(g, derive_seed(MASTER, 2, index))
        assert coloring.num_colors <= g.max_degree() + 1
        checked += 1
    assert checked == len(FUZZ_HOSTS) * len(FUZZ_P) * len(FUZZ_SIZES)

    config = ExperimentConfig(
        algorithm="greedy",
        host="empty",
        p="n^-0.25",
        n_grid=(1000, 2000, 4000),
        trials=50,
        seed=MASTER + 1,
        timing=False,
    )
    result = run_campaign(config)
    ratios = []
    for n in config.n_grid:
        cell = [r.colors_used for r in result.records if r.n == n]
        ratios.append((sum(cell) / len(cell)) / greedy_bound(n, float(n) ** -0.25))
    for earlier, later in zip(ratios, ratios[1:]):
        assert later <= earlier * 1.05, f"ratio rose: {ratios}"
    report(
        10,
        f"greedy within degree bound ({checked} instances), ratio trend "
        + "->".join(f"{r:.3f}" for r in ratios),
    )


def test_criterion_11_campaign_determinism(tmp_path):
    """Same master seed implies byte-identical campaign outputs, whether the
    trials run serially or on four threads (timing disabled, as wall-clock
    timing is the one legitimately nondeterministic field)."""
    outputs = []
    for run_index, workers in enumerate((1, 4, 1)):
        config = ExperimentConfig(
            algorithm="aug-const",
            host="parts:4",
            p=0.5,
            n_grid=(60, 120),
            trials=10,
            seed=MASTER + 2,
            workers=workers,
            timing=False,
        )
        result = run_campaign(config)
        trials_path = tmp_path / f"trials_{run_index}.csv"
        summary_path = tmp_path / f"summary_{run_index}.json"
        write_trials_csv(result.records, trials_path)
        write_summary_json(result.summary, summary_path)
        outputs.append((trials_path.read_bytes(), summary_path.read_bytes()))
    assert outputs[0] == outputs[1] == outputs[2]
    report(11, "byte-identical campaign outputs across reruns and threads")
