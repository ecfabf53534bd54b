import itertools
import random

import pytest

from augcolor import (
    InputError,
    SizeLimitError,
    build_graph,
    complete_multipartite,
    find_independent_set_of_size,
    greedy_maximal_independent_set,
    is_independent,
    maximum_independent_set,
    sample_gnp,
)
from augcolor.indep import BUDGET_EXCEEDED, EXHAUSTED, FOUND, SearchBudget

from conftest import complete_graph


def assert_maximal(g, chosen, candidates):
    assert is_independent(g, chosen)
    for v in candidates:
        if v not in chosen:
            assert not is_independent(g, set(chosen) | {v})


def test_greedy_on_empty_graph_takes_everything():
    g = build_graph(6, [])
    assert greedy_maximal_independent_set(g, range(1, 7), order_seed=1) == set(range(1, 7))


def test_greedy_on_clique_takes_one():
    g = complete_graph(7)
    assert len(greedy_maximal_independent_set(g, range(1, 8), order_seed=3)) == 1


def test_greedy_on_c5_is_maximal_pair(c5):
    # oracle: explicit maximality check; every maximal set of C5 has size 2
    chosen = greedy_maximal_independent_set(c5, range(1, 6), order_seed=9)
    assert len(chosen) == 2
    assert_maximal(c5, chosen, range(1, 6))


def test_greedy_needs_candidates(c5):
    with pytest.raises(InputError):
        greedy_maximal_independent_set(c5, [], order_seed=0)


def test_greedy_is_deterministic_given_seed():
    g = sample_gnp(40, 0.3, seed=5)
    a = greedy_maximal_independent_set(g, range(1, 41), order_seed=17)
    b = greedy_maximal_independent_set(g, range(1, 41), order_seed=17)
    assert a == b


def test_greedy_respects_candidate_set():
    g = sample_gnp(30, 0.4, seed=6)
    candidates = set(range(1, 16))
    chosen = greedy_maximal_independent_set(g, candidates, order_seed=2)
    assert chosen <= candidates
    assert_maximal(g, chosen, candidates)


def test_greedy_meets_turan_floor():
    # maximal independent sets have size >= n / (max_degree + 1)
    rnd = random.Random(3)
    for _ in range(20):
        n = rnd.randint(5, 60)
        g = sample_gnp(n, rnd.uniform(0.1, 0.8), seed=rnd.getrandbits(32))
        chosen = greedy_maximal_independent_set(g, range(1, n + 1), rnd.getrandbits(32))
        assert len(chosen) >= n / (g.max_degree() + 1)


def test_find_in_triangle_exhausts(triangle):
    result = find_independent_set_of_size(triangle, [1, 2, 3], 2)
    assert result.status == EXHAUSTED
    assert result.vertices is None


def test_find_pair_in_k22():
    g = complete_multipartite([2, 2])
    result = find_independent_set_of_size(g, range(1, 5), 2)
    assert result.status == FOUND
    assert len(result.vertices) == 2
    assert is_independent(g, result.vertices)


def test_find_four_set_in_petersen(petersen):
    # oracle: alpha(Petersen) = 4 via the exact solver below
    result = find_independent_set_of_size(petersen, range(1, 11), 4)
    assert result.status == FOUND
    assert is_independent(petersen, result.vertices)
    assert len(result.vertices) == 4


def test_find_respects_budget(petersen):
    result = find_independent_set_of_size(
        petersen, range(1, 11), 4, SearchBudget(node_limit=1)
    )
    assert result.status == BUDGET_EXCEEDED
    assert result.vertices is None


def test_find_rejects_bad_size(petersen):
    with pytest.raises(InputError):
        find_independent_set_of_size(petersen, range(1, 11), 0)


def test_find_agrees_with_exact_alpha():
    rnd = random.Random(23)
    for _ in range(40):
        n = rnd.randint(3, 12)
        g = sample_gnp(n, rnd.uniform(0.2, 0.8), seed=rnd.getrandbits(32))
        alpha = len(maximum_independent_set(g))
        hit = find_independent_set_of_size(g, range(1, n + 1), alpha)
        assert hit.status == FOUND
        assert len(hit.vertices) == alpha
        if alpha < n:
            miss = find_independent_set_of_size(g, range(1, n + 1), alpha + 1)
            assert miss.status == EXHAUSTED


def test_mis_c5(c5):
    assert len(maximum_independent_set(c5)) == 2


def test_mis_empty_graph():
    g = build_graph(9, [])
    assert maximum_independent_set(g) == set(range(1, 10))


def test_mis_petersen_brute_force_oracle(petersen):
    # oracle: full enumeration over all subsets of the 10 vertices
    best = 0
    for r in range(1, 11):
        for subset in itertools.combinations(range(1, 11), r):
            if is_independent(petersen, subset):
                best = max(best, r)
    assert best == 4
    chosen = maximum_independent_set(petersen)
    assert len(chosen) == 4
    assert is_independent(petersen, chosen)


def test_mis_cap(petersen):
    with pytest.raises(SizeLimitError):
        maximum_independent_set(sample_gnp(41, 0.5, seed=0))
    assert maximum_independent_set(petersen, cap=10)


def test_mis_matches_enumeration_on_random_graphs():
    rnd = random.Random(31)
    for _ in range(25):
        n = rnd.randint(2, 11)
        g = sample_gnp(n, rnd.uniform(0.1, 0.9), seed=rnd.getrandbits(32))
        brute = max(
            (
                r
                for r in range(n + 1)
                for subset in itertools.combinations(range(1, n + 1), r)
                if is_independent(g, subset)
            ),
            default=0,
        )
        assert len(maximum_independent_set(g)) == brute
