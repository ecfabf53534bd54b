"""Coloring algorithms, chromatic-number bounds, and Monte Carlo
experiments for randomly augmented graphs H + G(n,p)."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    alpha_threshold_k,
    build_bound_report,
    chromatic_lower_from_alpha,
    eqN1_bound,
    greedy_bound,
    k0,
    k0_sandwich,
    markov_alpha_bound,
    mcdiarmid_tail,
    small_p_bound,
    small_p_bound_logb,
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
from .errors import (
    AugcolorError,
    CampaignError,
    DomainError,
    InputError,
    RegimeError,
    SizeLimitError,
)
from .graph import (
    Coloring,
    Graph,
    build_graph,
    first_conflict,
    induced_subgraph,
    is_independent,
    is_proper_coloring,
    union,
)
from .harness import (
    ExperimentConfig,
    TrialRecord,
    class_distribution_check,
    concentration_experiment,
    lower_bound_experiment,
    run_campaign,
)
from .hosts import (
    HostSpec,
    complete_multipartite,
    count_independent_sets,
    host_coloring,
    host_graph,
    parse_host_spec,
)
from .indep import (
    SearchBudget,
    find_independent_set_of_size,
    greedy_maximal_independent_set,
    maximum_independent_set,
)
from .randgraph import augment, derive_seed, sample_gnp
