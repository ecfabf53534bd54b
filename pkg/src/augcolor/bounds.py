"""Closed-form quantities: b, the independence threshold k0 and its
sandwich, the upper-bound formulas for augmented-graph coloring, the greedy
bound, the Markov lower-bound estimate, and the bounded-differences tail.

Everything is evaluated in natural-log space (log_b(x) = ln x / ln b) with
lgamma-based binomial coefficients, so n up to 1e9 stays far from overflow.
The asymptotic statements behind these formulas carry (1+eps) factors; the
functions return the eps-free core value and leave eps to callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InputError, RegimeError

__all__ = [
    "BoundReport",
    "log_binomial",
    "k0",
    "k0_sandwich",
    "eqN1_bound",
    "small_p_bound",
    "small_p_bound_logb",
    "greedy_bound",
    "alpha_threshold_k",
    "markov_alpha_bound",
    "mcdiarmid_tail",
    "chromatic_lower_from_alpha",
    "build_bound_report",
]


def _check_p(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise InputError(f"edge probability must lie in (0,1), got {p}")
    return 1.0 / (1.0 - p)


def log_binomial(n: int, k: int) -> float:
    """ln C(n,k) via lgamma; -inf outside 0 <= k <= n."""
    if k < 0 or k > n:
        return -math.inf
    return (
        math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    )


def k0(n: int, p: float) -> int | None:
    """Largest k with C(n,k) * (1-p)^C(k,2) > n^4, or None if no k
    qualifies.

    Evaluated as ln C(n,k) + C(k,2)*ln(1-p) > 4 ln n. The expression is
    concave in k, so the scan walks k upward and stops once it has fallen
    below the threshold on the decreasing side of the peak. The empty case
    genuinely occurs at desk scale (e.g. n=1000, p=0.5).
    """
    _check_p(p)
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    threshold = 4.0 * math.log(n)
    ln_q = math.log1p(-p)
    best = None
    prev = -math.inf
    for k in range(1, n + 1):
        value = log_binomial(n, k) + (k * (k - 1) / 2.0) * ln_q
        if value > threshold:
            best = k
        if value < prev and value <= threshold:
            break  # past the peak and below the threshold: concavity ends it
        prev = value
    return best


def k0_sandwich(n: int, p: float) -> tuple[float, float]:
    """(lower, upper) with upper = 2 log_b(np) and
    lower = upper - 4 log_b(ln(np)); the inner logarithm is natural.

    These bracket k0 asymptotically. The extraction loops use the companion
    form with an inner log_b instead (see phase_thresholds_constant); both
    are exposed, neither is "corrected".
    """
    b = _check_p(p)
    np_ = n * p
    if np_ <= 1.0:
        raise RegimeError(f"need n*p > 1, got n*p={np_:g}")
    ln_b = math.log(b)
    upper = 2.0 * math.log(np_) / ln_b
    lower = upper - 4.0 * math.log(math.log(np_)) / ln_b
    return lower, upper


def eqN1_bound(n: int, p: float, chi_h: int) -> float:
    """Core upper bound for the chromatic number of an augmented graph at
    constant p: n ln(b) / (2 (ln n - ln chi_h))."""
    b = _check_p(p)
    if not 1 <= chi_h < n:
        raise DomainError(f"need 1 <= chi_h < n, got chi_h={chi_h}, n={n}")
    return n * math.log(b) / (2.0 * (math.log(n) - math.log(chi_h)))


def small_p_bound(n: int, p: float, chi_h: int) -> float:
    """Small-p core bound n p / (2 (ln(np) - ln chi_h)), as stated; the
    proof-side variant with ln(b) in place of p is small_p_bound_logb."""
    _check_p(p)
    if chi_h < 1:
        raise DomainError(f"need chi_h >= 1, got {chi_h}")
    if n * p <= chi_h:
        raise DomainError(
            f"need n*p > chi_h for a positive denominator, got n*p={n * p:g}, "
            f"chi_h={chi_h}"
        )
    return n * p / (2.0 * (math.log(n * p) - math.log(chi_h)))


def small_p_bound_logb(n: int, p: float, chi_h: int) -> float:
    """Variant of small_p_bound with ln(b) in place of p; for small p the
    two agree because ln(1/(1-p)) ~ p."""
    b = _check_p(p)
    if chi_h < 1:
        raise DomainError(f"need chi_h >= 1, got {chi_h}")
    if n * p <= chi_h:
        raise DomainError(
            f"need n*p > chi_h for a positive denominator, got n*p={n * p:g}, "
            f"chi_h={chi_h}"
        )
    return n * math.log(b) / (2.0 * (math.log(n * p) - math.log(chi_h)))


def greedy_bound(n: int, p: float) -> float:
    """Core bound n ln(b) / ln(np) on the colors used by the greedy
    maximal-independent-set algorithm."""
    b = _check_p(p)
    if n * p <= 1.0:
        raise RegimeError(f"need n*p > 1, got n*p={n * p:g}")
    return n * math.log(b) / math.log(n * p)


def alpha_threshold_k(n: int, p: float, chi_h: int) -> int:
    """ceil(2 (ln n - ln chi_h) / ln b): independent sets of this size are
    what the Markov bound counts."""
    b = _check_p(p)
    if not 1 <= chi_h < n:
        raise DomainError(f"need 1 <= chi_h < n, got chi_h={chi_h}, n={n}")
    return math.ceil(2.0 * (math.log(n) - math.log(chi_h)) / math.log(b))


def markov_alpha_bound(n_hk: int, p: float, k: int) -> float:
    """min(1, n_hk * (1-p)^C(k,2)): an upper bound on the probability that
    the augmented graph has an independent set of size k (n_hk = number of
    independent k-sets in the host). Evaluated in log space so huge exact
    counts do not overflow."""
    _check_p(p)
    if n_hk < 0:
        raise InputError(f"need a nonnegative count, got {n_hk}")
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    if n_hk == 0:
        return 0.0
    log_value = math.log(n_hk) + (k * (k - 1) / 2.0) * math.log1p(-p)
    if log_value >= 0.0:
        return 1.0
    return math.exp(log_value)


def mcdiarmid_tail(t: float, n: int) -> float:
    """Bounded-differences tail 2 exp(-2 t^2 / n) for the chromatic number
    of an n-vertex augmented graph (one vertex's incident edges move chi by
    at most 1, so the squared differences sum to n). Clamp with min(1, .)
    when using it as a probability."""
    if t < 0:
        raise InputError(f"need t >= 0, got {t}")
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    return 2.0 * math.exp(-2.0 * t * t / n)


def chromatic_lower_from_alpha(n: int, alpha: float) -> float:
    """The floor chi >= n / alpha."""
    if alpha < 1:
        raise DomainError(f"need alpha >= 1, got {alpha}")
    return n / alpha


@dataclass(frozen=True)
class BoundReport:
    """All closed-form quantities for one (n, p, chi_h) triple.

    k0 is None when no k satisfies the defining inequality. markov_bound is
    present only when the caller supplied the exact independent-set count
    n_hk of a concrete host. mcdiarmid_tail stays available as the method.
    """

    n: int
    p: float
    b: float
    chi_h: int
    beta: float
    k0: int | None
    k0_lower: float | None
    k0_upper: float | None
    eqN1_bound: float
    small_p_bound: float | None
    small_p_bound_logb: float | None
    greedy_bound: float | None
    alpha_threshold_k: int
    n_hk: int | None
    markov_bound: float | None

    def mcdiarmid_tail(self, t: float) -> float:
        return mcdiarmid_tail(t, self.n)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "b": self.b,
            "chi_h": self.chi_h,
            "beta": self.beta,
            "k0": self.k0,
            "k0_lower": self.k0_lower,
            "k0_upper": self.k0_upper,
            "eqN1_bound": self.eqN1_bound,
            "small_p_bound": self.small_p_bound,
            "small_p_bound_logb": self.small_p_bound_logb,
            "greedy_bound": self.greedy_bound,
            "alpha_threshold_k": self.alpha_threshold_k,
            "n_hk": self.n_hk,
            "markov_bound": self.markov_bound,
            "mcdiarmid_tail_at_sqrt_n": self.mcdiarmid_tail(math.sqrt(self.n)),
        }


def build_bound_report(
    n: int, p: float, chi_h: int, k: int | None = None, n_hk: int | None = None
) -> BoundReport:
    """Assemble the full report; formulas whose domain fails at this triple
    are reported as None rather than raising."""
    b = _check_p(p)
    if not 1 <= chi_h < n:
        raise DomainError(f"need 1 <= chi_h < n, got chi_h={chi_h}, n={n}")
    try:
        lower, upper = k0_sandwich(n, p)
    except RegimeError:
        lower = upper = None
    try:
        spb = small_p_bound(n, p, chi_h)
        spb_logb = small_p_bound_logb(n, p, chi_h)
    except DomainError:
        spb = spb_logb = None
    try:
        gb = greedy_bound(n, p)
    except RegimeError:
        gb = None
    k_used = k if k is not None else alpha_threshold_k(n, p, chi_h)
    markov = markov_alpha_bound(n_hk, p, k_used) if n_hk is not None else None
    return BoundReport(
        n=n,
        p=p,
        b=b,
        chi_h=chi_h,
        beta=n / chi_h,
        k0=k0(n, p),
        k0_lower=lower,
        k0_upper=upper,
        eqN1_bound=eqN1_bound(n, p, chi_h),
        small_p_bound=spb,
        small_p_bound_logb=spb_logb,
        greedy_bound=gb,
        alpha_threshold_k=alpha_threshold_k(n, p, chi_h),
        n_hk=n_hk,
        markov_bound=markov,
    )
