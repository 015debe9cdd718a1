"""Executable constructions of Turán systems.

Three families live here:

* the random-coloring construction (local-lemma style), run at toy scale
  with Moser-Tardos resampling and certified arithmetically at true scale
  in log-space,
* the blowup that lifts a system on [N] to [mN],
* the initial-segment recursion behind the mu(r+R, r) recursion bound.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from typing import Callable

import mpmath

from .combinatorics import (
    EXACT_N_BUDGET,
    LogValue,
    binomial,
    enumerate_subsets,
    log_binomial,
    rank_colex,
)
from .hypergraph import BudgetExceededError, UniformHypergraph

DEFAULT_MATERIALIZE_BUDGET = 5_000_000


class ConstructionError(RuntimeError):
    """A randomized construction failed within its retry/round caps."""


class FloorAmbiguousError(RuntimeError):
    """Interval arithmetic could not separate a floor from an integer boundary."""


# ---------------------------------------------------------------------------
# Baseline
# ---------------------------------------------------------------------------


def trivial_prefix_system(n: int, s: int, r: int) -> UniformHypergraph:
    """All r-subsets of the first n-(s-r) vertices.

    Any s-set misses at most s-r of those prefix vertices, hence meets the
    prefix in at least r points and contains an edge.  Size C(n-s+r, r).
    """
    if not (r < s <= n):
        raise ValueError(f"need r < s <= n, got r={r}, s={s}, n={n}")
    return UniformHypergraph.from_edges(n, r, enumerate_subsets(n - (s - r), r))


# ---------------------------------------------------------------------------
# Parameters of the random-coloring construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionParameters:
    """N and ell for the coloring construction at given (r, R).

    N = floor(r(r-1) C(s,R) / (2R)) and
    ell = floor(C(s,R) / ln(C(s,R)^2 C(N-s,R))), with s = r + R.

    When magnitudes allow (N <= EXACT_N_BUDGET) both values are exact
    integers with interval-certified floors; otherwise they are carried in
    log-space and the floors are ignored (relative effect is below any
    representable precision at those magnitudes).
    """

    r: int
    R: int
    s: int
    exact_path: bool
    N: int | None
    ell: int | None
    log_N: float
    log_ell: float | None
    log_binom_sR: float
    # ln(C(s,R)^2 * C(N-s,R)) == the denominator of ell == a certified
    # lower bound on C(s,R)/ell.
    denominator_log: float | None
    degenerate: bool
    degenerate_reason: str | None

    def N_value(self) -> LogValue:
        return LogValue.from_int(self.N) if self.N is not None else LogValue(self.log_N)

    def ell_value(self) -> LogValue:
        if self.ell is not None:
            return LogValue.from_int(self.ell)
        if self.log_ell is None:
            raise ValueError("degenerate parameters carry no ell")
        return LogValue(self.log_ell)

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "R": self.R,
            "s": self.s,
            "exact_path": self.exact_path,
            "N": self.N,
            "ell": self.ell,
            "log_N": self.log_N,
            "log_ell": self.log_ell,
            "log_binom_sR": self.log_binom_sR,
            "denominator_log": self.denominator_log,
            "degenerate": self.degenerate,
            "degenerate_reason": self.degenerate_reason,
        }


def _guarded_floor(numerator: int, denominator: mpmath.mpf) -> int:
    """floor(numerator / denominator) with an integer-boundary guard."""
    with mpmath.workdps(len(str(numerator)) + 30):
        q = mpmath.mpf(numerator) / denominator
        fl = mpmath.floor(q)
        if q - fl < mpmath.mpf(10) ** (-10):
            raise FloorAmbiguousError(
                f"quotient {mpmath.nstr(q, 25)} too close to an integer boundary"
            )
        return int(fl)


def construction_parameters(r: int, R: int) -> ConstructionParameters:
    """Evaluate the (N, ell) schedule of the coloring construction."""
    if r < 2 or R < 1:
        raise ValueError(f"need r >= 2 and R >= 1, got r={r}, R={R}")
    s = r + R
    log_C = log_binomial(s, R)
    log_N_est = math.log(r * (r - 1) / (2 * R)) + log_C

    if log_N_est <= math.log(EXACT_N_BUDGET) + 1e-9:
        C = binomial(s, R)
        N = r * (r - 1) * C // (2 * R)
        log_N = math.log(N) if N > 0 else float("-inf")
        if N <= s:
            return ConstructionParameters(
                r, R, s, True, N, None, log_N, None, log_C, None, True,
                f"N = {N} <= s = {s}",
            )
        with mpmath.workdps(len(str(C)) + 30):
            denom = mpmath.log(
                mpmath.mpf(C) ** 2 * mpmath.mpf(binomial(N - s, R))
            )
            denom_log = float(denom)
            ell = _guarded_floor(C, denom)
        if ell < 1:
            return ConstructionParameters(
                r, R, s, True, N, ell, log_N, None, log_C, denom_log, True,
                f"ell = {ell} < 1 (single colour, construction vacuous)",
            )
        return ConstructionParameters(
            r, R, s, True, N, ell, log_N, math.log(ell), log_C, denom_log,
            False, None,
        )

    # Log-space path.  The floor in N is dropped: at these magnitudes its
    # relative effect is e^{-log_N}, far below float resolution.
    log_N = log_N_est
    if log_N <= 500:
        # N still fits an exact integer; use it for the C(N-s, R) term.
        C = binomial(s, R)
        N = r * (r - 1) * C // (2 * R)
        log_C_Ns = log_binomial(N - s, R)
    else:
        # N - s - i == N up to relative error e^{-log_N + log s}.
        log_C_Ns = R * log_N - math.lgamma(R + 1)
    denom_log = 2.0 * log_C + log_C_Ns
    if denom_log <= 0:
        return ConstructionParameters(
            r, R, s, False, None, None, log_N, None, log_C, denom_log, True,
            "nonpositive log denominator",
        )
    log_ell = log_C - math.log(denom_log)
    if log_ell < 0:
        return ConstructionParameters(
            r, R, s, False, None, None, log_N, log_ell, log_C, denom_log, True,
            "ell < 1 (single colour, construction vacuous)",
        )
    return ConstructionParameters(
        r, R, s, False, None, None, log_N, log_ell, log_C, denom_log, False, None
    )


# ---------------------------------------------------------------------------
# Local-lemma certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LllCertificate:
    """Arithmetic of the symmetric local-lemma check for the bad events.

    p is the probability that a fixed s-set misses some colour, Delta the
    dependency degree (s-sets sharing >= r vertices, loops included).  The
    certificate evaluates both e*p*Delta < 1 with the sharp p bound
    ell*(1-1/ell)^C(s,r) and the sufficient form
    e^{C(s,R)/ell} > e*ell*Delta.
    """

    N: LogValue
    s: int
    r: int
    R: int
    ell: LogValue
    log_p_bound: LogValue
    log_delta: LogValue
    delta_exact: int | None
    delta_is_upper_bound: bool
    delta_upper_valid: bool
    condition_holds: bool
    exponential_condition_holds: bool
    ratio_C_over_ell: float

    def to_json_dict(self) -> dict:
        return {
            "log_N": self.N.log_magnitude,
            "s": self.s,
            "r": self.r,
            "R": self.R,
            "log_ell": self.ell.log_magnitude,
            "log_p_bound": None if self.log_p_bound.is_zero else self.log_p_bound.log_magnitude,
            "log_delta": self.log_delta.log_magnitude,
            "delta_exact": self.delta_exact,
            "delta_is_upper_bound": self.delta_is_upper_bound,
            "delta_upper_valid": self.delta_upper_valid,
            "condition_holds": self.condition_holds,
            "exponential_condition_holds": self.exponential_condition_holds,
            "ratio_C_over_ell": self.ratio_C_over_ell,
        }


def dependency_degree(N: int, s: int, r: int) -> int:
    """Exact Delta = sum_{i=r}^{s} C(s,i) C(N-s,s-i)."""
    return sum(binomial(s, i) * binomial(N - s, s - i) for i in range(r, s + 1))


def dependency_term_ratios(N: int, s: int, r: int) -> list[float]:
    """Consecutive-term ratios (s-i)^2 / ((i+1)(N-2s+i+1)) for i in [r, s)."""
    return [
        (s - i) ** 2 / ((i + 1) * (N - 2 * s + i + 1)) for i in range(r, s)
    ]


def lll_condition(
    N: int | LogValue,
    s: int,
    r: int,
    ell: int | LogValue,
    ratio_C_over_ell: float | None = None,
) -> LllCertificate:
    """Evaluate the local-lemma condition for the coloring construction.

    Delta is computed exactly whenever N is an explicit integer, otherwise
    bounded by 2 C(s,R) C(N-s,R) (valid when 3 <= R <= s/2 and
    N >= C(s,3); the certificate carries that flag).

    ratio_C_over_ell, when given, is a certified lower bound on
    C(s,R)/ell; construction_parameters supplies its denominator for this
    so no catastrophic log cancellation occurs at true scale.
    """
    R = s - r
    if not (0 < r < s):
        raise ValueError(f"need 0 < r < s, got r={r}, s={s}")
    N_int = N if isinstance(N, int) else None
    N_val = LogValue.from_int(N) if isinstance(N, int) else N
    ell_int = ell if isinstance(ell, int) else None
    ell_val = LogValue.from_int(ell) if isinstance(ell, int) else ell
    if ell_val.is_zero or ell_val.log_magnitude < 0:
        raise ValueError("ell must be >= 1")

    log_C = log_binomial(s, R)

    # Delta, exact when materializable.
    delta_exact: int | None = None
    if N_int is not None:
        delta_exact = dependency_degree(N_int, s, r)
        log_delta = LogValue.from_int(delta_exact)
        delta_is_upper = False
    else:
        log_C_Ns = (
            R * N_val.log_magnitude - math.lgamma(R + 1)
            if N_val.log_magnitude > 500
            else log_binomial(int(round(math.exp(N_val.log_magnitude))) - s, R)
        )
        log_delta = LogValue(math.log(2.0) + log_C + log_C_Ns)
        delta_is_upper = True
    delta_upper_valid = 3 <= R <= s / 2 and (
        N_val.log_magnitude >= log_binomial(s, min(3, s)) - 1e-12
    )

    # x = C(s,R)/ell (lower bound when the certified denominator is used).
    if ratio_C_over_ell is not None:
        x = ratio_C_over_ell
    elif ell_int is not None and s <= 4096:
        x = binomial(s, R) / ell_int
    else:
        x = math.exp(log_C - ell_val.log_magnitude)

    # Sharp bad-event probability bound: ell * (1 - 1/ell)^{C(s,r)}.
    if ell_int == 1:
        log_p = LogValue.zero()
    else:
        if ell_int is not None and ell_int < 10**15 and s <= 4096:
            log_one_minus = math.log1p(-1.0 / ell_int)
            log_p = LogValue(ell_val.log_magnitude + binomial(s, R) * log_one_minus)
        else:
            # ell astronomically large: ln(1 - 1/ell) = -1/ell to all
            # representable precision, so the sharp and e^{-C/ell} forms agree.
            log_p = LogValue(ell_val.log_magnitude - x)

    if log_p.is_zero:
        condition_holds = True
    else:
        condition_holds = 1.0 + log_p.log_magnitude + log_delta.log_magnitude < 0
    exponential_condition_holds = x > 1.0 + ell_val.log_magnitude + log_delta.log_magnitude

    return LllCertificate(
        N=N_val,
        s=s,
        r=r,
        R=R,
        ell=ell_val,
        log_p_bound=log_p,
        log_delta=log_delta,
        delta_exact=delta_exact,
        delta_is_upper_bound=delta_is_upper,
        delta_upper_valid=delta_upper_valid,
        condition_holds=condition_holds,
        exponential_condition_holds=exponential_condition_holds,
        ratio_C_over_ell=x,
    )


def lll_certificate_for(params: ConstructionParameters) -> LllCertificate:
    """Certificate at the construction's own (N, ell) schedule."""
    if params.degenerate:
        raise ValueError(f"degenerate parameters: {params.degenerate_reason}")
    N: int | LogValue = params.N if params.N is not None else params.N_value()
    ell: int | LogValue = params.ell if params.ell is not None else params.ell_value()
    # floor(ell) <= C/denominator, so the denominator is a certified lower
    # bound on C(s,R)/ell; it keeps the true-scale evaluation cancellation-free.
    return lll_condition(N, params.s, params.r, ell, ratio_C_over_ell=params.denominator_log)


# ---------------------------------------------------------------------------
# Moser-Tardos coloring at toy scale
# ---------------------------------------------------------------------------


@dataclass
class ColoringOutcome:
    success: bool
    N: int
    s: int
    r: int
    ell: int
    seed: int
    coloring: tuple[int, ...]  # colour of each r-set, indexed by colex rank
    rounds_used: int
    least_color: int | None
    least_class: UniformHypergraph | None
    class_sizes: tuple[int, ...]
    failed_s_set: tuple[int, ...] | None

    def color_class(self, color: int) -> UniformHypergraph:
        edges = [
            e
            for e, c in zip(enumerate_subsets(self.N, self.r), self.coloring)
            if c == color
        ]
        return UniformHypergraph.from_edges(self.N, self.r, edges)

    def to_json_dict(self) -> dict:
        return {
            "success": self.success,
            "N": self.N,
            "s": self.s,
            "r": self.r,
            "ell": self.ell,
            "seed": self.seed,
            "rounds_used": self.rounds_used,
            "least_color": self.least_color,
            "class_sizes": list(self.class_sizes),
            "coloring": list(self.coloring),
            "failed_s_set": list(self.failed_s_set) if self.failed_s_set else None,
        }


def moser_tardos_color(
    N: int,
    s: int,
    r: int,
    ell: int,
    seed: int,
    max_rounds: int = 20_000,
    budget: int = DEFAULT_MATERIALIZE_BUDGET,
) -> ColoringOutcome:
    """Random ell-coloring of all r-sets of [N] with resampling repair.

    Colours every r-set uniformly at random, then repeatedly picks the
    colex-least s-set missing some colour and redraws the colours of all
    its r-subsets.  On success every colour class is a Turán (N,s,r)-system
    by definition of "no bad event".
    """
    if not (r < s <= N):
        raise ValueError(f"need r < s <= N, got r={r}, s={s}, N={N}")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if binomial(N, r) > budget:
        raise BudgetExceededError(f"C({N},{r}) exceeds materialization budget {budget}")

    rng = random.Random(seed)
    num_r = binomial(N, r)
    coloring = [rng.randrange(ell) for _ in range(num_r)]

    s_sets = list(enumerate_subsets(N, s))
    member_ranks = [
        [rank_colex(tuple(S[p] for p in pos)) for pos in enumerate_subsets(s, r)]
        for S in s_sets
    ]

    def violated() -> int | None:
        for i in range(len(s_sets)):
            present = {coloring[j] for j in member_ranks[i]}
            if len(present) < ell:
                return i
        return None

    rounds = 0
    bad = violated()
    while bad is not None and rounds < max_rounds:
        for j in member_ranks[bad]:
            coloring[j] = rng.randrange(ell)
        rounds += 1
        bad = violated()

    sizes = [0] * ell
    for c in coloring:
        sizes[c] += 1

    if bad is not None:
        return ColoringOutcome(
            success=False,
            N=N, s=s, r=r, ell=ell, seed=seed,
            coloring=tuple(coloring),
            rounds_used=rounds,
            least_color=None,
            least_class=None,
            class_sizes=tuple(sizes),
            failed_s_set=s_sets[bad],
        )

    least = min(range(ell), key=lambda c: (sizes[c], c))
    outcome = ColoringOutcome(
        success=True,
        N=N, s=s, r=r, ell=ell, seed=seed,
        coloring=tuple(coloring),
        rounds_used=rounds,
        least_color=least,
        least_class=None,
        class_sizes=tuple(sizes),
        failed_s_set=None,
    )
    outcome.least_class = outcome.color_class(least)
    return outcome


# ---------------------------------------------------------------------------
# Blowup
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowupReport:
    m: int
    N: int
    r: int
    size: int
    size_transversal_cap: int  # m^r |A|
    size_degenerate_cap: int  # N C(m,2) C(mN-2, r-2)
    f: float | None  # 1/ell + r(r-1)/(2N) when ell is known

    def cap(self) -> int:
        return self.size_transversal_cap + self.size_degenerate_cap

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "N": self.N,
            "r": self.r,
            "size": self.size,
            "size_transversal_cap": self.size_transversal_cap,
            "size_degenerate_cap": self.size_degenerate_cap,
            "f": self.f,
        }


def blowup(
    A: UniformHypergraph,
    m: int,
    ell: int | None = None,
    budget: int = DEFAULT_MATERIALIZE_BUDGET,
) -> tuple[UniformHypergraph, BlowupReport]:
    """Blow each vertex of A into m clones (parts are residues mod N).

    The result on [mN] keeps every r-set that meets some part twice, plus
    every transversal r-set whose part projection is an edge of A.  If A is
    a Turán (N,s,r)-system the result is a Turán (mN,s,r)-system.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if A.r < 2:
        # With single-vertex edges an s-set inside one non-edge part would
        # contain no edge, so the construction only preserves the property
        # for r >= 2 (it relies on r-sets that meet a part twice).
        raise ValueError("blowup requires r >= 2")
    N, r = A.n, A.r
    n = m * N
    if binomial(n, r) > budget:
        raise BudgetExceededError(
            f"C({n},{r}) exceeds materialization budget {budget}"
        )
    edge_set = A.edge_set()
    edges = []
    for e in enumerate_subsets(n, r):
        parts = tuple(sorted(v % N for v in e))
        if len(set(parts)) < r or parts in edge_set:
            edges.append(e)
    B = UniformHypergraph.from_edges(n, r, edges)
    report = BlowupReport(
        m=m,
        N=N,
        r=r,
        size=len(B),
        size_transversal_cap=m**r * len(A),
        size_degenerate_cap=N * binomial(m, 2) * binomial(n - 2, r - 2),
        f=(1.0 / ell + r * (r - 1) / (2.0 * N)) if ell else None,
    )
    return B, report


# ---------------------------------------------------------------------------
# Initial-segment recursion
# ---------------------------------------------------------------------------

BaseSupplier = Callable[[int, int, int], UniformHypergraph]


def prefix_base_supplier(n: int, s: int, r: int) -> UniformHypergraph:
    """Default tail supplier: prefix system, empty when n < s (vacuous)."""
    if n < s:
        return UniformHypergraph.from_edges(max(n, 0), r, [])
    return trivial_prefix_system(n, s, r)


@dataclass
class RecursionSample:
    n: int
    r: int
    R: int
    k: int
    c: float
    p: float
    seed: int
    retries: int
    sampled: tuple[tuple[int, ...], ...]  # the (k-R)-sets drawn into S
    size_sampled_star: int
    size_uncovered: int  # |T|
    size_extension_star: int
    size_total: int
    expected_size: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "R": self.R,
            "k": self.k,
            "c": self.c,
            "p": self.p,
            "seed": self.seed,
            "retries": self.retries,
            "sampled": [list(d) for d in self.sampled],
            "size_sampled_star": self.size_sampled_star,
            "size_uncovered": self.size_uncovered,
            "size_extension_star": self.size_extension_star,
            "size_total": self.size_total,
            "expected_size": self.expected_size,
        }


def _validate_recursion_params(n: int, r: int, R: int, k: int, c: float) -> None:
    if R < 1 or r < 2:
        raise ValueError(f"need r >= 2, R >= 1, got r={r}, R={R}")
    if not (R <= k <= r - 1):
        raise ValueError(f"k must lie in [R, r-1] = [{R}, {r - 1}], got {k}")
    if not (0 <= c <= binomial(k, R)):
        raise ValueError(f"c must lie in [0, C({k},{R})] = [0, {binomial(k, R)}]")
    if n < r + R:
        raise ValueError(f"need n >= r + R = {r + R}, got {n}")


def _tail_systems(
    n: int, r: int, R: int, k: int, base_supplier: BaseSupplier
) -> dict[int, UniformHypergraph]:
    """Tail system per possible max vertex v of a k-set; labels are local."""
    s_inner, r_inner = r - k + R, r - k
    tails = {}
    for v in range(k - 1, n):
        tails[v] = base_supplier(n - 1 - v, s_inner, r_inner)
    return tails


def expected_recursive_size(
    n: int,
    r: int,
    R: int,
    k: int,
    c: float,
    tail_size_oracle: Callable[[int], int] | None = None,
    mu_inner: float | None = None,
) -> tuple[float, float]:
    """Expected |G| of the recursion, plus the closed-form cap.

    The exact expectation is p C(n,r) plus, grouping uncovered k-sets by
    their maximum vertex v (0-based: C(v, k-1) of them, tail length n-1-v),
    (1-p)^{C(k,R)} C(v,k-1) * tail_size(n-1-v) summed over v.  The oracle
    defaults to the prefix-system size C(n'-s'+r', r'), matching
    prefix_base_supplier.  The cap is
    (c/C(k,R) + e^{-c} mu_inner / C(r-k+R,R)) C(n,r).
    """
    _validate_recursion_params(n, r, R, k, c)
    s_inner, r_inner = r - k + R, r - k
    if tail_size_oracle is None:
        def tail_size_oracle(n2: int) -> int:
            return binomial(n2 - s_inner + r_inner, r_inner) if n2 >= s_inner else 0

    p = c / binomial(k, R)
    q = (1.0 - p) ** binomial(k, R)
    expected = p * binomial(n, r)
    for v in range(k - 1, n):
        expected += q * binomial(v, k - 1) * tail_size_oracle(n - 1 - v)

    if mu_inner is None:
        mu_inner = float(binomial(s_inner, r_inner))
    cap = (p + math.exp(-c) * mu_inner / binomial(s_inner, R)) * binomial(n, r)
    return expected, cap


def sample_recursive_system(
    n: int,
    r: int,
    R: int,
    k: int,
    c: float,
    rng: random.Random,
    base_supplier: BaseSupplier = prefix_base_supplier,
    tails: dict[int, UniformHypergraph] | None = None,
) -> tuple[set[tuple[int, ...]], tuple[tuple[int, ...], ...]]:
    """One raw draw of the recursion: returns (edges of G, sampled S).

    No retry filtering; used directly by the Monte Carlo comparison against
    expected_recursive_size.
    """
    _validate_recursion_params(n, r, R, k, c)
    d = k - R  # size of the sampled initial segments
    p = c / binomial(k, R)
    if tails is None:
        tails = _tail_systems(n, r, R, k, base_supplier)

    sampled = tuple(D for D in enumerate_subsets(n, d) if rng.random() < p)
    sampled_set = set(sampled)

    edges: set[tuple[int, ...]] = set()
    # S*: r-sets whose d smallest elements form a sampled set.
    for D in sampled:
        lo = D[-1] if D else -1
        if n - 1 - lo < r - d:
            continue  # no room to the right; D extends to no r-set
        for ext in enumerate_subsets(n - 1 - lo, r - d):
            edges.add(D + tuple(lo + 1 + x for x in ext))
    # T*: k-sets not hit by S, extended by the tail system past their max.
    for Y in enumerate_subsets(n, k):
        if any(tuple(Y[p_] for p_ in pos) in sampled_set
               for pos in enumerate_subsets(k, d)):
            continue
        v = Y[-1]
        for Z in tails[v].edges:
            edges.add(Y + tuple(v + 1 + z for z in Z))
    return edges, sampled


def recursive_system(
    n: int,
    r: int,
    R: int,
    k: int,
    c: float,
    seed: int,
    base_supplier: BaseSupplier = prefix_base_supplier,
    max_retries: int = 1000,
) -> tuple[UniformHypergraph, RecursionSample]:
    """Initial-segment recursion for a Turán (n, r+R, r)-system.

    Samples each (k-R)-set into S with probability c/C(k,R), keeps r-sets
    whose initial (k-R)-segment is sampled, and extends every unhit k-set
    by a tail Turán (n', r-k+R, r-k)-system to its right.  Resamples until
    |G| is at most its expected value (the expectation uses the actual tail
    sizes the supplier produced, so the threshold matches the object built).
    """
    _validate_recursion_params(n, r, R, k, c)
    tails = _tail_systems(n, r, R, k, base_supplier)
    expected, _ = expected_recursive_size(
        n, r, R, k, c, tail_size_oracle=lambda n2: len(tails[n - 1 - n2])
    )
    rng = random.Random(seed)
    best: tuple[set[tuple[int, ...]], tuple[tuple[int, ...], ...]] | None = None
    for attempt in range(max_retries):
        edges, sampled = sample_recursive_system(
            n, r, R, k, c, rng, base_supplier, tails=tails
        )
        if best is None or len(edges) < len(best[0]):
            best = (edges, sampled)
        if len(edges) <= expected + 1e-9:
            d = k - R
            size_s_star = sum(
                1 for e in edges if e[:d] in set(sampled)
            )
            G = UniformHypergraph.from_edges(n, r, edges)
            sample = RecursionSample(
                n=n, r=r, R=R, k=k, c=c,
                p=c / binomial(k, R),
                seed=seed,
                retries=attempt,
                sampled=sampled,
                size_sampled_star=size_s_star,
                size_uncovered=_count_uncovered(n, k, d, set(sampled)),
                size_extension_star=len(edges) - size_s_star,
                size_total=len(edges),
                expected_size=expected,
            )
            return G, sample
    assert best is not None
    raise ConstructionError(
        f"no sample with |G| <= {expected:.3f} within {max_retries} retries "
        f"(best seen {len(best[0])})"
    )


def _count_uncovered(n: int, k: int, d: int, sampled: set[tuple[int, ...]]) -> int:
    count = 0
    for Y in enumerate_subsets(n, k):
        if not any(
            tuple(Y[p] for p in pos) in sampled for pos in enumerate_subsets(k, d)
        ):
            count += 1
    return count


def write_json(obj: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")
