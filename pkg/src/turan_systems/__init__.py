"""Construction, verification and bound certification for Turán systems."""

__version__ = "0.1.0"

from .combinatorics import (
    LogValue,
    binomial,
    enumerate_subsets,
    log_binomial,
    rank_colex,
    unrank_colex,
)
from .hypergraph import (
    UniformHypergraph,
    VerifyReport,
    contains_edge,
    density,
    is_turan_system,
    sample_verify,
)
from .constructions import (
    ColoringOutcome,
    ConstructionParameters,
    LllCertificate,
    RecursionSample,
    blowup,
    construction_parameters,
    expected_recursive_size,
    lll_certificate_for,
    lll_condition,
    moser_tardos_color,
    recursive_system,
    trivial_prefix_system,
)
from .bounds import (
    BoundReport,
    RecursionTrace,
    RootResult,
    bound_reports,
    counting_lower_T,
    decaen_lower_mu,
    large_gap_mu_bound,
    binomial_ratio_check,
    segment_split_plan,
    fixed_gap_mu_bound,
    recursion_rhs,
    limit_alpha_root,
    gap_log_binomial_mu_bound,
    closing_chain_check,
    descent_certificate,
    descent_schedule,
)
from .solver import SolveResult, ValueCache, solve_min_turan, solve_with_cache, turan_r2_value
