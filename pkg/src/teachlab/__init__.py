"""Exact teaching-dimension computations on finite concept classes.

Concepts over a domain [n] = {1..n} are bit masks; classes are ordered,
duplicate-free tuples of concepts.  The library computes classical teaching
dimensions (TD, TD_min, TD_max, RTD), no-clash teaching dimensions and
teachers, tournament-induced classes with their canonical order-1 teachers,
Johnson-graph extremal families, the Sauer-type bound family, and the
desk-scale probabilistic experiments.  Everything is exact integer or
rational arithmetic except where a report is explicitly a float estimate.
"""

from .bounds import (
    BoundReport,
    bound_report,
    chernoff_bound,
    corollary_d2_bound,
    default_t,
    gub_bound,
    heavy_sets,
    improved_factor,
    ksz_bound,
    resolve_h,
    sauer_phi,
)
from .classical import (
    TeachingReport,
    is_teaching_set,
    rtd,
    rtd_bruteforce,
    td_max,
    td_min,
    td_of,
    teaching_report,
)
from .concepts import (
    Concept,
    ConceptClass,
    agrees_on,
    complement,
    difference_set,
    instances_to_mask,
    mask_to_instances,
    parse_class,
    serialize_class,
)
from .errors import BudgetError, FormatError, PropertyViolation
from .experiments import (
    ClaimCheck,
    ClaimScan,
    Dim1Report,
    ExperimentConfig,
    MaxClassResult,
    PatternReport,
    TauReport,
    TdminSummary,
    Threshold,
    TrialRecord,
    claim_check,
    claim_scan,
    max_class_search,
    pattern_count,
    pattern_report,
    run_tdmin_experiment,
    tau_estimate,
    threshold_k,
    verify_dim1,
)
from .johnson import (
    CliqueClass,
    HMaxResult,
    KSetFamily,
    classify_clique,
    complement_family,
    h_max,
    h_ratio,
    johnson_adjacent,
    narrow_clique_free,
    narrow_cliques,
    parse_family,
    restrict_family,
    serialize_family,
)
from .ncteach import (
    NCTeacher,
    NctdResult,
    clash,
    decide_order,
    is_nc_teacher,
    nctd,
    nctd_lower_bound,
    normalize_teacher,
    parse_teacher,
    serialize_teacher,
)
from .rng import mix64, stream, stream_bit
from .tournaments import (
    Tournament,
    all_tournaments,
    canonical_teacher,
    class1,
    class2,
    linear_tournament,
    pair_rank,
    parse_tournament,
    random_tournament,
    recover_tournament,
    serialize_tournament,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetError",
    "ClaimCheck",
    "ClaimScan",
    "CliqueClass",
    "Concept",
    "ConceptClass",
    "Dim1Report",
    "ExperimentConfig",
    "FormatError",
    "HMaxResult",
    "KSetFamily",
    "MaxClassResult",
    "NCTeacher",
    "NctdResult",
    "PatternReport",
    "PropertyViolation",
    "TauReport",
    "TdminSummary",
    "TeachingReport",
    "Threshold",
    "Tournament",
    "TrialRecord",
    "agrees_on",
    "all_tournaments",
    "bound_report",
    "canonical_teacher",
    "chernoff_bound",
    "claim_check",
    "claim_scan",
    "clash",
    "class1",
    "class2",
    "classify_clique",
    "complement",
    "complement_family",
    "corollary_d2_bound",
    "decide_order",
    "default_t",
    "difference_set",
    "gub_bound",
    "h_max",
    "h_ratio",
    "heavy_sets",
    "improved_factor",
    "instances_to_mask",
    "is_nc_teacher",
    "is_teaching_set",
    "johnson_adjacent",
    "ksz_bound",
    "linear_tournament",
    "mask_to_instances",
    "max_class_search",
    "mix64",
    "narrow_clique_free",
    "narrow_cliques",
    "nctd",
    "nctd_lower_bound",
    "normalize_teacher",
    "pair_rank",
    "parse_class",
    "parse_family",
    "parse_teacher",
    "parse_tournament",
    "pattern_count",
    "pattern_report",
    "random_tournament",
    "recover_tournament",
    "resolve_h",
    "restrict_family",
    "rtd",
    "rtd_bruteforce",
    "run_tdmin_experiment",
    "sauer_phi",
    "serialize_class",
    "serialize_family",
    "serialize_teacher",
    "serialize_tournament",
    "stream",
    "stream_bit",
    "tau_estimate",
    "td_max",
    "td_min",
    "td_of",
    "teaching_report",
    "threshold_k",
    "verify_dim1",
]
