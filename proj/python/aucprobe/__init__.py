"""Exact AUC scoring, a simulated contest oracle, and the label-leakage
attacks that a single reported AUC score makes possible."""

from aucprobe._core import (
    BinStat,
    BudgetExhaustedError,
    CertaintyResult,
    CountOverflowError,
    NoSatisfyingLabelingError,
    Oracle,
    OracleResponse,
    PosteriorResult,
    RationalScore,
    SimRunRecord,
    TiedGuessesError,
    UndefinedAucError,
    aggregate,
    auc_exact,
    auc_with_ties,
    construct_labeling,
    count_satisfying,
    deduce_certain_labels,
    enumerate_variants,
    jitter_for_resubmission,
    lemma_ratio_check,
    lower_bound,
    perfect_auc_shortcut,
    posterior_brute_force,
    posterior_dp,
    rank_order,
    records_to_csv,
    run_attack2_trial,
    run_sweep,
    variant_count,
)

__all__ = [
    "BinStat",
    "BudgetExhaustedError",
    "CertaintyResult",
    "CountOverflowError",
    "NoSatisfyingLabelingError",
    "Oracle",
    "OracleResponse",
    "PosteriorResult",
    "RationalScore",
    "SimRunRecord",
    "TiedGuessesError",
    "UndefinedAucError",
    "aggregate",
    "auc_exact",
    "auc_with_ties",
    "construct_labeling",
    "count_satisfying",
    "deduce_certain_labels",
    "enumerate_variants",
    "jitter_for_resubmission",
    "lemma_ratio_check",
    "lower_bound",
    "perfect_auc_shortcut",
    "posterior_brute_force",
    "posterior_dp",
    "rank_order",
    "records_to_csv",
    "run_attack2_trial",
    "run_sweep",
    "variant_count",
]

__version__ = "0.1.0"
