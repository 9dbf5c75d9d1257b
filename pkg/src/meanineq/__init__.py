"""Weighted power-mean inequalities: evaluation, sharp thresholds, search.

The library evaluates weighted power means and the three-mean difference
ratio, checks a catalog of named mean inequalities with scale-free
residuals, solves the sharp parameter thresholds behind them by bracketed
root-finding and 1-D minimization, sweeps the scalar certificate
functions of the underlying proofs over their claimed domains, and
searches configuration space to confirm sharpness and locate
counterexamples beyond the proven validity frontiers.
"""

from .errors import ConfigError, DegenerateInput, DomainError, MeanIneqError
from .inequalities import (
    CheckReport,
    CheckStatus,
    InequalityId,
    check,
    equality_witness,
)
from .means import (
    DEFAULT_ABS_FLOOR,
    DEFAULT_REL_TOL,
    Configuration,
    DeltaParams,
    MeanValue,
    c_constant,
    delta,
    log_power_mean,
    mean_value,
    order_triple,
    power_mean,
    variance_sigma,
)
from .proof_aux import (
    AuxFunctionId,
    GridAxis,
    SignCheckReport,
    aux_eval,
    aux_sign_check,
    claimed_bound,
)
from .search import (
    ProbeClaim,
    SearchBudget,
    SearchReport,
    counterexample_hunt,
    finite_difference_probe,
    sharpness_probe,
)
from .thresholds import (
    ThresholdResult,
    a_r_fn,
    a_r_values,
    alpha_threshold_lower,
    alpha_threshold_upper,
    bisect,
    gap_exponent_lower,
    gap_exponent_upper,
    golden_section_min,
    min_a_r,
    r0_value,
    solve_r0,
    solve_t1,
    solve_t2,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "CheckStatus",
    "ConfigError",
    "Configuration",
    "DEFAULT_ABS_FLOOR",
    "DEFAULT_REL_TOL",
    "DegenerateInput",
    "DeltaParams",
    "DomainError",
    "GridAxis",
    "InequalityId",
    "MeanIneqError",
    "MeanValue",
    "ProbeClaim",
    "SearchBudget",
    "SearchReport",
    "SignCheckReport",
    "ThresholdResult",
    "AuxFunctionId",
    "a_r_fn",
    "a_r_values",
    "alpha_threshold_lower",
    "alpha_threshold_upper",
    "aux_eval",
    "aux_sign_check",
    "bisect",
    "c_constant",
    "check",
    "claimed_bound",
    "counterexample_hunt",
    "delta",
    "equality_witness",
    "finite_difference_probe",
    "gap_exponent_lower",
    "gap_exponent_upper",
    "golden_section_min",
    "log_power_mean",
    "mean_value",
    "min_a_r",
    "order_triple",
    "power_mean",
    "r0_value",
    "sharpness_probe",
    "solve_r0",
    "solve_t1",
    "solve_t2",
    "variance_sigma",
]
