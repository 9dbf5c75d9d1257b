"""Named mean inequalities as signed residuals with validity verdicts.

Every tag is an inequality of the form ``lhs <= rhs`` between expressions
in the weighted power means of one configuration, oriented so that the
claim holds exactly when ``residual = rhs - lhs >= 0``:

====================== ========================================================
tag                     claim (q = min weight, A = M_1, G = M_0)
====================== ========================================================
diananda-upper          delta(r,s,t,alpha) <= C_{r,s,t}((1-q)^alpha)
diananda-lower          C_{r,s,t}(q^alpha) <= delta(r,s,t,alpha)
diananda-base-upper     M_{1/2} <= (1-q) A + q G
diananda-base-lower     q A + (1-q) G <= M_{1/2}
mix-variance-upper      M_{1/r} - q^{r-1} A - (1-q^{r-1}) G
                          <= (1/r - q^{r-1}) sigma / (2 x_1),      r >= 2
mix-variance-lower      (1/r - (1-q)^{r-1}) sigma / (2 x_1)
                          <= M_{1/r} - (1-q)^{r-1} A - (1-(1-q)^{r-1}) G,
                                                                   1 < r <= 2
cartwright-field-lower  (r-s) sigma / (2 x_n) <= M_r - M_s,        r > s
cartwright-field-upper  M_r - M_s <= (r-s) sigma / (2 x_1),        r > s
mg-sigma-lower          r sigma / (2 x_n) <= M_r - G
mg-sigma-upper          M_r - G <= r sigma / (2 x_1)
half-mean-lower         q^{2-1/r} M_r + (1-q^{2-1/r}) G <= M_{1/2},
                                                                   1/2 < r <= 1
half-mean-upper         M_{1/2} <= (1-q)^{2-1/r} M_r + (1-(1-q)^{2-1/r}) G,
                                                                   r >= 1
half-mean-var-upper     M_{1/2} - q^{2-1/r} M_r - (1-q^{2-1/r}) G
                          <= (1/2 - r q^{2-1/r}) sigma / (2 x_1),  r0 <= r <= 1
half-mean-var-lower     (1/2 - r (1-q)^{2-1/r}) sigma / (2 x_1)
                          <= M_{1/2} - (1-q)^{2-1/r} M_r - (1-(1-q)^{2-1/r}) G,
                                                                   1 <= r <= 2
====================== ========================================================

The mg-sigma pair is a candidate family whose exact validity frontier in r
is probed by the search module rather than assumed, so its only hypothesis
is x_1 > 0.  A ``force`` flag evaluates any tag outside its stated
parameter hypotheses (the counterexample hunter relies on this); the
structural requirements of the formulas themselves are never bypassed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateInput, DomainError
from .means import (
    DEFAULT_ABS_FLOOR,
    DEFAULT_REL_TOL,
    Configuration,
    DeltaParams,
    c_constant,
    delta,
    order_triple,
    power_mean,
    variance_sigma,
)
from .thresholds import r0_value

_HYPOTHESIS_SLACK = 1e-12


class InequalityId(str, Enum):
    """One tag per named inequality; values double as the CLI names."""

    DIANANDA_UPPER = "diananda-upper"
    DIANANDA_LOWER = "diananda-lower"
    DIANANDA_BASE_UPPER = "diananda-base-upper"
    DIANANDA_BASE_LOWER = "diananda-base-lower"
    MIX_VARIANCE_UPPER = "mix-variance-upper"
    MIX_VARIANCE_LOWER = "mix-variance-lower"
    CARTWRIGHT_FIELD_LOWER = "cartwright-field-lower"
    CARTWRIGHT_FIELD_UPPER = "cartwright-field-upper"
    MG_SIGMA_LOWER = "mg-sigma-lower"
    MG_SIGMA_UPPER = "mg-sigma-upper"
    HALF_MEAN_LOWER = "half-mean-lower"
    HALF_MEAN_UPPER = "half-mean-upper"
    HALF_MEAN_VAR_UPPER = "half-mean-var-upper"
    HALF_MEAN_VAR_LOWER = "half-mean-var-lower"


class CheckStatus(str, Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    EQUALITY = "Equality"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class CheckReport:
    """One inequality evaluation, oriented so residual >= 0 means it holds."""

    id: InequalityId
    params: dict
    lhs: float
    rhs: float
    residual: float
    residual_rel: float
    status: CheckStatus
    q_used: float

    def to_json_dict(self) -> dict:
        def _num(v: float):
            return None if (v != v or math.isinf(v)) else v

        return {
            "id": self.id.value,
            "params": self.params,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "residual": _num(self.residual),
            "residual_rel": _num(self.residual_rel),
            "status": self.status.value,
            "q": self.q_used,
        }


def _require(cond: bool, force: bool, message: str) -> None:
    if not cond and not force:
        raise DomainError(message)


def _need_positive_min(config: Configuration, force: bool) -> float:
    x1 = float(config.x[0])
    if x1 <= 0.0 and not force:
        raise DomainError("this inequality is stated for x_1 > 0")
    return x1


def _need_param(value, name: str, tag: InequalityId):
    if value is None:
        raise DomainError(f"{tag.value} requires parameter {name!r}")
    return value


def _eval_diananda(config, *, triple, alpha, upper: bool, force: bool):
    r, s, t = order_triple(*_need_param(triple, "triple",
                                        InequalityId.DIANANDA_UPPER if upper
                                        else InequalityId.DIANANDA_LOWER))
    alpha = float(alpha if alpha is not None else 1.0)
    _require(alpha > 0.0, force, "the exponent alpha must be positive")
    params = {"triple": [r, s, t], "alpha": alpha}
    q = config.min_weight
    d = delta(config, DeltaParams(r, s, t, alpha))
    if upper:
        bound = c_constant(r, s, t, (1.0 - q) ** alpha)
        return d, bound, params
    bound = c_constant(r, s, t, q**alpha)
    return bound, d, params


def _eval_base(config, *, upper: bool):
    q = config.min_weight
    a = power_mean(config, 1.0)
    g = power_mean(config, 0.0)
    half = power_mean(config, 0.5)
    if upper:
        return half, (1.0 - q) * a + q * g, {}
    return q * a + (1.0 - q) * g, half, {}


def _eval_mix_variance(config, *, r, upper: bool, force: bool):
    tag = InequalityId.MIX_VARIANCE_UPPER if upper else InequalityId.MIX_VARIANCE_LOWER
    r = float(_need_param(r, "r", tag))
    if r == 0.0:
        raise DomainError("the mean order r must be nonzero")
    if upper:
        _require(r >= 2.0, force, "the upper mix bound needs r >= 2")
    else:
        _require(1.0 < r <= 2.0, force, "the lower mix bound needs 1 < r <= 2")
    x1 = _need_positive_min(config, force)
    q = config.min_weight
    w = q ** (r - 1.0) if upper else (1.0 - q) ** (r - 1.0)
    a = power_mean(config, 1.0)
    g = power_mean(config, 0.0)
    m = power_mean(config, 1.0 / r)
    combo = m - w * a - (1.0 - w) * g
    corr = _safe_div((1.0 / r - w) * variance_sigma(config), 2.0 * x1)
    params = {"r": r}
    if upper:
        return combo, corr, params
    return corr, combo, params


def _eval_cartwright_field(config, *, r, s, upper: bool, force: bool):
    tag = (InequalityId.CARTWRIGHT_FIELD_UPPER if upper
           else InequalityId.CARTWRIGHT_FIELD_LOWER)
    r = float(_need_param(r, "r", tag))
    s = float(_need_param(s, "s", tag))
    if not r > s:
        raise DomainError("the mean-difference bounds need r > s")
    params = {"r": r, "s": s}
    diff = power_mean(config, r) - power_mean(config, s)
    sigma = variance_sigma(config)
    if upper:
        x1 = _need_positive_min(config, force)
        return diff, _safe_div((r - s) * sigma, 2.0 * x1), params
    _need_positive_min(config, force)
    xn = float(config.x[-1])
    return _safe_div((r - s) * sigma, 2.0 * xn), diff, params


def _eval_mg_sigma(config, *, r, upper: bool, force: bool):
    tag = InequalityId.MG_SIGMA_UPPER if upper else InequalityId.MG_SIGMA_LOWER
    r = float(_need_param(r, "r", tag))
    if r == 0.0:
        raise DomainError("the mean order r must be nonzero")
    params = {"r": r}
    diff = power_mean(config, r) - power_mean(config, 0.0)
    sigma = variance_sigma(config)
    if upper:
        x1 = _need_positive_min(config, force)
        return diff, _safe_div(r * sigma, 2.0 * x1), params
    _need_positive_min(config, force)
    xn = float(config.x[-1])
    return _safe_div(r * sigma, 2.0 * xn), diff, params


def _eval_half_mean(config, *, r, upper: bool, force: bool):
    tag = InequalityId.HALF_MEAN_UPPER if upper else InequalityId.HALF_MEAN_LOWER
    r = float(_need_param(r, "r", tag))
    if r == 0.0:
        raise DomainError("the mean order r must be nonzero")
    if upper:
        _require(r >= 1.0, force, "the upper half-mean bound needs r >= 1")
    else:
        _require(0.5 < r <= 1.0, force, "the lower half-mean bound needs 1/2 < r <= 1")
    q = config.min_weight
    w = (1.0 - q) ** (2.0 - 1.0 / r) if upper else q ** (2.0 - 1.0 / r)
    half = power_mean(config, 0.5)
    combo = w * power_mean(config, r) + (1.0 - w) * power_mean(config, 0.0)
    params = {"r": r}
    if upper:
        return half, combo, params
    return combo, half, params


def _eval_half_mean_var(config, *, r, upper: bool, force: bool):
    tag = (InequalityId.HALF_MEAN_VAR_UPPER if upper
           else InequalityId.HALF_MEAN_VAR_LOWER)
    r = float(_need_param(r, "r", tag))
    if r == 0.0:
        raise DomainError("the mean order r must be nonzero")
    if upper:
        _require(
            r0_value() - _HYPOTHESIS_SLACK <= r <= 1.0 + _HYPOTHESIS_SLACK,
            force,
            "the variance-corrected upper half-mean bound needs r0 <= r <= 1",
        )
    else:
        _require(
            1.0 - _HYPOTHESIS_SLACK <= r <= 2.0 + _HYPOTHESIS_SLACK,
            force,
            "the variance-corrected lower half-mean bound needs 1 <= r <= 2",
        )
    x1 = _need_positive_min(config, force)
    q = config.min_weight
    w = q ** (2.0 - 1.0 / r) if upper else (1.0 - q) ** (2.0 - 1.0 / r)
    half = power_mean(config, 0.5)
    combo = half - w * power_mean(config, r) - (1.0 - w) * power_mean(config, 0.0)
    corr = _safe_div((0.5 - r * w) * variance_sigma(config), 2.0 * x1)
    params = {"r": r}
    if upper:
        return combo, corr, params
    return corr, combo, params


def _safe_div(num: float, den: float) -> float:
    if den == 0.0:
        if num == 0.0:
            return 0.0
        return math.copysign(math.inf, num)
    return num / den


def _evaluate(id: InequalityId, config, *, triple, alpha, r, s, force):
    if id is InequalityId.DIANANDA_UPPER:
        return _eval_diananda(config, triple=triple, alpha=alpha, upper=True, force=force)
    if id is InequalityId.DIANANDA_LOWER:
        return _eval_diananda(config, triple=triple, alpha=alpha, upper=False, force=force)
    if id is InequalityId.DIANANDA_BASE_UPPER:
        return _eval_base(config, upper=True)
    if id is InequalityId.DIANANDA_BASE_LOWER:
        return _eval_base(config, upper=False)
    if id is InequalityId.MIX_VARIANCE_UPPER:
        return _eval_mix_variance(config, r=r, upper=True, force=force)
    if id is InequalityId.MIX_VARIANCE_LOWER:
        return _eval_mix_variance(config, r=r, upper=False, force=force)
    if id is InequalityId.CARTWRIGHT_FIELD_UPPER:
        return _eval_cartwright_field(config, r=r, s=s, upper=True, force=force)
    if id is InequalityId.CARTWRIGHT_FIELD_LOWER:
        return _eval_cartwright_field(config, r=r, s=s, upper=False, force=force)
    if id is InequalityId.MG_SIGMA_UPPER:
        return _eval_mg_sigma(config, r=r, upper=True, force=force)
    if id is InequalityId.MG_SIGMA_LOWER:
        return _eval_mg_sigma(config, r=r, upper=False, force=force)
    if id is InequalityId.HALF_MEAN_UPPER:
        return _eval_half_mean(config, r=r, upper=True, force=force)
    if id is InequalityId.HALF_MEAN_LOWER:
        return _eval_half_mean(config, r=r, upper=False, force=force)
    if id is InequalityId.HALF_MEAN_VAR_UPPER:
        return _eval_half_mean_var(config, r=r, upper=True, force=force)
    if id is InequalityId.HALF_MEAN_VAR_LOWER:
        return _eval_half_mean_var(config, r=r, upper=False, force=force)
    raise DomainError(f"unknown inequality tag {id!r}")


def check(
    id: InequalityId,
    config: Configuration,
    *,
    triple=None,
    alpha=None,
    r=None,
    s=None,
    force: bool = False,
    rel_tol: float | None = None,
    abs_floor: float | None = None,
) -> CheckReport:
    """Evaluate one inequality tag on one configuration.

    The residual is rhs - lhs with the sides oriented so that a
    nonnegative residual means the claim holds; residual_rel divides by
    max(|lhs|, |rhs|, 1) so verdicts are scale-free.  With ``force`` the
    stated parameter-range hypotheses are skipped and the raw residual is
    reported, which is how regimes beyond the proven frontier are probed.
    """
    rel_tol = DEFAULT_REL_TOL if rel_tol is None else rel_tol
    abs_floor = DEFAULT_ABS_FLOOR if abs_floor is None else abs_floor
    id = InequalityId(id)
    q = config.min_weight
    try:
        lhs, rhs, params = _evaluate(
            id, config, triple=triple, alpha=alpha, r=r, s=s, force=force
        )
    except DegenerateInput:
        nan = float("nan")
        return CheckReport(id, _echo_params(triple=triple, alpha=alpha, r=r, s=s),
                           nan, nan, nan, nan, CheckStatus.DEGENERATE, q)
    residual = rhs - lhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    if math.isnan(residual):
        return CheckReport(id, params, lhs, rhs, residual, residual,
                           CheckStatus.DEGENERATE, q)
    if math.isinf(residual):
        status = CheckStatus.HOLDS if residual > 0 else CheckStatus.VIOLATED
        return CheckReport(id, params, lhs, rhs, residual,
                           math.copysign(math.inf, residual), status, q)
    residual_rel = residual / scale
    tol = max(rel_tol * scale, abs_floor)
    if abs(residual) <= tol:
        status = CheckStatus.EQUALITY
    elif residual < 0.0:
        status = CheckStatus.VIOLATED
    else:
        status = CheckStatus.HOLDS
    return CheckReport(id, params, lhs, rhs, residual, residual_rel, status, q)


def _echo_params(*, triple, alpha, r, s) -> dict:
    out: dict = {}
    if triple is not None:
        out["triple"] = [float(v) for v in triple]
    if alpha is not None:
        out["alpha"] = float(alpha)
    if r is not None:
        out["r"] = float(r)
    if s is not None:
        out["s"] = float(s)
    return out


def equality_witness(
    id: InequalityId,
    config: Configuration,
    *,
    triple=None,
    alpha=None,
    r=None,
    s=None,
    tol: float = 1e-12,
) -> bool:
    """Whether the configuration matches a documented equality case of the tag.

    Documented cases: constant samples (every tag); for the
    variance-corrected upper half-mean bound the special point r = 1,
    n = 2, q = 1/2; and for the two general three-mean bounds the
    two-point configurations with x_1 = 0 and the minimum weight sitting
    on the zero (upper) respectively the positive (lower) sample.
    """
    id = InequalityId(id)
    if config.is_constant:
        return True
    if id is InequalityId.HALF_MEAN_VAR_UPPER:
        return (
            r is not None
            and abs(float(r) - 1.0) <= tol
            and config.n == 2
            and abs(config.min_weight - 0.5) <= tol
        )
    if id in (InequalityId.DIANANDA_UPPER, InequalityId.DIANANDA_LOWER):
        if config.n != 2 or config.x[0] != 0.0:
            return False
        w_zero, w_pos = float(config.q_weights[0]), float(config.q_weights[1])
        if id is InequalityId.DIANANDA_UPPER:
            return w_zero <= w_pos + tol
        return w_pos <= w_zero + tol
    return False
