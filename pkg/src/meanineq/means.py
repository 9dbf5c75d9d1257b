"""Weighted power means and the derived comparison functionals.

The central objects are a sample/weight configuration ``(x, q)`` with
``x_i >= 0``, ``q_i > 0`` and ``sum q_i = 1``, the weighted power mean

    M_r(x; q) = (sum_i q_i x_i^r)^(1/r),        M_0 = prod_i x_i^{q_i},

the weighted variance ``sigma = sum_i q_i (x_i - A)^2`` about the
arithmetic mean ``A = M_1``, the three-mean difference ratio

    delta(r, s, t, alpha) = | (M_r^alpha - M_t^alpha) / (M_r^alpha - M_s^alpha) |,

(with ``ln M`` replacing ``M^alpha`` when ``alpha = 0``), and the sharp
comparison constant ``C_{r,s,t}(x)`` that bounds the ratio in terms of the
minimum weight alone.

All operations are pure functions of immutable inputs and are safe for
unrestricted concurrent use.  Power sums are evaluated as max-shifted
log-sums with compensated summation so that exponents up to a few hundred
in magnitude neither overflow nor lose the leading digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DegenerateInput, DomainError

# Default tolerances for equality/validity judgments; callers may override
# per call.  Relative tolerance applies to max(|lhs|, |rhs|, 1).
DEFAULT_REL_TOL = 1e-9
DEFAULT_ABS_FLOOR = 1e-12

# Below this order the direct log-sum formula for M_r loses accuracy to
# cancellation; switch to the second-order expansion around the geometric
# mean instead.
_SMALL_ORDER = 1e-8

_WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Configuration:
    """A sorted vector of nonnegative samples with positive weights summing to 1.

    Samples are sorted ascending on construction (weights are permuted
    along with them); ties are allowed and recorded via :attr:`is_strict`.
    Arrays are made read-only so instances are immutable.
    """

    x: np.ndarray
    q_weights: np.ndarray

    def __post_init__(self) -> None:
        x = np.array(self.x, dtype=float)
        q = np.array(self.q_weights, dtype=float)
        if x.ndim != 1 or q.ndim != 1:
            raise ConfigError("samples and weights must be one-dimensional")
        if x.shape != q.shape:
            raise ConfigError(
                f"length mismatch: {x.size} samples vs {q.size} weights"
            )
        if x.size < 2:
            raise ConfigError("a configuration needs at least two samples")
        if not np.all(np.isfinite(x)) or not np.all(np.isfinite(q)):
            raise ConfigError("samples and weights must be finite")
        if np.any(x < 0):
            raise ConfigError("samples must be nonnegative")
        if np.any(q <= 0):
            raise ConfigError("weights must be strictly positive")
        total = math.fsum(q.tolist())
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ConfigError(f"weights must sum to 1 (got {total!r})")
        order = np.argsort(x, kind="stable")
        x = np.ascontiguousarray(x[order])
        q = np.ascontiguousarray(q[order])
        x.setflags(write=False)
        q.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "q_weights", q)

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def min_weight(self) -> float:
        """The minimum weight, the single quantity the sharp constants depend on."""
        return float(self.q_weights.min())

    @property
    def is_strict(self) -> bool:
        """Whether the samples are strictly increasing (no ties)."""
        return bool(np.all(np.diff(self.x) > 0))

    @property
    def is_constant(self) -> bool:
        return bool(self.x[0] == self.x[-1])

    def scaled(self, c: float) -> "Configuration":
        """The configuration with every sample multiplied by ``c > 0``."""
        if not c > 0:
            raise ConfigError("scale factor must be positive")
        return Configuration(c * self.x, self.q_weights)

    def to_json_dict(self) -> dict:
        return {"x": self.x.tolist(), "q": self.q_weights.tolist()}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "Configuration":
        try:
            return cls(np.asarray(payload["x"]), np.asarray(payload["q"]))
        except KeyError as exc:
            raise ConfigError(f"configuration JSON needs key {exc}") from exc

    def __repr__(self) -> str:
        return f"Configuration(x={self.x.tolist()}, q={self.q_weights.tolist()})"


@dataclass(frozen=True)
class DeltaParams:
    """Parameters (r, s, t, alpha) of the three-mean ratio; r, s, t distinct."""

    r: float
    s: float
    t: float
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if self.r == self.s or self.r == self.t or self.s == self.t:
            raise DomainError("the orders r, s, t must be mutually distinct")
        for name in ("r", "s", "t", "alpha"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")

    def ordered(self) -> "DeltaParams":
        """The same parameters with the orders rearranged descending."""
        r, s, t = sorted((self.r, self.s, self.t), reverse=True)
        return DeltaParams(r, s, t, self.alpha)


@dataclass(frozen=True)
class MeanValue:
    """A mean together with the convention used to report it.

    ``plain`` carries the mean itself; ``log`` carries its natural log,
    the convention used by the ratio functional at ``alpha = 0``.
    """

    value: float
    convention: str = "plain"

    def __post_init__(self) -> None:
        if self.convention not in ("plain", "log"):
            raise DomainError(f"unknown convention {self.convention!r}")
        if not math.isfinite(self.value):
            raise DomainError("MeanValue requires a finite value")


def _weighted_logsumexp(a: np.ndarray, w: np.ndarray) -> float:
    """log(sum_i w_i e^{a_i}) via max shift and compensated summation.

    Entries of ``a`` may be -inf (zero samples) or +inf (zero samples at
    negative order); the result is then -inf/+inf accordingly.
    """
    amax = float(np.max(a))
    if math.isinf(amax):
        return amax
    terms = w * np.exp(a - amax)
    return amax + math.log(math.fsum(terms.tolist()))


def log_power_mean(config: Configuration, r: float) -> float:
    """ln M_r(x; q); -inf when the mean is 0 (zero samples at r <= 0)."""
    if not math.isfinite(r):
        raise DomainError("the order r must be finite; infinite orders are unsupported")
    x = config.x
    q = config.q_weights
    if r == 0.0:
        if x[0] == 0.0:
            return float("-inf")
        return float(np.dot(q, np.log(x)))
    with np.errstate(divide="ignore"):
        logx = np.log(x)
    if abs(r) < _SMALL_ORDER and x[0] > 0.0:
        # M_r = G * exp(r * var(log x) / 2) + O(r^2); avoids the 1/r blowup.
        log_g = float(np.dot(q, logx))
        log_var = float(np.dot(q, (logx - log_g) ** 2))
        return log_g + 0.5 * r * log_var
    return _weighted_logsumexp(r * logx, q) / r


def power_mean(config: Configuration, r: float) -> float:
    """The weighted power mean M_r(x; q).

    For r = 0 this is the weighted geometric mean.  Zero samples give 0
    for r <= 0 and simply drop out of the power sum for r > 0.
    """
    return math.exp(log_power_mean(config, r))


def mean_value(config: Configuration, r: float, convention: str = "plain") -> MeanValue:
    """The mean under the requested reporting convention."""
    if convention == "plain":
        return MeanValue(power_mean(config, r), "plain")
    if convention == "log":
        lv = log_power_mean(config, r)
        if not math.isfinite(lv):
            raise DomainError("log convention undefined for a zero mean")
        return MeanValue(lv, "log")
    raise DomainError(f"unknown convention {convention!r}")


def variance_sigma(config: Configuration) -> float:
    """The weighted variance sum_i q_i (x_i - A)^2; zero iff all samples tie."""
    x = config.x
    q = config.q_weights
    a = float(np.dot(q, x))
    return float(np.dot(q, (x - a) ** 2))


def delta(config: Configuration, params: DeltaParams) -> float:
    """The absolute three-mean difference ratio.

    Computed as |expm1(alpha (ln M_t - ln M_r))| / |expm1(alpha (ln M_s - ln M_r))|
    so that the scale of x cancels exactly and neither M^alpha overflows
    nor the near-equal-mean differences lose precision.  At alpha = 0 the
    differences of ln M are used directly.
    """
    if config.is_constant:
        raise DegenerateInput("the ratio is 0/0 when all samples are equal")
    lr = log_power_mean(config, params.r)
    ls = log_power_mean(config, params.s)
    lt = log_power_mean(config, params.t)
    if lr == float("-inf"):
        return _delta_with_zero_reference(ls, lt, params.alpha)
    if params.alpha == 0.0:
        num = lr - lt
        den = lr - ls
    else:
        num = _expm1_gap(params.alpha, lt, lr)
        den = _expm1_gap(params.alpha, ls, lr)
    if math.isnan(num) or math.isnan(den):
        raise DegenerateInput("ratio undefined: both means in a difference are zero")
    if den == 0.0:
        raise DegenerateInput("ratio denominator vanished")
    return abs(num / den)


def _delta_with_zero_reference(ls: float, lt: float, alpha: float) -> float:
    """The ratio when the first mean vanishes (zero samples, order <= 0).

    For alpha > 0 it reduces to (M_t / M_s)^alpha; for alpha <= 0 the
    vanishing mean dominates both differences, giving 1 in the limit.
    """
    if alpha <= 0.0:
        return 1.0
    if ls == float("-inf"):
        if lt == float("-inf"):
            raise DegenerateInput("ratio undefined: both means in a difference are zero")
        raise DegenerateInput("ratio denominator vanished")
    if lt == float("-inf"):
        return 0.0
    return math.exp(alpha * (lt - ls))


def _expm1_gap(alpha: float, la: float, lb: float) -> float:
    """expm1(alpha * (la - lb)) with -inf log-means handled (zero means)."""
    gap = la - lb
    if math.isnan(gap):  # both -inf: M_a = M_b = 0
        return float("nan")
    arg = alpha * gap
    if arg == float("-inf"):
        return -1.0
    return math.expm1(arg)


def c_constant(r: float, s: float, t: float, xarg: float) -> float:
    """The sharp comparison constant C_{r,s,t}(xarg) for r > s > t >= 0.

        C_{r,s,t}(x) = (1 - x^{1/t - 1/r}) / (1 - x^{1/s - 1/r}),  t > 0,
        C_{r,s,0}(x) = 1 / (1 - x^{1/s - 1/r}),

    defined for 0 < xarg < 1, where it exceeds 1.
    """
    if not (r > s > t >= 0):
        raise DomainError(f"orders must satisfy r > s > t >= 0 (got {(r, s, t)})")
    if not 0.0 < xarg < 1.0:
        raise DomainError(f"argument must lie strictly between 0 and 1 (got {xarg})")
    den = 1.0 - xarg ** (1.0 / s - 1.0 / r)
    if t == 0.0:
        return 1.0 / den
    return (1.0 - xarg ** (1.0 / t - 1.0 / r)) / den


def order_triple(a: float, b: float, c: float) -> tuple[float, float, float]:
    """Rearrange three distinct nonnegative orders descending as (r, s, t)."""
    r, s, t = sorted((a, b, c), reverse=True)
    if r == s or s == t:
        raise DomainError(f"orders must be mutually distinct (got {(a, b, c)})")
    if t < 0:
        raise DomainError(f"orders must be nonnegative (got {(a, b, c)})")
    return float(r), float(s), float(t)
