"""Randomized search over configurations: sharpness probes and hunts.

Three capabilities live here:

* :func:`sharpness_probe` evaluates the three-mean ratio at the exact
  two-point boundary configuration (a zero sample next to a unit sample,
  extreme weight on one side) that attains the sharp constant, and also
  scans random configurations with the minimum weight pinned, reporting
  how much of the gap to the bound remains unclosed.

* :func:`counterexample_hunt` minimizes an inequality's relative residual
  over configurations by seeded random restarts followed by coordinate
  descent with adaptive step halving, declaring a violation only when the
  residual clears a safety margin well above float noise.  Hypothesis
  ranges are bypassed (force evaluation), which is how regimes beyond a
  proven validity frontier are probed.

* :func:`finite_difference_probe` numerically estimates the partial
  derivatives whose signs drive the reduction arguments (derivative of
  the upper/lower ratio functionals in the extreme samples, and of the
  variance-corrected half-mean gap in its weight parameter).

Searches are deterministic functions of (problem, budget): every restart
derives its own random stream from (seed, n, restart index), so a
parallel execution order could not change the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateInput, DomainError
from .inequalities import CheckStatus, InequalityId, check
from .means import (
    Configuration,
    DeltaParams,
    c_constant,
    delta,
    order_triple,
    power_mean,
    variance_sigma,
)

# A hunt only declares a violation below this relative residual; the check
# tolerance itself is far tighter, so a declared violation always
# re-checks as Violated.
VIOLATION_REL_TOL = 1e-7

_LOG_CLIP = 40.0


@dataclass(frozen=True)
class SearchBudget:
    """Evaluation budget and seeding for one search run."""

    max_evals: int = 100_000
    seed: int = 0
    n_range: tuple[int, int] = (2, 4)
    restarts: int = 20

    def __post_init__(self) -> None:
        if self.max_evals < 1:
            raise DomainError("max_evals must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must fit in 64 unsigned bits")
        lo, hi = self.n_range
        if lo < 2 or hi < lo:
            raise DomainError("n_range must satisfy 2 <= lo <= hi")
        if self.restarts < 1:
            raise DomainError("restarts must be at least 1")


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search; carries the full best configuration for replay."""

    verdict: str  # "NoViolationFound" | "ViolationFound" | "SupremumGap"
    best_config: Configuration
    best_residual: float
    evals_used: int
    seed: int
    supremum_gap: float | None = None
    boundary_gap: float | None = None

    def to_json_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "best_residual": self.best_residual,
            "evals_used": self.evals_used,
            "seed": self.seed,
            "best_config": self.best_config.to_json_dict(),
        }
        if self.supremum_gap is not None:
            out["supremum_gap"] = self.supremum_gap
        if self.boundary_gap is not None:
            out["boundary_gap"] = self.boundary_gap
        return out


def _stream(seed: int, n: int, restart: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n, restart])))


def _pinned_weights(rng, n: int, q_target: float, max_tries: int = 200):
    """Weights with min exactly q_target: one pinned slot, rest resampled."""
    for _ in range(max_tries):
        rest = (1.0 - q_target) * rng.dirichlet(np.ones(n - 1))
        if rest.min() >= q_target - 1e-12:
            slot = int(rng.integers(n))
            return np.insert(rest, slot, q_target)
    return None


def sharpness_probe(
    id: InequalityId,
    *,
    triple,
    alpha: float = 1.0,
    q_target: float,
    budget: SearchBudget = SearchBudget(),
) -> SearchReport:
    """How close the sharp constant is approached at minimum weight q_target.

    The two-point boundary configuration attains the bound exactly (up to
    float roundoff; its gap is reported as ``boundary_gap``), so the
    overall supremum gap is essentially zero; the random scan documents
    that no pinned-weight configuration beats it.  Sampled configurations
    with relative spread below 10% are skipped: the ratio is a quotient of
    vanishing differences there, where evaluation noise would swamp the
    picture, and the supremum is approached at maximal spread anyway.
    """
    id = InequalityId(id)
    if id not in (InequalityId.DIANANDA_UPPER, InequalityId.DIANANDA_LOWER):
        raise DomainError("sharpness probes apply to the two general three-mean bounds")
    if not 0.0 < q_target <= 0.5:
        raise DomainError("q_target must lie in (0, 1/2]")
    r, s, t = order_triple(*triple)
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    upper = id is InequalityId.DIANANDA_UPPER
    params = DeltaParams(r, s, t, alpha)
    if upper:
        bound = c_constant(r, s, t, (1.0 - q_target) ** alpha)
        boundary = Configuration([0.0, 1.0], [q_target, 1.0 - q_target])
    else:
        bound = c_constant(r, s, t, q_target**alpha)
        boundary = Configuration([0.0, 1.0], [1.0 - q_target, q_target])
    best_cfg = boundary
    best_delta = delta(boundary, params)
    boundary_gap = abs(bound - best_delta)
    evals = 1
    lo_n, hi_n = budget.n_range
    feasible = [n for n in range(lo_n, hi_n + 1) if q_target <= 1.0 / n + 1e-12]
    weight_total = sum(feasible) or 1
    for n in feasible:
        n_budget = max(1, budget.max_evals * n // weight_total)
        per_restart = max(1, n_budget // budget.restarts)
        for k in range(budget.restarts):
            rng = _stream(budget.seed, n, k)
            for _ in range(per_restart):
                if evals >= budget.max_evals:
                    break
                w = _pinned_weights(rng, n, q_target)
                if w is None:
                    break
                x = np.sort(rng.uniform(0.0, 1.0, n))
                if rng.random() < 0.5:
                    x[0] = 0.0
                if x[-1] - x[0] < 0.1 * x[-1] or x[-1] <= 0.0:
                    continue
                cfg = Configuration(x, w)
                try:
                    d = delta(cfg, params)
                except DegenerateInput:
                    continue
                evals += 1
                better = d > best_delta if upper else d < best_delta
                if better:
                    best_cfg, best_delta = cfg, d
    gap = abs(bound - best_delta)
    signed = (bound - best_delta) if upper else (best_delta - bound)
    return SearchReport(
        verdict="SupremumGap",
        best_config=best_cfg,
        best_residual=signed,
        evals_used=evals,
        seed=budget.seed,
        supremum_gap=gap,
        boundary_gap=boundary_gap,
    )


def counterexample_hunt(
    id: InequalityId,
    *,
    triple=None,
    alpha=None,
    r=None,
    s=None,
    budget: SearchBudget = SearchBudget(),
) -> SearchReport:
    """Minimize an inequality's relative residual over configurations.

    Random restarts draw samples log-uniformly and weights from a
    corner-favoring Dirichlet; each start is refined by coordinate descent
    in log coordinates (multiplicative moves keep samples positive and
    weights normalized) with step halving once no move improves.  Returns
    ViolationFound when the best relative residual clears the safety
    margin; otherwise the most adverse configuration seen.
    """
    id = InequalityId(id)
    budget = budget

    def objective(cfg: Configuration) -> float:
        try:
            report = check(id, cfg, triple=triple, alpha=alpha, r=r, s=s, force=True)
        except DomainError:
            return math.inf  # e.g. a bound argument underflowed out of range
        if report.status is CheckStatus.DEGENERATE:
            return math.inf
        rel = report.residual_rel
        return rel if not math.isnan(rel) else math.inf

    best_cfg: Configuration | None = None
    best_rel = math.inf
    evals = 0
    lo_n, hi_n = budget.n_range
    weight_total = sum(range(lo_n, hi_n + 1))
    for n in range(lo_n, hi_n + 1):
        n_budget = max(1, budget.max_evals * n // weight_total)
        per_restart = max(2, n_budget // budget.restarts)
        for k in range(budget.restarts):
            if evals >= budget.max_evals:
                break
            rng = _stream(budget.seed, n, k)
            u0 = np.concatenate([
                rng.uniform(-math.log(50.0), math.log(50.0), n),  # log samples
                rng.normal(0.0, 1.5, n),                          # weight logits
            ])
            allowance = min(per_restart, budget.max_evals - evals)
            cfg, rel, used = _descend(objective, u0, n, allowance, rng)
            evals += used
            if rel < best_rel:
                best_cfg, best_rel = cfg, rel
    if best_cfg is None:  # pragma: no cover - budget of 0 restarts is rejected
        raise DomainError("hunt produced no evaluations")
    verdict = "ViolationFound" if best_rel < -VIOLATION_REL_TOL else "NoViolationFound"
    return SearchReport(
        verdict=verdict,
        best_config=best_cfg,
        best_residual=best_rel,
        evals_used=evals,
        seed=budget.seed,
    )


def _to_config(u: np.ndarray, n: int) -> Configuration:
    logx = np.clip(u[:n], -_LOG_CLIP, _LOG_CLIP)
    logits = np.clip(u[n:], -_LOG_CLIP, _LOG_CLIP)
    w = np.exp(logits - logits.max())
    w = w / w.sum()
    return Configuration(np.exp(logx), w)


def _descend(objective, u0, n, allowance, rng, step0=0.6, min_step=1e-7):
    """Coordinate descent with adaptive step halving in log coordinates."""
    u = u0.copy()
    cfg = _to_config(u, n)
    f = objective(cfg)
    used = 1
    best_cfg, best_f = cfg, f
    step = step0
    dims = u.size
    while used < allowance and step > min_step:
        improved = False
        for i in rng.permutation(dims):
            if used >= allowance:
                break
            for sign in (1.0, -1.0):
                if used >= allowance:
                    break
                trial = u.copy()
                trial[i] += sign * step
                cfg_t = _to_config(trial, n)
                f_t = objective(cfg_t)
                used += 1
                if f_t < f:
                    u, f = trial, f_t
                    if f < best_f:
                        best_cfg, best_f = cfg_t, f
                    improved = True
                    break
        if not improved:
            step *= 0.5
    return best_cfg, best_f, used


class ProbeClaim(str, Enum):
    """Monotonicity claims checked by finite differences."""

    SMALLEST_SAMPLE_SLOPE = "smallest-sample-slope"
    LARGEST_SAMPLE_SLOPE = "largest-sample-slope"
    WEIGHT_PARAM_SLOPE = "weight-param-slope"


def _upper_ratio_functional(config: Configuration, r: float, a: float) -> float:
    q = config.min_weight
    p = (1.0 + a) * r
    am = power_mean(config, 1.0)
    mr = power_mean(config, r)
    g = power_mean(config, 0.0)
    return (am**p - (1.0 - q) ** ((r - 1.0) * p / r) * mr**p) / g**p


def _lower_ratio_functional(config: Configuration, r: float, a: float) -> float:
    q = config.min_weight
    p = (1.0 - a) * r
    am = power_mean(config, 1.0)
    mr = power_mean(config, r)
    g = power_mean(config, 0.0)
    return (am**p - q ** ((r - 1.0) * p / r) * mr**p) / g**p


def _half_mean_gap_functional(config: Configuration, r: float, qp: float) -> float:
    w = qp ** (2.0 - 1.0 / r)
    half = power_mean(config, 0.5)
    mr = power_mean(config, r)
    g = power_mean(config, 0.0)
    sigma = variance_sigma(config)
    return half - w * mr - (1.0 - w) * g - (0.5 - r * w) * sigma / (2.0 * config.x[0])


def _richardson(f, v0: float, h: float) -> float:
    def central(hh: float) -> float:
        return (f(v0 + hh) - f(v0 - hh)) / (2.0 * hh)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def finite_difference_probe(
    claim: ProbeClaim,
    config: Configuration,
    *,
    r: float,
    a: float | None = None,
) -> float:
    """Richardson-refined central difference of a proof-driving derivative.

    The caller asserts the sign; the claims hold for parameters inside the
    corresponding proven ranges (upper: 1 < r <= 2 with a below the
    profile minimum; lower: r >= 2 with a below min(1 - 1/r, profile
    minimum); weight-parameter: 1/2 < r <= 2).
    """
    claim = ProbeClaim(claim)
    if config.x[0] <= 0.0:
        raise DomainError("finite-difference probes need x_1 > 0")
    if claim is ProbeClaim.SMALLEST_SAMPLE_SLOPE:
        if a is None or not (1.0 < r <= 2.0) or a <= 0.0:
            raise DomainError("the smallest-sample slope needs 1 < r <= 2 and a > 0")
        x = config.x.copy()
        q = config.q_weights

        def f(v: float) -> float:
            xs = x.copy()
            xs[0] = v
            return _upper_ratio_functional(Configuration(xs, q), r, a)

        return _richardson(f, float(x[0]), 1e-6 * float(x[0]))
    if claim is ProbeClaim.LARGEST_SAMPLE_SLOPE:
        if a is None or not r >= 2.0 or not 0.0 < a < 1.0:
            raise DomainError("the largest-sample slope needs r >= 2 and 0 < a < 1")
        x = config.x.copy()
        q = config.q_weights

        def f(v: float) -> float:
            xs = x.copy()
            xs[-1] = v
            return _lower_ratio_functional(Configuration(xs, q), r, a)

        return _richardson(f, float(x[-1]), 1e-6 * float(x[-1]))
    if claim is ProbeClaim.WEIGHT_PARAM_SLOPE:
        if not 0.5 < r <= 2.0:
            raise DomainError("the weight-parameter slope needs 1/2 < r <= 2")
        qp = config.min_weight

        def f(v: float) -> float:
            return _half_mean_gap_functional(config, r, v)

        return _richardson(f, qp, 1e-6 * qp)
    raise DomainError(f"unknown probe claim {claim!r}")
