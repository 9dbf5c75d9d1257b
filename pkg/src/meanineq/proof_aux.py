"""A catalog of scalar certificate functions with grid-testable sign claims.

Each tag packages one scalar function that carries the weight of a step in
the validity proofs, together with the sign (or bound) it is claimed to
satisfy on a stated domain.  ``aux_eval`` evaluates the raw value at one
point; ``aux_sign_check`` sweeps a grid over the claimed domain and
reports the worst point.

========================= ====================================================
tag (args)                 function and claim
========================= ====================================================
core-upper (r, a, t)       (1-t^r)/((1+t)^{r-1}(1-t)) - ((1+t)^r/(1+t^r))^a
                           >= 0 for 1 < r <= 2, a <= min-profile(r)
core-lower (r, a, t)       (1+t)^{r-1}(1-t)/(1-t^r) - ((1+t)^r/(1+t^r))^a
                           >= 0 for r >= 2, a <= min(1-1/r, min-profile(r))
shifted-ratio-monotone     finite difference in s of
  (r, p, s, z)             ln[(z+s)^{p-1}/(z^r+s)^{p/r-1}]
                           >= 0 for z > 1, p >= r > 1, 0 <= s <= 1
linear-gap-bound (r, a, t) gap(r, t) - a r t >= 0 where gap is the scalar
                           core gap (upper branch for 1 < r < 2, lower for
                           r > 2), for a up to the solved gap exponent
binomial-chain (r, t)      (1+t)^{r-1} - (1-t^r)/(1-t) - (r-2) t >= 0,
                           r >= 4
growth-ratio-monotone      d/dr [(1+t)^r/(1-t^r)] >= 0 for r >= 2,
  (r, t)                   0 < t < 1
envelope-hi-weight (q, r)  (1-2q)/3 + (r-1/3) q^{2-1/r} + (2/3) q^{3-1/r}
                           <= 1/2 for 0 < q <= 1/2, r in [r0, 1]
envelope-lo-weight (q, r)  ((1-r)(2r-1)(1-2q)/3 + r) q^{2-1/r} <= 1/2,
                           same domain
tangent-slope (q, r)       -1/2 - 2q + 2r q^{2-1/r} + 2 q^{3-1/r} <= 0 for
                           0 < q <= 1/3, r in [r0, 1]; vanishes at q = 1/3,
                           r = r0
tangent-cubic (x, q, r)    -1/2 + q^{2-1/r}(1-r) x + (1-q^{2-1/r}) x^{1-2q}
                           - (1/2 - r q^{2-1/r}) x^3 <= 0 for x >= 1,
                           q <= 1/3, r in [r0, 1]; vanishes at x = 1
exponent-margin (x, r)     r x^{2-1/r} - 1/2 - x + x^{3-1/r} >= 0 for
                           3/4 <= x <= 1, 1 <= r <= 2
three-sample-lower         y^E - q2 y/(1-q3) - q1/(1-q3) >= 0 for y >= 1,
  (y, q1, q2, q3, r)       1 <= r <= 2 and admissible weights, where
                           E = q2 / (r + 1 - q3 - (r-1/2)/(1-(1-q)^{2-1/r}))
                           and admissible means that denominator is > 0
========================= ====================================================

Removable 0/0 points (t at 1 for the core/gap/chain functions) are handled
by explicit limit branches within 1e-8 of the singularity.  All functions
broadcast over numpy arrays; grid points are independent, so checks may be
partitioned across workers and merged by taking the pointwise worst.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import DomainError
from .thresholds import (
    alpha_threshold_lower,
    alpha_threshold_upper,
    min_a_r,
    r0_value,
)

_SINGULAR_T = 1e-8
DEFAULT_SIGN_TOL = 1e-10
MAX_GRID_POINTS = 1_000_000


class AuxFunctionId(str, Enum):
    CORE_UPPER = "core-upper"
    CORE_LOWER = "core-lower"
    SHIFTED_RATIO_MONOTONE = "shifted-ratio-monotone"
    LINEAR_GAP_BOUND = "linear-gap-bound"
    BINOMIAL_CHAIN = "binomial-chain"
    GROWTH_RATIO_MONOTONE = "growth-ratio-monotone"
    ENVELOPE_HI_WEIGHT = "envelope-hi-weight"
    ENVELOPE_LO_WEIGHT = "envelope-lo-weight"
    TANGENT_SLOPE = "tangent-slope"
    TANGENT_CUBIC = "tangent-cubic"
    EXPONENT_MARGIN = "exponent-margin"
    THREE_SAMPLE_LOWER = "three-sample-lower"


@dataclass(frozen=True)
class GridAxis:
    """One axis of a rectangular check grid."""

    lo: float
    hi: float
    count: int
    open_lo: bool = False
    open_hi: bool = False
    log: bool = False

    def points(self) -> np.ndarray:
        if self.count < 1:
            raise DomainError("axis count must be positive")
        n = self.count + int(self.open_lo) + int(self.open_hi)
        if self.log:
            pts = np.geomspace(self.lo, self.hi, n)
        else:
            pts = np.linspace(self.lo, self.hi, n)
        start = 1 if self.open_lo else 0
        stop = -1 if self.open_hi else None
        return pts[start:stop]

    @classmethod
    def from_json_dict(cls, payload: dict) -> "GridAxis":
        return cls(
            lo=float(payload["lo"]),
            hi=float(payload["hi"]),
            count=int(payload["count"]),
            open_lo=bool(payload.get("open_lo", False)),
            open_hi=bool(payload.get("open_hi", False)),
            log=bool(payload.get("log", False)),
        )


@dataclass(frozen=True)
class SignCheckReport:
    """Result of sweeping one claim over a grid; worst point included."""

    id: AuxFunctionId
    domain: str
    worst_point: dict
    worst_value: float
    margin: float
    verdict: str  # "AllSatisfy" | "ViolationFound"
    points_checked: int

    def to_json_dict(self) -> dict:
        return {
            "id": self.id.value,
            "domain": self.domain,
            "worst_point": self.worst_point,
            "worst_value": self.worst_value,
            "margin": self.margin,
            "verdict": self.verdict,
            "points_checked": self.points_checked,
        }


# ---------------------------------------------------------------------------
# The functions themselves (vectorized over numpy arrays).

def _upper_gap(r, t):
    """(1-t^r)/((1+t)^{r-1}(1-t)), with its t -> 1 limit r/2^{r-1}."""
    near1 = t > 1.0 - _SINGULAR_T
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = (1.0 - t**r) / ((1.0 + t) ** (r - 1.0) * (1.0 - t))
    return np.where(near1, r / 2.0 ** (r - 1.0), raw)


def _lower_gap(r, t):
    """(1+t)^{r-1}(1-t)/(1-t^r), with its t -> 1 limit 2^{r-1}/r."""
    near1 = t > 1.0 - _SINGULAR_T
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = (1.0 + t) ** (r - 1.0) * (1.0 - t) / (1.0 - t**r)
    return np.where(near1, 2.0 ** (r - 1.0) / r, raw)


def _penalty(r, a, t):
    return ((1.0 + t) ** r / (1.0 + t**r)) ** a


def _core_upper(r, a, t):
    return _upper_gap(r, t) - _penalty(r, a, t)


def _core_lower(r, a, t):
    return _lower_gap(r, t) - _penalty(r, a, t)


def _shifted_ratio_monotone(r, p, s, z):
    # Central finite difference of ln[(z+s)^{p-1}/(z^r+s)^{p/r-1}] in s,
    # one-sided at the ends of [0, 1].
    h = 1e-4
    s_lo = np.maximum(s - h, 0.0)
    s_hi = np.minimum(s + h, 1.0)

    def logratio(sv):
        return (p - 1.0) * np.log(z + sv) - (p / r - 1.0) * np.log(z**r + sv)

    return (logratio(s_hi) - logratio(s_lo)) / (s_hi - s_lo)


def _linear_gap_bound(r, a, t):
    gap = np.where(r < 2.0, _upper_gap(r, t), _lower_gap(r, t)) - 1.0
    return gap - a * r * t


def _binomial_chain(r, t):
    near1 = t > 1.0 - _SINGULAR_T
    with np.errstate(divide="ignore", invalid="ignore"):
        tail = (1.0 - t**r) / (1.0 - t)
    tail = np.where(near1, r * np.ones_like(tail), tail)
    # at t -> 1 the geometric tail (1-t^r)/(1-t) tends to r
    return (1.0 + t) ** (r - 1.0) - tail - (r - 2.0) * t


def _growth_ratio_monotone(r, t):
    # d/dr of (1+t)^r/(1-t^r), with t^{-r} folded away to avoid overflow:
    # (1+t)^r [ln(1+t)(1-t^r) + t^r ln t] / (1-t^r)^2
    tr = t**r
    return (1.0 + t) ** r * (np.log1p(t) * (1.0 - tr) + tr * np.log(t)) / (1.0 - tr) ** 2


def _envelope_hi_weight(q, r):
    return (1.0 - 2.0 * q) / 3.0 + (r - 1.0 / 3.0) * q ** (2.0 - 1.0 / r) \
        + (2.0 / 3.0) * q ** (3.0 - 1.0 / r)


def _envelope_lo_weight(q, r):
    return ((1.0 - r) * (2.0 * r - 1.0) / 3.0 * (1.0 - 2.0 * q) + r) \
        * q ** (2.0 - 1.0 / r)


def _tangent_slope(q, r):
    return -0.5 - 2.0 * q + 2.0 * r * q ** (2.0 - 1.0 / r) + 2.0 * q ** (3.0 - 1.0 / r)


def _tangent_cubic(x, q, r):
    w = q ** (2.0 - 1.0 / r)
    return -0.5 + w * (1.0 - r) * x + (1.0 - w) * x ** (1.0 - 2.0 * q) \
        - (0.5 - r * w) * x**3


def _exponent_margin(x, r):
    return r * x ** (2.0 - 1.0 / r) - 0.5 - x + x ** (3.0 - 1.0 / r)


def _three_sample_denom(q1, q2, q3, r):
    q = np.minimum(np.minimum(q1, q2), q3)
    beta = 1.0 - (1.0 - q) ** (2.0 - 1.0 / r)
    with np.errstate(divide="ignore"):
        return r + 1.0 - q3 - (r - 0.5) / beta


def _three_sample_lower(y, q1, q2, q3, r):
    denom = _three_sample_denom(q1, q2, q3, r)
    expo = q2 / denom
    with np.errstate(over="ignore"):
        return y**expo - q2 / (1.0 - q3) * y - q1 / (1.0 - q3)


# ---------------------------------------------------------------------------
# Scalar-call domain validation, one per tag.

def _check_weights(q1, q2, q3):
    if min(q1, q2, q3) <= 0.0 or abs(q1 + q2 + q3 - 1.0) > 1e-9:
        raise DomainError("weights must be positive and sum to 1")


def _validate_core(r, a, t):
    if not r > 1.0:
        raise DomainError("the scalar cores need r > 1")
    if not 0.0 <= t <= 1.0:
        raise DomainError("t must lie in [0, 1]")
    if a < 0.0:
        raise DomainError("the exponent perturbation a must be nonnegative")


def _validate_shifted(r, p, s, z):
    if not (z > 1.0 and p >= r > 1.0 and 0.0 <= s <= 1.0):
        raise DomainError("needs z > 1, p >= r > 1 and s in [0, 1]")


def _validate_linear_gap(r, a, t):
    if not (1.0 < r < 2.0 or r > 2.0):
        raise DomainError("the gap bound needs r in (1, 2) or r > 2")
    if not 0.0 <= t <= 1.0:
        raise DomainError("t must lie in [0, 1]")
    if a < 0.0:
        raise DomainError("the exponent perturbation a must be nonnegative")


def _validate_chain(r, t):
    if not r > 0.0 or not 0.0 <= t <= 1.0:
        raise DomainError("needs r > 0 and t in [0, 1]")


def _validate_growth(r, t):
    if not r > 0.0 or not 0.0 < t < 1.0:
        raise DomainError("needs r > 0 and t in (0, 1)")


def _validate_weight_fn(q, r):
    if not 0.0 < q < 1.0:
        raise DomainError("q must lie in (0, 1)")
    if not r > 0.5:
        raise DomainError("needs r > 1/2")


def _validate_cubic(x, q, r):
    if x <= 0.0:
        raise DomainError("x must be positive")
    _validate_weight_fn(q, r)


def _validate_margin(x, r):
    if x <= 0.0 or r <= 0.5:
        raise DomainError("needs x > 0 and r > 1/2")


def _validate_three_sample(y, q1, q2, q3, r):
    _check_weights(q1, q2, q3)
    if y < 1.0:
        raise DomainError("y must be at least 1")
    if not r > 0.5:
        raise DomainError("needs r > 1/2")
    if _three_sample_denom(q1, q2, q3, r) <= 0.0:
        raise DomainError("weights are not admissible (nonpositive denominator)")


# ---------------------------------------------------------------------------
# Default grids over the claimed domains.

def _tie_profile_upper():
    rs = np.linspace(1.05, 1.95, 19)
    return rs, np.array([min_a_r(r)[1] for r in rs])


def _tie_profile_lower():
    rs = np.linspace(2.05, 5.0, 19)
    return rs, np.array([min(1.0 - 1.0 / r, min_a_r(r)[1]) for r in rs])


def _grid_core(upper: bool):
    rs, avals = _tie_profile_upper() if upper else _tie_profile_lower()
    ts = np.linspace(0.0, 1.0, 501)
    r = np.repeat(rs, ts.size)
    a = np.repeat(avals, ts.size)
    t = np.tile(ts, rs.size)
    lo, hi = (1.05, 1.95) if upper else (2.05, 5.0)
    desc = f"r in [{lo}, {hi}] x19 with a tied to the solved profile minimum, t in [0, 1] x501"
    return np.column_stack([r, a, t]), desc


def _grid_shifted():
    rs = np.linspace(1.1, 4.0, 12)
    ps = np.linspace(1.1, 8.0, 14)
    ss = np.linspace(0.0, 1.0, 21)
    zs = np.geomspace(1.01, 100.0, 16)
    r, p, s, z = (g.ravel() for g in np.meshgrid(rs, ps, ss, zs, indexing="ij"))
    keep = p >= r
    pts = np.column_stack([r[keep], p[keep], s[keep], z[keep]])
    return pts, "r in [1.1, 4] x12, p in [1.1, 8] x14 (p >= r), s in [0, 1] x21, z in (1, 100] x16 log"


def _grid_linear_gap():
    blocks = []
    for rs, solved in (
        (np.linspace(1.02, 1.98, 25), lambda r: alpha_threshold_upper(r) - 1.0),
        (np.linspace(2.02, 2.98, 25), lambda r: 1.0 - alpha_threshold_lower(r)),
    ):
        avals = np.array([solved(r) for r in rs])
        ts = np.linspace(0.0, 1.0, 401)
        blocks.append(
            np.column_stack(
                [np.repeat(rs, ts.size), np.repeat(avals, ts.size), np.tile(ts, rs.size)]
            )
        )
    desc = "r in (1, 2) and (2, 3), 25 each, a = solved gap exponent, t in [0, 1] x401"
    return np.vstack(blocks), desc


def _grid_chain():
    rs = np.linspace(4.0, 8.0, 81)
    ts = np.linspace(0.0, 1.0, 500)
    r, t = (g.ravel() for g in np.meshgrid(rs, ts, indexing="ij"))
    return np.column_stack([r, t]), "r in [4, 8] x81, t in [0, 1] x500"


def _grid_growth():
    rs = np.linspace(2.0, 4.0, 81)
    ts = np.linspace(1e-3, 1.0 - 1e-3, 500)
    r, t = (g.ravel() for g in np.meshgrid(rs, ts, indexing="ij"))
    return np.column_stack([r, t]), "r in [2, 4] x81, t in (0, 1) x500"


def _grid_weight_fn(q_hi: float, label: str):
    def build():
        qs = np.linspace(1e-4, q_hi, 200)
        rs = np.linspace(r0_value(), 1.0, 50)
        q, r = (g.ravel() for g in np.meshgrid(qs, rs, indexing="ij"))
        return np.column_stack([q, r]), f"q in (0, {label}] x200, r in [r0, 1] x50"

    return build


def _grid_cubic():
    xs = np.geomspace(1.0, 100.0, 150)
    qs = np.linspace(1e-3, 1.0 / 3.0, 40)
    rs = np.linspace(r0_value(), 1.0, 25)
    x, q, r = (g.ravel() for g in np.meshgrid(xs, qs, rs, indexing="ij"))
    return np.column_stack([x, q, r]), "x in [1, 100] x150 log, q in (0, 1/3] x40, r in [r0, 1] x25"


def _grid_margin():
    xs = np.linspace(0.75, 1.0, 200)
    rs = np.linspace(1.0, 2.0, 100)
    x, r = (g.ravel() for g in np.meshgrid(xs, rs, indexing="ij"))
    return np.column_stack([x, r]), "x in [3/4, 1] x200, r in [1, 2] x100"


def _simplex_weights(step_count: int) -> np.ndarray:
    vals = np.linspace(0.005, 0.99, step_count)
    q1, q2 = (g.ravel() for g in np.meshgrid(vals, vals, indexing="ij"))
    q3 = 1.0 - q1 - q2
    keep = q3 >= 0.005 - 1e-12
    return np.column_stack([q1[keep], q2[keep], q3[keep]])


def _grid_three_sample():
    # The admissibility condition confines (weights, r) to a thin sliver
    # near equal weights with r close to 1, so filter those pairs first
    # and only then cross with the y axis.
    weights = _simplex_weights(160)
    rs = np.linspace(1.0, 2.0, 40)
    nw, nr = weights.shape[0], rs.size
    w = np.repeat(weights, nr, axis=0)
    r = np.tile(rs, nw)
    denom = _three_sample_denom(w[:, 0], w[:, 1], w[:, 2], r)
    keep = denom > 1e-9
    w, r = w[keep], r[keep]
    ys = np.geomspace(1.0, 100.0, 60)
    npairs = w.shape[0]
    y = np.tile(ys, npairs)
    pts = np.column_stack(
        [y, np.repeat(w, ys.size, axis=0), np.repeat(r, ys.size)]
    )
    desc = ("y in [1, 100] x60 log, weight simplex at step ~0.006 and r in [1, 2] x40 "
            "restricted to admissible pairs")
    return pts, desc


# ---------------------------------------------------------------------------
# Catalog.

@dataclass(frozen=True)
class _CatalogEntry:
    fn: Callable
    args: tuple[str, ...]
    claim: str  # "ge" or "le"
    bound: float
    validate: Callable
    default_grid: Callable[[], tuple[np.ndarray, str]]
    grid_args: tuple[str, ...] | None = None
    expand: Callable[[np.ndarray], np.ndarray] | None = None
    admissible: Callable[[np.ndarray], np.ndarray] | None = None


def _expand_three_sample(pts: np.ndarray) -> np.ndarray:
    y, q1, q2, r = pts.T
    q3 = 1.0 - q1 - q2
    return np.column_stack([y, q1, q2, q3, r])


_CATALOG: dict[AuxFunctionId, _CatalogEntry] = {
    AuxFunctionId.CORE_UPPER: _CatalogEntry(
        _core_upper, ("r", "a", "t"), "ge", 0.0, _validate_core,
        lambda: _grid_core(upper=True),
    ),
    AuxFunctionId.CORE_LOWER: _CatalogEntry(
        _core_lower, ("r", "a", "t"), "ge", 0.0, _validate_core,
        lambda: _grid_core(upper=False),
    ),
    AuxFunctionId.SHIFTED_RATIO_MONOTONE: _CatalogEntry(
        _shifted_ratio_monotone, ("r", "p", "s", "z"), "ge", 0.0,
        _validate_shifted, _grid_shifted,
        admissible=lambda pts: pts[:, 1] >= pts[:, 0],
    ),
    AuxFunctionId.LINEAR_GAP_BOUND: _CatalogEntry(
        _linear_gap_bound, ("r", "a", "t"), "ge", 0.0, _validate_linear_gap,
        _grid_linear_gap,
        admissible=lambda pts: np.abs(pts[:, 0] - 2.0) > 1e-9,
    ),
    AuxFunctionId.BINOMIAL_CHAIN: _CatalogEntry(
        _binomial_chain, ("r", "t"), "ge", 0.0, _validate_chain, _grid_chain,
    ),
    AuxFunctionId.GROWTH_RATIO_MONOTONE: _CatalogEntry(
        _growth_ratio_monotone, ("r", "t"), "ge", 0.0, _validate_growth,
        _grid_growth,
    ),
    AuxFunctionId.ENVELOPE_HI_WEIGHT: _CatalogEntry(
        _envelope_hi_weight, ("q", "r"), "le", 0.5, _validate_weight_fn,
        _grid_weight_fn(0.5, "1/2"),
    ),
    AuxFunctionId.ENVELOPE_LO_WEIGHT: _CatalogEntry(
        _envelope_lo_weight, ("q", "r"), "le", 0.5, _validate_weight_fn,
        _grid_weight_fn(0.5, "1/2"),
    ),
    AuxFunctionId.TANGENT_SLOPE: _CatalogEntry(
        _tangent_slope, ("q", "r"), "le", 0.0, _validate_weight_fn,
        _grid_weight_fn(1.0 / 3.0, "1/3"),
    ),
    AuxFunctionId.TANGENT_CUBIC: _CatalogEntry(
        _tangent_cubic, ("x", "q", "r"), "le", 0.0, _validate_cubic, _grid_cubic,
    ),
    AuxFunctionId.EXPONENT_MARGIN: _CatalogEntry(
        _exponent_margin, ("x", "r"), "ge", 0.0, _validate_margin, _grid_margin,
    ),
    AuxFunctionId.THREE_SAMPLE_LOWER: _CatalogEntry(
        _three_sample_lower, ("y", "q1", "q2", "q3", "r"), "ge", 0.0,
        _validate_three_sample, _grid_three_sample,
        grid_args=("y", "q1", "q2", "r"),
        expand=_expand_three_sample,
        admissible=lambda pts: (pts[:, 3] > 0)
        & (_three_sample_denom(pts[:, 1], pts[:, 2], pts[:, 3], pts[:, 4]) > 1e-9),
    ),
}


def aux_eval(id: AuxFunctionId, args: tuple) -> float:
    """The raw value of one catalog function at one argument tuple."""
    entry = _CATALOG[AuxFunctionId(id)]
    if len(args) != len(entry.args):
        raise DomainError(
            f"{AuxFunctionId(id).value} takes arguments {entry.args}, got {len(args)}"
        )
    vals = tuple(float(v) for v in args)
    entry.validate(*vals)
    arrays = tuple(np.asarray([v]) for v in vals)
    return float(entry.fn(*arrays)[0])


def claimed_bound(id: AuxFunctionId) -> tuple[str, float]:
    """The claim attached to a tag: direction ('ge'/'le') and the bound."""
    entry = _CATALOG[AuxFunctionId(id)]
    return entry.claim, entry.bound


def aux_sign_check(
    id: AuxFunctionId,
    grid: dict | None = None,
    *,
    tolerance: float = DEFAULT_SIGN_TOL,
    max_points: int = MAX_GRID_POINTS,
) -> SignCheckReport:
    """Sweep one claim over a grid and report the worst point.

    ``grid`` maps axis names to :class:`GridAxis` (or the equivalent JSON
    dicts); omitted, the tag's default grid over its claimed domain is
    used.  The verdict is AllSatisfy when the claimed bound holds at every
    point within ``tolerance`` (absolute).
    """
    id = AuxFunctionId(id)
    entry = _CATALOG[id]
    if grid is None:
        pts, desc = entry.default_grid()
    else:
        pts, desc = _build_custom_grid(entry, grid, max_points)
    if entry.expand is not None and pts.shape[1] == len(entry.grid_args or ()):
        pts = entry.expand(pts)
    if entry.admissible is not None:
        pts = pts[entry.admissible(pts)]
    if pts.shape[0] == 0:
        raise DomainError("the grid contains no admissible points")
    if pts.shape[0] > max_points:
        raise DomainError(
            f"grid has {pts.shape[0]} points, above the cap {max_points}"
        )
    values = entry.fn(*(pts[:, i] for i in range(pts.shape[1])))
    if entry.claim == "ge":
        margins = values - entry.bound
    else:
        margins = entry.bound - values
    worst = int(np.argmin(margins))
    margin = float(margins[worst])
    verdict = "AllSatisfy" if margin >= -tolerance else "ViolationFound"
    worst_point = {name: float(pts[worst, i]) for i, name in enumerate(entry.args)}
    return SignCheckReport(
        id=id,
        domain=desc,
        worst_point=worst_point,
        worst_value=float(values[worst]),
        margin=margin,
        verdict=verdict,
        points_checked=int(pts.shape[0]),
    )


def _build_custom_grid(entry: _CatalogEntry, grid: dict, max_points: int):
    names = entry.grid_args or entry.args
    axes = []
    for name in names:
        if name not in grid:
            raise DomainError(f"grid is missing axis {name!r} (needs {names})")
        axis = grid[name]
        if isinstance(axis, dict):
            axis = GridAxis.from_json_dict(axis)
        axes.append(axis.points())
    total = math.prod(len(a) for a in axes)
    if total > max_points:
        raise DomainError(f"grid would have {total} points, above the cap {max_points}")
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.column_stack([m.ravel() for m in mesh])
    desc = ", ".join(
        f"{name} in [{a[0]:g}, {a[-1]:g}] x{len(a)}" for name, a in zip(names, axes)
    )
    return pts, desc
