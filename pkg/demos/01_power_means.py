# Weighted power means, the variance, the three-mean ratio and its
# sharp comparison constant, evaluated on a few concrete configurations.

import numpy as np

from meanineq import (
    Configuration,
    DeltaParams,
    c_constant,
    delta,
    order_triple,
    power_mean,
    variance_sigma,
)

cfg = Configuration([1.0, 4.0, 9.0], [1 / 3, 1 / 3, 1 / 3])
print("samples:", cfg.x.tolist(), " weights:", cfg.q_weights.tolist())
print("minimum weight q =", cfg.min_weight)

print("\norder r -> mean M_r (monotone in r):")
for r in (-2.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0):
    print(f"  M_{r:+.1f} = {power_mean(cfg, r):.6f}")

print("\nvariance sigma =", variance_sigma(cfg))

# The ratio |M_r^a - M_t^a| / |M_r^a - M_s^a| for the classical triple
# (1, 1/2, 0) always lies between C(q^a) and C((1-q)^a).
triple = order_triple(0.0, 1.0, 0.5)
params = DeltaParams(*triple, alpha=1.0)
q = cfg.min_weight
ratio = delta(cfg, params)
print("\nratio for triple (1, 1/2, 0), alpha = 1:", ratio)
print("lower constant C(q)     =", c_constant(*triple, q))
print("upper constant C(1 - q) =", c_constant(*triple, 1.0 - q))

# Two-point configurations with a zero sample attain the constants exactly.
for w_zero in (0.25, 0.75):
    boundary = Configuration([0.0, 1.0], [w_zero, 1.0 - w_zero])
    print(
        f"boundary x=(0,1), weights=({w_zero}, {1-w_zero}):"
        f" ratio = {delta(boundary, params):.15f}"
    )

# At equal weights and n = 2 the half-order mean is the average of the
# arithmetic and geometric means, so the ratio is exactly 2.
rng = np.random.default_rng(1)
pair = Configuration(np.sort(rng.uniform(0.5, 5.0, 2)), [0.5, 0.5])
print("\nrandom equal-weight pair:", pair.x.tolist())
print("ratio =", delta(pair, params))
