# Every named inequality evaluated on one configuration, as a residual
# table: nonnegative residual means the claim holds at that point.

from meanineq import Configuration, InequalityId, check, equality_witness

cfg = Configuration([1.0, 2.0, 5.0], [0.3, 0.45, 0.25])
print("configuration:", cfg.x.tolist(), cfg.q_weights.tolist(), " q =", cfg.min_weight)

CASES = [
    (InequalityId.DIANANDA_UPPER, dict(triple=(1.0, 0.5, 0.0), alpha=1.0)),
    (InequalityId.DIANANDA_LOWER, dict(triple=(1.0, 0.5, 0.0), alpha=1.0)),
    (InequalityId.DIANANDA_BASE_UPPER, {}),
    (InequalityId.DIANANDA_BASE_LOWER, {}),
    (InequalityId.MIX_VARIANCE_UPPER, dict(r=2.5)),
    (InequalityId.MIX_VARIANCE_LOWER, dict(r=1.5)),
    (InequalityId.CARTWRIGHT_FIELD_LOWER, dict(r=1.0, s=0.0)),
    (InequalityId.CARTWRIGHT_FIELD_UPPER, dict(r=1.0, s=0.0)),
    (InequalityId.MG_SIGMA_LOWER, dict(r=2.0)),
    (InequalityId.MG_SIGMA_UPPER, dict(r=1.5)),
    (InequalityId.HALF_MEAN_LOWER, dict(r=0.8)),
    (InequalityId.HALF_MEAN_UPPER, dict(r=1.5)),
    (InequalityId.HALF_MEAN_VAR_UPPER, dict(r=0.8)),
    (InequalityId.HALF_MEAN_VAR_LOWER, dict(r=1.5)),
]

print(f"\n{'tag':24s} {'lhs':>12s} {'rhs':>12s} {'residual':>12s}  status")
for tag, params in CASES:
    rep = check(tag, cfg, **params)
    print(f"{tag.value:24s} {rep.lhs:12.6f} {rep.rhs:12.6f} {rep.residual:12.3e}  "
          f"{rep.status.value}")

# Documented equality cases are recognized structurally.
constant = Configuration([3.0, 3.0], [0.5, 0.5])
special = Configuration([1.0, 4.0], [0.5, 0.5])
print("\nequality witnesses:")
print("  constant samples, any tag:",
      equality_witness(InequalityId.HALF_MEAN_UPPER, constant))
print("  r=1, n=2, q=1/2 for the variance-corrected upper bound:",
      equality_witness(InequalityId.HALF_MEAN_VAR_UPPER, special, r=1.0))
print("  two-point zero boundary for the general upper bound:",
      equality_witness(InequalityId.DIANANDA_UPPER,
                       Configuration([0.0, 1.0], [0.2, 0.8])))

# Outside its hypothesis range a tag refuses to evaluate unless forced.
try:
    check(InequalityId.MIX_VARIANCE_UPPER, cfg, r=1.2)
except Exception as exc:
    print("\nhypothesis violation:", exc)
forced = check(InequalityId.MIX_VARIANCE_UPPER, cfg, r=1.2, force=True)
print("forced evaluation anyway:", forced.status.value,
      f"residual = {forced.residual:.3e}")
