# Sharpness of the constants and the exact validity frontier of the
# mean-minus-geometric-mean variance bounds, seen through search.

from meanineq import (
    InequalityId,
    SearchBudget,
    check,
    counterexample_hunt,
    sharpness_probe,
)

TRIPLE = (1.0, 0.5, 0.0)

print("sharpness probes: the two-point boundary configuration attains the")
print("constants exactly; random pinned-weight scans never beat it.")
for q in (0.1, 0.25, 0.4):
    rep = sharpness_probe(InequalityId.DIANANDA_UPPER, triple=TRIPLE, alpha=1.0,
                          q_target=q, budget=SearchBudget(max_evals=3000, seed=7))
    print(f"  q = {q}: boundary gap {rep.boundary_gap:.2e}, "
          f"scan gap {rep.supremum_gap:.2e}, evals {rep.evals_used}")

print("\nfrontier hunts for the upper bound M_r - G <= r sigma / (2 x_1):")
for r in (2.0, 2.5):
    rep = counterexample_hunt(InequalityId.MG_SIGMA_UPPER, r=r,
                              budget=SearchBudget(max_evals=30_000, seed=42))
    print(f"  r = {r}: {rep.verdict} (best scaled residual {rep.best_residual:.2e})")
    if rep.verdict == "ViolationFound":
        cfg = rep.best_config
        print("    violating configuration:")
        print("      x =", [f"{v:.6g}" for v in cfg.x])
        print("      q =", [f"{v:.6g}" for v in cfg.q_weights])
        confirm = check(InequalityId.MG_SIGMA_UPPER, cfg, r=r, force=True)
        print("    independent re-check:", confirm.status.value)

print("\nand for the lower bound r sigma / (2 x_n) <= M_r - G:")
for r in (3.0, 3.5):
    rep = counterexample_hunt(InequalityId.MG_SIGMA_LOWER, r=r,
                              budget=SearchBudget(max_evals=30_000, seed=42))
    print(f"  r = {r}: {rep.verdict} (best scaled residual {rep.best_residual:.2e})")
