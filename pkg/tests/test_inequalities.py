import json

import pytest

from meanineq import (
    CheckStatus,
    Configuration,
    DomainError,
    InequalityId,
    SearchBudget,
    check,
    counterexample_hunt,
    equality_witness,
    power_mean,
    r0_value,
    variance_sigma,
)

from conftest import pinned_config, sample_config

BASE_TRIPLE = (1.0, 0.5, 0.0)


class TestCheckExamples:
    def test_diananda_upper_three_point(self):
        cfg = Configuration([1.0, 4.0, 9.0], [1 / 3, 1 / 3, 1 / 3])
        rep = check(InequalityId.DIANANDA_UPPER, cfg, triple=BASE_TRIPLE, alpha=1.0)
        assert rep.status is CheckStatus.HOLDS
        assert rep.lhs == pytest.approx(2.0471, abs=1e-4)  # the ratio
        assert rep.rhs == pytest.approx(3.0, abs=1e-12)  # C(2/3)
        assert rep.q_used == pytest.approx(1 / 3)

    def test_diananda_lower_boundary_equality(self):
        cfg = Configuration([0.0, 1.0], [0.75, 0.25])
        rep = check(InequalityId.DIANANDA_LOWER, cfg, triple=BASE_TRIPLE, alpha=1.0)
        assert rep.status is CheckStatus.EQUALITY
        assert rep.rhs == pytest.approx(4.0 / 3.0, abs=1e-13)
        assert rep.lhs == pytest.approx(4.0 / 3.0, abs=1e-13)

    def test_cartwright_field_upper_hand_values(self):
        cfg = Configuration([1.0, 4.0], [0.5, 0.5])
        rep = check(InequalityId.CARTWRIGHT_FIELD_UPPER, cfg, r=1.0, s=0.0)
        assert rep.status is CheckStatus.HOLDS
        assert rep.lhs == pytest.approx(0.5, abs=1e-12)  # A - G
        assert rep.rhs == pytest.approx(1.125, abs=1e-12)  # sigma / (2 x_1)

    def test_half_mean_var_lower_constant_equality(self):
        cfg = Configuration([2.0, 2.0, 2.0], [0.5, 0.25, 0.25])
        rep = check(InequalityId.HALF_MEAN_VAR_LOWER, cfg, r=1.5)
        assert rep.status is CheckStatus.EQUALITY

    def test_degenerate_for_ratio_tags_only(self):
        cfg = Configuration([3.0, 3.0], [0.5, 0.5])
        rep = check(InequalityId.DIANANDA_UPPER, cfg, triple=BASE_TRIPLE, alpha=1.0)
        assert rep.status is CheckStatus.DEGENERATE
        rep = check(InequalityId.DIANANDA_BASE_UPPER, cfg)
        assert rep.status is CheckStatus.EQUALITY


class TestReportContract:
    def test_residual_orientation_and_scaling(self, rng):
        for _ in range(100):
            cfg = sample_config(rng)
            rep = check(InequalityId.DIANANDA_BASE_LOWER, cfg)
            assert rep.residual == pytest.approx(rep.rhs - rep.lhs, abs=1e-15)
            scale = max(abs(rep.lhs), abs(rep.rhs), 1.0)
            assert rep.residual_rel == pytest.approx(rep.residual / scale, rel=1e-12)

    def test_json_keys_are_stable(self):
        cfg = Configuration([1.0, 2.0], [0.5, 0.5])
        payload = check(InequalityId.MG_SIGMA_UPPER, cfg, r=1.5).to_json_dict()
        assert list(payload.keys()) == [
            "id", "params", "lhs", "rhs", "residual", "residual_rel", "status", "q",
        ]
        json.dumps(payload)  # serializable

    def test_degenerate_serializes_nans_as_null(self):
        cfg = Configuration([1.0, 1.0], [0.5, 0.5])
        payload = check(InequalityId.DIANANDA_UPPER, cfg, triple=BASE_TRIPLE,
                        alpha=1.0).to_json_dict()
        assert payload["lhs"] is None
        assert payload["status"] == "Degenerate"

    def test_q_used_is_min_weight(self, rng):
        for _ in range(50):
            cfg = sample_config(rng)
            rep = check(InequalityId.DIANANDA_BASE_UPPER, cfg)
            assert rep.q_used == cfg.min_weight


class TestHypotheses:
    def test_range_violations_raise(self):
        cfg = Configuration([1.0, 2.0], [0.5, 0.5])
        with pytest.raises(DomainError):
            check(InequalityId.MIX_VARIANCE_UPPER, cfg, r=1.5)
        with pytest.raises(DomainError):
            check(InequalityId.MIX_VARIANCE_LOWER, cfg, r=3.0)
        with pytest.raises(DomainError):
            check(InequalityId.HALF_MEAN_LOWER, cfg, r=1.5)
        with pytest.raises(DomainError):
            check(InequalityId.HALF_MEAN_UPPER, cfg, r=0.8)
        with pytest.raises(DomainError):
            check(InequalityId.HALF_MEAN_VAR_UPPER, cfg, r=0.5)
        with pytest.raises(DomainError):
            check(InequalityId.HALF_MEAN_VAR_LOWER, cfg, r=2.5)
        with pytest.raises(DomainError):
            check(InequalityId.DIANANDA_UPPER, cfg, triple=BASE_TRIPLE, alpha=-1.0)

    def test_zero_smallest_sample_rejected_when_divided_by(self):
        cfg = Configuration([0.0, 2.0], [0.5, 0.5])
        with pytest.raises(DomainError):
            check(InequalityId.MG_SIGMA_UPPER, cfg, r=1.0)
        with pytest.raises(DomainError):
            check(InequalityId.CARTWRIGHT_FIELD_LOWER, cfg, r=1.0, s=0.0)

    def test_force_overrides_ranges(self):
        cfg = Configuration([1.0, 2.0], [0.5, 0.5])
        rep = check(InequalityId.MIX_VARIANCE_UPPER, cfg, r=1.5, force=True)
        assert rep.status in (CheckStatus.HOLDS, CheckStatus.VIOLATED, CheckStatus.EQUALITY)

    def test_missing_parameter_named(self):
        cfg = Configuration([1.0, 2.0], [0.5, 0.5])
        with pytest.raises(DomainError, match="'r'"):
            check(InequalityId.MG_SIGMA_UPPER, cfg)


class TestBaseCase:
    def test_random_suite(self, rng):
        # Smaller replica of the acceptance run (which does 1e5).
        for _ in range(10_000):
            cfg = sample_config(rng, zero_prob=0.25)
            up = check(InequalityId.DIANANDA_BASE_UPPER, cfg)
            lo = check(InequalityId.DIANANDA_BASE_LOWER, cfg)
            assert up.residual_rel >= -1e-12
            assert lo.residual_rel >= -1e-12


class TestGeneralTripleAtUnitExponent:
    def test_upper_for_small_orders(self, rng):
        for _ in range(2000):
            r = rng.uniform(1.0 + 1e-6, 2.0)
            rep = check(InequalityId.DIANANDA_UPPER, sample_config(rng, zero_prob=0.2),
                        triple=(1.0, 1.0 / r, 0.0), alpha=1.0)
            if rep.status is not CheckStatus.DEGENERATE:
                assert rep.residual_rel >= -1e-9

    def test_lower_for_large_orders(self, rng):
        for _ in range(2000):
            r = rng.uniform(2.0, 5.0)
            rep = check(InequalityId.DIANANDA_LOWER, sample_config(rng, zero_prob=0.2),
                        triple=(1.0, 1.0 / r, 0.0), alpha=1.0)
            if rep.status is not CheckStatus.DEGENERATE:
                assert rep.residual_rel >= -1e-9


class TestSharpExponentBoundary:
    R = 2.5
    Q = 0.25

    def test_holds_at_the_exact_threshold(self, rng):
        alpha = 1.0 / (self.Q * self.R)
        for _ in range(2000):
            n = int(rng.integers(2, 4))
            cfg = pinned_config(rng, n, self.Q, zero_prob=0.3)
            if cfg is None:
                continue
            rep = check(InequalityId.DIANANDA_UPPER, cfg,
                        triple=(1.0, 1.0 / self.R, 0.0), alpha=alpha)
            if rep.status is not CheckStatus.DEGENERATE:
                assert rep.residual_rel >= -1e-9

    def test_hunter_finds_violations_five_percent_above(self):
        alpha = 1.05 / (self.Q * self.R)
        report = counterexample_hunt(
            InequalityId.DIANANDA_UPPER,
            triple=(1.0, 1.0 / self.R, 0.0),
            alpha=alpha,
            budget=SearchBudget(max_evals=100_000, seed=3),
        )
        assert report.verdict == "ViolationFound"
        confirm = check(InequalityId.DIANANDA_UPPER, report.best_config,
                        triple=(1.0, 1.0 / self.R, 0.0), alpha=alpha, force=True)
        assert confirm.status is CheckStatus.VIOLATED


class TestMeanDifferenceBounds:
    def test_cartwright_field_sandwich(self, rng):
        for _ in range(2000):
            cfg = sample_config(rng)
            lo = check(InequalityId.CARTWRIGHT_FIELD_LOWER, cfg, r=1.0, s=0.0)
            up = check(InequalityId.CARTWRIGHT_FIELD_UPPER, cfg, r=1.0, s=0.0)
            assert lo.residual_rel >= -1e-9
            assert up.residual_rel >= -1e-9

    def test_mg_sigma_inside_the_frontier(self, rng):
        for _ in range(2000):
            cfg = sample_config(rng)
            up = check(InequalityId.MG_SIGMA_UPPER, cfg, r=rng.uniform(0.01, 2.0))
            lo = check(InequalityId.MG_SIGMA_LOWER, cfg, r=rng.uniform(1.0, 3.0))
            assert up.residual_rel >= -1e-9
            assert lo.residual_rel >= -1e-9


class TestRecastEquivalence:
    def test_half_mean_var_upper_rearranged(self, rng):
        # M_{1/2} - G - sigma/(4 x_1) <= q^{2-1/r} (M_r - G - r sigma/(2 x_1))
        # is the same inequality regrouped; residuals agree to 1e-12.
        for _ in range(500):
            cfg = sample_config(rng)
            r = rng.uniform(r0_value(), 1.0)
            rep = check(InequalityId.HALF_MEAN_VAR_UPPER, cfg, r=r)
            q = cfg.min_weight
            w = q ** (2.0 - 1.0 / r)
            sigma = variance_sigma(cfg)
            x1 = float(cfg.x[0])
            g = power_mean(cfg, 0.0)
            lhs = power_mean(cfg, 0.5) - g - sigma / (4.0 * x1)
            rhs = w * (power_mean(cfg, r) - g - r * sigma / (2.0 * x1))
            scale = max(abs(rep.lhs), abs(rep.rhs), 1.0)
            assert (rhs - lhs) == pytest.approx(rep.residual, abs=1e-12 * scale)


class TestHalfMeanCombos:
    def test_lower_range(self, rng):
        for _ in range(1500):
            cfg = sample_config(rng, zero_prob=0.2)
            rep = check(InequalityId.HALF_MEAN_LOWER, cfg, r=rng.uniform(0.5 + 1e-9, 1.0))
            assert rep.residual_rel >= -1e-9

    def test_upper_range(self, rng):
        for _ in range(1500):
            cfg = sample_config(rng, zero_prob=0.2)
            rep = check(InequalityId.HALF_MEAN_UPPER, cfg, r=rng.uniform(1.0, 6.0))
            assert rep.residual_rel >= -1e-9

    def test_mix_variance_ranges(self, rng):
        for _ in range(1500):
            cfg = sample_config(rng)
            up = check(InequalityId.MIX_VARIANCE_UPPER, cfg, r=rng.uniform(2.0, 6.0))
            lo = check(InequalityId.MIX_VARIANCE_LOWER, cfg, r=rng.uniform(1.0 + 1e-9, 2.0))
            assert up.residual_rel >= -1e-9
            assert lo.residual_rel >= -1e-9


class TestEqualityWitness:
    def test_constant_samples(self):
        cfg = Configuration([2.0, 2.0], [0.5, 0.5])
        for tag in InequalityId:
            assert equality_witness(tag, cfg)

    def test_half_mean_var_upper_special_point(self):
        cfg = Configuration([1.0, 4.0], [0.5, 0.5])
        assert equality_witness(InequalityId.HALF_MEAN_VAR_UPPER, cfg, r=1.0)
        assert not equality_witness(InequalityId.HALF_MEAN_VAR_UPPER, cfg, r=0.9)
        rep = check(InequalityId.HALF_MEAN_VAR_UPPER, cfg, r=1.0)
        assert rep.status is CheckStatus.EQUALITY

    def test_boundary_configs(self):
        upper_cfg = Configuration([0.0, 1.0], [0.25, 0.75])
        lower_cfg = Configuration([0.0, 1.0], [0.75, 0.25])
        assert equality_witness(InequalityId.DIANANDA_UPPER, upper_cfg)
        assert not equality_witness(InequalityId.DIANANDA_UPPER, lower_cfg)
        assert equality_witness(InequalityId.DIANANDA_LOWER, lower_cfg)
        assert not equality_witness(InequalityId.DIANANDA_LOWER, upper_cfg)

    def test_generic_config_is_not_a_witness(self):
        cfg = Configuration([1.0, 4.0, 9.0], [1 / 3, 1 / 3, 1 / 3])
        rep = check(InequalityId.DIANANDA_UPPER, cfg, triple=BASE_TRIPLE, alpha=1.0)
        assert rep.status is CheckStatus.HOLDS and rep.residual > 1e-3
        assert not equality_witness(InequalityId.DIANANDA_UPPER, cfg)
