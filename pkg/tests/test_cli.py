import csv
import io
import json
import subprocess
import sys

import pytest

from meanineq.cli import RunConfig, run


def invoke(argv, capsys):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMeanCommand:
    def test_prints_the_value(self, capsys):
        code, out, _ = invoke(["mean", "--x", "1,4", "--q", "0.5,0.5", "--r", "0.5"], capsys)
        assert code == 0
        assert out == "2.25\n"

    def test_weight_normalization_within_tolerance(self, capsys):
        code, out, _ = invoke(
            ["mean", "--x", "1,4", "--q", "0.5000001,0.4999998", "--r", "1"], capsys
        )
        assert code == 0
        assert float(out) == pytest.approx(2.5, rel=1e-6)

    def test_weight_sum_too_far_off_rejected(self, capsys):
        code, _, err = invoke(["mean", "--x", "1,4", "--q", "0.6,0.5", "--r", "1"], capsys)
        assert code == 2
        assert "refusing to normalize" in err


class TestCheckCommand:
    ARGV = [
        "check", "--ineq", "diananda-upper", "--triple", "1,0.5,0", "--alpha", "1",
        "--x", "1,4,9", "--q", "0.333333,0.333333,0.333334",
    ]

    def test_holds_exit_zero(self, capsys):
        code, out, _ = invoke(self.ARGV, capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "Holds"
        assert payload["id"] == "diananda-upper"

    def test_violation_exit_one(self, capsys):
        # the upper mean-difference bound fails past r = 2 at extreme weights
        code, out, _ = invoke(
            ["check", "--ineq", "mg-sigma-upper", "--r", "6", "--x", "1,5",
             "--q", "0.999,0.001"], capsys
        )
        payload = json.loads(out)
        assert payload["status"] == "Violated"
        assert code == 1

    def test_unknown_tag_exit_two(self, capsys):
        code, _, err = invoke(["check", "--ineq", "nope", "--x", "1,2", "--q", ".5,.5"], capsys)
        assert code == 2
        assert "error" in err

    def test_domain_error_named(self, capsys):
        code, _, err = invoke(
            ["check", "--ineq", "mg-sigma-upper", "--x", "1,2", "--q", "0.5,0.5"], capsys
        )
        assert code == 2
        assert "'r'" in err


class TestThresholdCommand:
    def test_r0(self, capsys):
        code, out, _ = invoke(["threshold", "--which", "r0"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert 0.65 < payload["value"] < 0.67
        assert abs(payload["residual"]) <= 1e-12
        assert set(payload) == {"value", "lo", "hi", "residual", "iterations"}

    def test_alpha_thresholds(self, capsys):
        code, out, _ = invoke(["threshold", "--which", "alpha-lower", "--r", "3"], capsys)
        assert code == 0
        assert json.loads(out)["value"] == 1.0 - 1.0 / 9.0
        code, out, _ = invoke(["threshold", "--which", "alpha-upper", "--r", "1.5"], capsys)
        assert json.loads(out)["value"] > 1.0

    def test_min_a(self, capsys):
        code, out, _ = invoke(["threshold", "--which", "min-a", "--r", "2"], capsys)
        payload = json.loads(out)
        assert payload["a_star"] == pytest.approx(0.0, abs=1e-10)

    def test_missing_r_exit_two(self, capsys):
        code, _, err = invoke(["threshold", "--which", "t1"], capsys)
        assert code == 2

    def test_out_of_range_exit_two(self, capsys):
        code, _, err = invoke(["threshold", "--which", "t1", "--r", "2.5"], capsys)
        assert code == 2


class TestSearchCommands:
    def test_sharpness(self, capsys):
        code, out, _ = invoke(
            ["sharpness", "--ineq", "diananda-upper", "--triple", "1,0.5,0",
             "--alpha", "1", "--q-target", "0.25", "--budget", "500", "--seed", "3"],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "SupremumGap"
        assert payload["supremum_gap"] <= 1e-12

    def test_hunt_violation_exit_one(self, capsys):
        code, out, _ = invoke(
            ["hunt", "--ineq", "mg-sigma-upper", "--r", "2.5", "--budget", "20000",
             "--seed", "42"], capsys,
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["verdict"] == "ViolationFound"
        assert "x" in payload["best_config"] and "q" in payload["best_config"]

    def test_hunt_no_violation_exit_zero(self, capsys):
        code, out, _ = invoke(
            ["hunt", "--ineq", "diananda-base-upper", "--budget", "2000", "--seed", "1"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "NoViolationFound"


class TestSweepCommand:
    def test_profile_rows_and_limits(self, capsys):
        code, out, _ = invoke(
            ["sweep", "--quantity", "a-r-profile", "--r", "1.5", "--grid", "0,1,101"],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["columns"] == ["t", "a_r"]
        assert len(payload["rows"]) == 101
        assert payload["rows"][0][1] == pytest.approx(1.0 / 3.0, abs=1e-14)

    def test_alpha_threshold_piecewise_continuity(self, capsys):
        code, out, _ = invoke(
            ["sweep", "--quantity", "alpha-threshold", "--grid", "2.1,6,40"], capsys
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert len(rows) == 40
        values = [row[1] for row in rows]
        assert all(0.8 < v < 1.0 for v in values)
        # continuity within pieces: adjacent steps stay small
        for (r1, v1), (r2, v2) in zip(rows, rows[1:]):
            if (r1 < 3 <= r2) or (r1 < 4 <= r2):
                continue
            assert abs(v2 - v1) < 0.02

    def test_alpha_threshold_rejects_bad_grid(self, capsys):
        code, _, err = invoke(
            ["sweep", "--quantity", "alpha-threshold", "--grid", "1.5,3,4"], capsys
        )
        assert code == 2

    def test_residual_boundary_nonnegative(self, capsys):
        code, out, _ = invoke(
            ["sweep", "--quantity", "residual-boundary", "--grid", "0.02,0.5,25"],
            capsys,
        )
        assert code == 0
        for row in json.loads(out)["rows"]:
            assert row[1] >= -1e-15
            assert row[2] >= -1e-15

    def test_csv_round_trips_floats(self, capsys):
        code, out, _ = invoke(
            ["sweep", "--quantity", "a-r-profile", "--r", "1.3", "--grid", "0,1,21",
             "--format", "csv"], capsys,
        )
        assert code == 0
        reader = csv.reader(io.StringIO(out))
        header = next(reader)
        assert header == ["t", "a_r"]
        from meanineq import a_r_fn
        for row in reader:
            t, value = float(row[0]), float(row[1])
            assert value == a_r_fn(1.3, t)  # exact round trip


class TestDeterminismAndPlumbing:
    def test_byte_identical_reruns(self, capsys):
        argv = ["hunt", "--ineq", "mg-sigma-lower", "--r", "3.5", "--budget", "4000",
                "--seed", "11"]
        _, out1, _ = invoke(argv, capsys)
        _, out2, _ = invoke(argv, capsys)
        assert out1.encode() == out2.encode()

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = invoke(
            ["threshold", "--which", "r0", "--output", str(target)], capsys
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["value"] == pytest.approx(0.6598, abs=1e-3)

    def test_run_config_round_trip(self):
        rc = RunConfig(command="mean", options={"x": "1,4", "q": "0.5,0.5", "r": 0.5},
                       output=None, format="json")
        assert RunConfig.from_json_dict(json.loads(json.dumps(rc.to_json_dict()))) == rc

    def test_config_file_drives_a_run(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "command": "mean",
            "options": {"x": "1,4", "q": "0.5,0.5", "r": 0.5},
        }))
        code, out, _ = invoke(["--config", str(cfg)], capsys)
        assert code == 0
        assert out == "2.25\n"

    def test_cli_flags_override_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "command": "mean",
            "options": {"x": "1,4", "q": "0.5,0.5", "r": 0.5},
        }))
        code, out, _ = invoke(["--config", str(cfg), "mean", "--r", "0"], capsys)
        assert code == 0
        assert out == "2.0\n"

    def test_tolerance_env_var(self, capsys, monkeypatch):
        # a loose tolerance reclassifies a small positive residual as equality
        argv = ["check", "--ineq", "diananda-base-lower", "--x", "1,1.2",
                "--q", "0.3,0.7"]
        code, out, _ = invoke(argv, capsys)
        assert json.loads(out)["status"] == "Holds"
        monkeypatch.setenv("MEANINEQ_TOL", "1e-2")
        code, out, _ = invoke(argv, capsys)
        assert json.loads(out)["status"] == "Equality"

    def test_entry_point_installed(self):
        proc = subprocess.run(
            [sys.executable, "-m", "meanineq.cli"],
            capture_output=True, text=True, input="",
        )
        # module is importable; no command -> usage error
        assert proc.returncode in (1, 2)


def test_cli_module_main():
    proc = subprocess.run(
        ["meanineq", "mean", "--x", "1,4", "--q", "0.5,0.5", "--r", "0.5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2.25\n"
