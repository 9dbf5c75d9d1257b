"""Command-line front end.

Six subcommands: ``mean`` (evaluate a power mean), ``check`` (one
inequality on one configuration), ``threshold`` (solve a sharp parameter
threshold), ``sharpness`` (boundary-configuration probe), ``hunt``
(counterexample search) and ``sweep`` (emit plot-ready tables).

Exit codes: 0 when the outcome is Holds/Equality/AllSatisfy/
NoViolationFound/SupremumGap, 1 when it is Violated/ViolationFound, 2 on
usage or domain errors.  Reports are single JSON documents (default) or
headered CSV; numbers are emitted in shortest round-trip decimal form, so
identical invocations produce byte-identical reports.

Weights given on the command line are normalized by their sum when it is
within 1e-6 of 1 and rejected otherwise.  The default relative tolerance
can be set via the MEANINEQ_TOL environment variable and overridden per
run with --tol.  A JSON run-configuration file mirroring the flags can be
supplied at the top level: ``meanineq --config run.json [command ...]``;
explicit flags win over file entries.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import MeanIneqError
from .inequalities import CheckStatus, InequalityId, check
from .means import Configuration, power_mean
from .search import SearchBudget, counterexample_hunt, sharpness_probe
from .thresholds import (
    alpha_threshold_lower,
    alpha_threshold_upper,
    a_r_fn,
    min_a_r,
    solve_r0,
    solve_t1,
    solve_t2,
)

_TOL_ENV = "MEANINEQ_TOL"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    """One parsed run: a command plus its options; round-trips through JSON."""

    command: str
    options: dict = field(default_factory=dict)
    output: str | None = None
    format: str = "json"

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "options": self.options,
            "output": self.output,
            "format": self.format,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "RunConfig":
        return cls(
            command=str(payload["command"]),
            options=dict(payload.get("options", {})),
            output=payload.get("output"),
            format=str(payload.get("format", "json")),
        )


def _floats(text: str) -> list[float]:
    try:
        return [float(part) for part in str(text).split(",") if part != ""]
    except ValueError as exc:
        raise MeanIneqError(f"could not parse number list {text!r}") from exc


def _grid_triplet(text: str) -> tuple[float, float, int]:
    parts = str(text).split(",")
    if len(parts) != 3:
        raise MeanIneqError("--grid expects lo,hi,count")
    return float(parts[0]), float(parts[1]), int(parts[2])


def _configuration(options: dict) -> Configuration:
    x = options.get("x")
    q = options.get("q")
    if x is None or q is None:
        raise MeanIneqError("both --x and --q are required")
    xs = _floats(x) if not isinstance(x, list) else [float(v) for v in x]
    qs = _floats(q) if not isinstance(q, list) else [float(v) for v in q]
    total = sum(qs)
    if abs(total - 1.0) > 1e-6:
        raise MeanIneqError(
            f"weights sum to {total!r}; more than 1e-6 away from 1, refusing to normalize"
        )
    qs = [v / total for v in qs]
    return Configuration(np.asarray(xs), np.asarray(qs))


def _ineq_params(options: dict) -> dict:
    out: dict = {}
    if options.get("triple") is not None:
        trip = options["triple"]
        trip = _floats(trip) if not isinstance(trip, list) else [float(v) for v in trip]
        if len(trip) != 3:
            raise MeanIneqError("--triple expects three comma-separated orders")
        out["triple"] = tuple(trip)
    for key in ("alpha", "r", "s"):
        if options.get(key) is not None:
            out[key] = float(options[key])
    return out


def _budget(options: dict) -> SearchBudget:
    return SearchBudget(
        max_evals=int(options.get("budget") or 100_000),
        seed=int(options.get("seed") or 0),
        n_range=(int(options.get("n_min") or 2), int(options.get("n_max") or 4)),
        restarts=int(options.get("restarts") or 20),
    )


def _tolerance(options: dict) -> float | None:
    if options.get("tol") is not None:
        return float(options["tol"])
    env = os.environ.get(_TOL_ENV)
    return float(env) if env else None


def _exec_mean(options: dict):
    cfg = _configuration(options)
    if options.get("r") is None:
        raise MeanIneqError("--r is required")
    return power_mean(cfg, float(options["r"])), EXIT_OK


def _exec_check(options: dict):
    if options.get("ineq") is None:
        raise MeanIneqError("--ineq is required")
    tag = InequalityId(options["ineq"])
    cfg = _configuration(options)
    report = check(
        tag,
        cfg,
        force=bool(options.get("force")),
        rel_tol=_tolerance(options),
        **_ineq_params(options),
    )
    code = EXIT_VIOLATION if report.status is CheckStatus.VIOLATED else EXIT_OK
    return report.to_json_dict(), code


def _exec_threshold(options: dict):
    which = options.get("which")
    if which is None:
        raise MeanIneqError("--which is required")
    if which == "r0":
        return solve_r0().to_json_dict(), EXIT_OK
    if options.get("r") is None:
        raise MeanIneqError(f"--r is required for --which {which}")
    r = float(options["r"])
    if which == "t1":
        return solve_t1(r).to_json_dict(), EXIT_OK
    if which == "t2":
        return solve_t2(r).to_json_dict(), EXIT_OK
    if which == "alpha-upper":
        return {"r": r, "value": alpha_threshold_upper(r)}, EXIT_OK
    if which == "alpha-lower":
        return {"r": r, "value": alpha_threshold_lower(r)}, EXIT_OK
    if which == "min-a":
        t_star, a_star = min_a_r(r)
        return {"r": r, "t_star": t_star, "a_star": a_star}, EXIT_OK
    raise MeanIneqError(f"unknown threshold {which!r}")


def _exec_sharpness(options: dict):
    if options.get("ineq") is None:
        raise MeanIneqError("--ineq is required")
    params = _ineq_params(options)
    if "triple" not in params:
        raise MeanIneqError("--triple is required")
    if options.get("q_target") is None:
        raise MeanIneqError("--q-target is required")
    report = sharpness_probe(
        InequalityId(options["ineq"]),
        triple=params["triple"],
        alpha=params.get("alpha", 1.0),
        q_target=float(options["q_target"]),
        budget=_budget(options),
    )
    return report.to_json_dict(), EXIT_OK


def _exec_hunt(options: dict):
    if options.get("ineq") is None:
        raise MeanIneqError("--ineq is required")
    report = counterexample_hunt(
        InequalityId(options["ineq"]),
        budget=_budget(options),
        **_ineq_params(options),
    )
    code = EXIT_VIOLATION if report.verdict == "ViolationFound" else EXIT_OK
    return report.to_json_dict(), code


def _exec_sweep(options: dict):
    quantity = options.get("quantity")
    if quantity is None:
        raise MeanIneqError("--quantity is required")
    if options.get("grid") is None:
        raise MeanIneqError("--grid lo,hi,count is required")
    lo, hi, count = _grid_triplet(options["grid"])
    if count < 1:
        raise MeanIneqError("grid count must be positive")
    axis = np.linspace(lo, hi, count)
    if quantity == "a-r-profile":
        if options.get("r") is None:
            raise MeanIneqError("--r is required for the profile sweep")
        r = float(options["r"])
        if not 0.0 <= lo <= hi <= 1.0:
            raise MeanIneqError("the profile sweep needs a t-grid inside [0, 1]")
        rows = [[float(t), a_r_fn(r, float(t))] for t in axis]
        return {"columns": ["t", "a_r"], "rows": rows}, EXIT_OK
    if quantity == "alpha-threshold":
        rows = []
        for r in axis:
            r = float(r)
            if 1.0 < r < 2.0:
                rows.append([r, alpha_threshold_upper(r)])
            elif r > 2.0:
                rows.append([r, alpha_threshold_lower(r)])
            else:
                raise MeanIneqError(
                    f"alpha threshold undefined at r = {r}; grid must avoid r <= 1 and r = 2"
                )
        return {"columns": ["r", "alpha"], "rows": rows}, EXIT_OK
    if quantity == "residual-boundary":
        tag = InequalityId(options.get("ineq") or "diananda-base-upper")
        if tag not in (InequalityId.DIANANDA_BASE_UPPER, InequalityId.DIANANDA_BASE_LOWER):
            raise MeanIneqError(
                "the boundary sweep applies to the parameter-free base inequalities"
            )
        if not 0.0 < lo <= hi <= 0.5:
            raise MeanIneqError("the boundary sweep needs a q-grid inside (0, 1/2]")
        rows = []
        for q in axis:
            q = float(q)
            low = check(tag, Configuration([0.0, 1.0], [q, 1.0 - q]))
            high = check(tag, Configuration([0.0, 1.0], [1.0 - q, q]))
            rows.append([q, low.residual, high.residual])
        return {
            "columns": ["q", "residual_min_on_zero", "residual_min_on_unit"],
            "rows": rows,
        }, EXIT_OK
    raise MeanIneqError(f"unknown sweep quantity {quantity!r}")


_EXECUTORS = {
    "mean": _exec_mean,
    "check": _exec_check,
    "threshold": _exec_threshold,
    "sharpness": _exec_sharpness,
    "hunt": _exec_hunt,
    "sweep": _exec_sweep,
}

_INEQ_NAMES = ", ".join(tag.value for tag in InequalityId)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="report format (default json)")
    common.add_argument("--tol", type=float, default=None,
                        help=f"relative tolerance override (or env {_TOL_ENV})")

    config_common = argparse.ArgumentParser(add_help=False)
    config_common.add_argument("--x", help="comma-separated samples")
    config_common.add_argument("--q", help="comma-separated weights (sum within 1e-6 of 1)")

    ineq_common = argparse.ArgumentParser(add_help=False)
    ineq_common.add_argument("--ineq", help=f"inequality tag: one of {_INEQ_NAMES}")
    ineq_common.add_argument("--triple", help="three comma-separated mean orders")
    ineq_common.add_argument("--alpha", type=float, help="comparison exponent")
    ineq_common.add_argument("--r", type=float, help="mean order parameter")
    ineq_common.add_argument("--s", type=float, help="second mean order parameter")

    search_common = argparse.ArgumentParser(add_help=False)
    search_common.add_argument("--budget", type=int, help="evaluation budget (default 100000)")
    search_common.add_argument("--seed", type=int, help="random seed (default 0)")
    search_common.add_argument("--restarts", type=int, help="random restarts (default 20)")
    search_common.add_argument("--n-min", type=int, dest="n_min", help="smallest n (default 2)")
    search_common.add_argument("--n-max", type=int, dest="n_max", help="largest n (default 4)")

    parser = argparse.ArgumentParser(
        prog="meanineq",
        description="Evaluate weighted power-mean inequalities, solve their sharp "
                    "thresholds and search configurations for counterexamples.",
    )
    parser.add_argument("--config", help="JSON run-configuration file mirroring the flags")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("mean", parents=[common, config_common],
                       help="evaluate a weighted power mean")
    p.add_argument("--r", type=float, help="mean order")

    sub.add_parser("check", parents=[common, config_common, ineq_common],
                   help="check one inequality on one configuration") \
        .add_argument("--force", action="store_true", default=None,
                      help="evaluate outside the stated hypothesis ranges")

    p = sub.add_parser("threshold", parents=[common],
                       help="solve a sharp parameter threshold")
    p.add_argument("--which", choices=("r0", "t1", "t2", "alpha-upper",
                                       "alpha-lower", "min-a"))
    p.add_argument("--r", type=float, help="mean order where applicable")

    sub.add_parser("sharpness", parents=[common, ineq_common, search_common],
                   help="probe sharpness at the two-point boundary configuration") \
        .add_argument("--q-target", type=float, dest="q_target",
                      help="pinned minimum weight in (0, 1/2]")

    sub.add_parser("hunt", parents=[common, ineq_common, search_common],
                   help="search configurations for a violation")

    p = sub.add_parser("sweep", parents=[common],
                       help="emit a plot-ready table for one quantity")
    p.add_argument("--quantity", choices=("a-r-profile", "alpha-threshold",
                                          "residual-boundary"))
    p.add_argument("--r", type=float, help="mean order for the profile sweep")
    p.add_argument("--grid", help="axis as lo,hi,count")
    p.add_argument("--ineq", help="base inequality for the boundary sweep")

    return parser


def _run_config_from_args(args: argparse.Namespace) -> RunConfig:
    skip = {"command", "config", "output", "format"}
    options = {
        key: value
        for key, value in vars(args).items()
        if key not in skip and value is not None
    }
    file_rc = None
    if args.config:
        with open(args.config, "r", encoding="utf-8") as handle:
            file_rc = RunConfig.from_json_dict(json.load(handle))
    command = args.command or (file_rc.command if file_rc else None)
    if command is None:
        raise MeanIneqError("no command given (flag or config file)")
    merged = dict(file_rc.options) if file_rc else {}
    merged.update(options)
    output = getattr(args, "output", None) or (file_rc.output if file_rc else None)
    fmt = getattr(args, "format", None) or (file_rc.format if file_rc else None) or "json"
    return RunConfig(command=command, options=merged, output=output, format=fmt)


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (int, str)):
        return str(value)
    if value is None:
        return ""
    return json.dumps(value, sort_keys=True)


def _to_csv(payload) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if isinstance(payload, dict) and "columns" in payload and "rows" in payload:
        writer.writerow(payload["columns"])
        for row in payload["rows"]:
            writer.writerow([_csv_cell(v) for v in row])
    elif isinstance(payload, dict):
        writer.writerow(list(payload.keys()))
        writer.writerow([_csv_cell(v) for v in payload.values()])
    else:
        writer.writerow(["value"])
        writer.writerow([_csv_cell(payload)])
    return buffer.getvalue()


def _emit(payload, run_config: RunConfig) -> None:
    if run_config.format == "csv":
        text = _to_csv(payload)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if run_config.output:
        with open(run_config.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, execute exactly one command, write one report."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run_config = _run_config_from_args(args)
        executor = _EXECUTORS.get(run_config.command)
        if executor is None:
            raise MeanIneqError(f"unknown command {run_config.command!r}")
        payload, code = executor(run_config.options)
    except MeanIneqError as exc:
        print(f"meanineq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"meanineq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, run_config)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
