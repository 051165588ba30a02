# ============================================================
# 🖥️ Command-line front end
# dist | moments | bounds | sweep | cstar
# JSON envelopes and CSV tables go to stdout, log lines to stderr.
# ============================================================

import argparse
import io
import json
import logging
import math
import sys
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd

from . import __version__
from .bounds import bound_report, hall_barbour_delta, hall_barbour_lower_surrogate
from .errors import EXIT_OK, DegenerateError, DomainError, EwensError, UsageError
from .exactdist import (
    EwensParams,
    build_stirling_table,
    cdf,
    exact_cdf,
    length_distribution,
    parse_theta,
)
from .gaussian import (
    StandardizationKind,
    corollary2_budget,
    kolmogorov_distance,
    sigma_ratio_bounds,
    standardize,
)
from .moments import (
    exact_moments,
    lemma3_envelopes,
    lemma_a1_envelope,
    mean_gap_envelope,
    power_sums,
)
from .regimes import (
    RegimeSpec,
    band_ratio,
    classify,
    cstar_equation,
    geometric_grid,
    solve_cstar,
    sweep,
)
from .regimes.cstar import MIN_TOLERANCE
from .settings import configure_logging, load_settings, settings, use_settings
from .utils.sweep_logger import SweepLogger

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


# ------------------------------------------------------------
# Argument types (argparse reports failures as usage errors)
# ------------------------------------------------------------
def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (value >= 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _theta(text: str):
    try:
        value = parse_theta(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"theta must be positive and finite, got {text}")
    return value


def _tolerance(text: str) -> float:
    value = _positive_float(text)
    if value < MIN_TOLERANCE:
        raise argparse.ArgumentTypeError(f"tolerance must be >= {MIN_TOLERANCE:g}, got {text}")
    return value


def _n_grid(text: str) -> List[int]:
    items = [item for item in text.replace(" ", "").split(",") if item]
    if not items:
        raise argparse.ArgumentTypeError("n-grid is empty")
    return [_positive_int(item) for item in items]


# ------------------------------------------------------------
# Serialization
# ------------------------------------------------------------
def _plain(obj):
    """JSON-ready copy: Fractions as 'p/q', non-finite floats as null."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return value if math.isfinite(value) else None
    if isinstance(obj, Path):
        return str(obj)
    return obj


def _envelope(command: str, params_echo: dict, results, reproducible: bool) -> dict:
    out = {
        "command": command,
        "params_echo": params_echo,
        "results": results,
        "artifact_version": __version__,
    }
    if not reproducible:
        out["generated_at"] = datetime.now(timezone.utc).isoformat()
    return out


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(_plain(payload), indent=2, allow_nan=False))
    sys.stdout.write("\n")


def _emit_csv(frame: pd.DataFrame) -> None:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    sys.stdout.write(buffer.getvalue())


def _params(args) -> EwensParams:
    return EwensParams(args.n, args.theta)


def _params_echo(params: EwensParams) -> dict:
    return {"n": params.n, "theta": params.theta_text()}


def _safe_report(dist, params, kind, moments) -> Optional[dict]:
    try:
        report = kolmogorov_distance(dist, standardize(params, kind, moments))
    except DegenerateError:
        return None
    return {"distance": report.distance, "argmax_point": report.argmax_point, "side": report.side}


def _distribution(params: EwensParams):
    table = None
    if params.n <= settings.STIRLING_LIMIT:
        table = build_stirling_table(params.n)
    return length_distribution(params, table)


# ------------------------------------------------------------
# Commands
# ------------------------------------------------------------
def cmd_dist(args) -> int:
    params = _params(args)
    dist = _distribution(params)

    frame = pd.DataFrame({"x": dist.support(), "pmf": dist.pmf(), "cdf": cdf(dist)})
    exact = exact_cdf(dist)
    if exact is not None:
        frame["pmf_exact"] = [_plain(v) for v in dist.exact_pmf]
        frame["cdf_exact"] = [_plain(v) for v in exact]

    if args.format == "csv":
        _emit_csv(frame)
    else:
        results = {"source": dist.source, "rows": frame.to_dict(orient="records")}
        _emit_json(_envelope("dist", _params_echo(params), results, args.reproducible))
    return EXIT_OK


def cmd_moments(args) -> int:
    params = _params(args)
    m = exact_moments(params)
    s = power_sums(params, 4)

    results = {
        "mu0": m.mu0,
        "sigma0_sq": m.sigma0_sq,
        "s3_abs": m.s3_abs,
        "s3_signed": m.s3_signed,
        "s22": m.s22,
        "mu_T": m.mu_T,
        "sigma_T_sq": m.sigma_T_sq,
        "power_sums": {f"s{k}": s[k] for k in range(1, s.k_max + 1)},
        "envelopes": {
            key: {"lower": e.lower, "upper": e.upper, "value": e.value, "holds": e.holds()}
            for key, e in lemma3_envelopes(params).items()
        },
        "power_sum_envelopes": {
            f"k{k}": {"lower": e.lower, "upper": e.upper, "value": e.value}
            for k, e in ((k, lemma_a1_envelope(params, k)) for k in range(4))
        },
    }
    gap = mean_gap_envelope(params)
    results["mean_gap"] = {"lower": gap.lower, "upper": gap.upper, "value": gap.value}

    if params.n >= 2:
        budget = corollary2_budget(params, m)
        results["approximation_budget"] = {
            "shift_term": budget.shift_term,
            "scale_term": budget.scale_term,
            "total": budget.total,
        }
    if m.sigma0_sq >= 1.0:
        lower, upper = sigma_ratio_bounds(params, m)
        results["sigma_ratio"] = {"lower": lower, "upper": upper, "value": m.sigma_T / m.sigma0}

    _emit_json(_envelope("moments", _params_echo(params), results, args.reproducible))
    return EXIT_OK


def cmd_bounds(args) -> int:
    params = _params(args)
    D = settings.HALL_BARBOUR_D if args.D is None else args.D
    C = settings.BERRY_ESSEEN_C if args.C is None else args.C
    m = exact_moments(params)
    report = bound_report(params, D=D, C=C, moments=m)
    dist = _distribution(params)
    kolmogorov = {
        kind.value: _safe_report(dist, params, kind, m) for kind in StandardizationKind
    }

    results = {
        "C": report.C,
        "D": report.D,
        "gamma1": report.gamma1,
        "gamma2": report.gamma2,
        "gamma3": report.gamma3,
        "gamma4": report.gamma4,
        "conditions": {
            "display4": report.cond_assth1,
            "display5": report.cond_assth2i,
            "display6": report.cond_assth2ii,
            "var_ge_1": report.var_ge_1,
        },
        "upper": report.upper,
        "lower_i": report.lower_i,
        "lower_ii": report.lower_ii,
        "lyapunov": report.lyapunov,
        **{
            f"kolmo_{name}": None if rep is None else rep["distance"]
            for name, rep in kolmogorov.items()
        },
        "kolmogorov": kolmogorov,
        "reasons": report.reasons,
    }
    if params.n >= 2:
        hb = hall_barbour_delta(params, m)
        results["hall_barbour"] = {
            "delta": hb.delta,
            "term_tail": hb.term_tail,
            "term_fourth": hb.term_fourth,
            "term_third_abs": hb.term_third_abs,
            "sum_sigma4": hb.sum_sigma4,
            "lower_surrogate": hall_barbour_lower_surrogate(hb),
        }

    echo = dict(_params_echo(params), D=D, C=C)
    _emit_json(_envelope("bounds", echo, results, args.reproducible))
    return EXIT_OK


def _regime_spec(args) -> RegimeSpec:
    needed = {"fixed": ("theta0",), "power": ("a", "p"), "ratio": ("c",)}[args.coupling]
    missing = [f"--{name}" for name in needed if getattr(args, name) is None]
    if missing:
        raise UsageError(f"--coupling {args.coupling} needs {', '.join(missing)}")
    if args.coupling == "fixed":
        return RegimeSpec.fixed(args.theta0)
    if args.coupling == "power":
        return RegimeSpec.power(args.a, args.p)
    return RegimeSpec.ratio(args.c)


def _sweep_grid(args) -> List[int]:
    if args.n_values is not None:
        return args.n_values
    lo = settings.GRID_LOG2_MIN if args.log2_min is None else args.log2_min
    hi = settings.GRID_LOG2_MAX if args.log2_max is None else args.log2_max
    points = settings.GRID_POINTS if args.points is None else args.points
    if hi < lo:
        raise UsageError(f"empty n-grid: --log2-max {hi} < --log2-min {lo}")
    return geometric_grid(lo, hi, points)


def cmd_sweep(args) -> int:
    spec = _regime_spec(args)
    grid = _sweep_grid(args)
    D = settings.HALL_BARBOUR_D if args.D is None else args.D
    jobs = settings.JOBS if args.jobs is None else args.jobs

    cstar = solve_cstar()
    case = classify(spec, cstar)
    out = Path(args.out) if args.out else settings.DATA_DIR / f"sweep_{spec.kind.value}.csv"

    rows = sweep(spec, grid, D=D, jobs=jobs, cstar=cstar)
    sink = SweepLogger(out)
    sink.log_many(row.as_dict() for row in rows)

    try:
        band = band_ratio(rows, top=min(6, len(rows)))
    except DomainError:
        band = None
    results = {
        "case": case.value,
        "out": out,
        "rows": len(rows),
        "failed": sum(1 for r in rows if not r.ok),
        "band_ratio": band,
    }
    echo = dict(spec.describe(), n_values=grid, D=D)
    _emit_json(_envelope("sweep", echo, results, args.reproducible))
    return EXIT_OK


def cmd_cstar(args) -> int:
    tolerance = settings.CSTAR_TOLERANCE if args.tolerance is None else args.tolerance
    root = solve_cstar(tolerance)
    residual = abs(cstar_equation(root))
    sys.stdout.write(f"{root:.10f}\n")
    sys.stdout.write(f"residual {residual:.3e}\n")
    return EXIT_OK


# ------------------------------------------------------------
# Parser
# ------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value settings file (EWENS_BERRY_* keys)")
    common.add_argument("--reproducible", action="store_true", help="omit the timestamp")
    common.add_argument("--debug", action="store_true", help="DEBUG-level logging on stderr")

    parser = argparse.ArgumentParser(
        prog="ewens-berry",
        description="Exact law of the Ewens partition length and its normal approximation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p):
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--theta", type=_theta, required=True, help="p/q, integer or decimal")
        return p

    p = with_params(sub.add_parser("dist", parents=[common], help="pmf and cdf of K"))
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(handler=cmd_dist)

    p = with_params(sub.add_parser("moments", parents=[common], help="moment sums and envelopes"))
    p.set_defaults(handler=cmd_moments)

    p = with_params(sub.add_parser("bounds", parents=[common], help="bounds and distances"))
    p.add_argument("--D", type=_positive_float, default=None)
    p.add_argument("--C", type=_positive_float, default=None)
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("sweep", parents=[common], help="decay-rate table along a coupling")
    p.add_argument("--coupling", choices=("fixed", "power", "ratio"), required=True)
    p.add_argument("--theta0", type=_positive_float)
    p.add_argument("--a", type=_positive_float)
    p.add_argument("--p", type=_nonnegative_float)
    p.add_argument("--c", type=_positive_float)
    p.add_argument("--n-values", type=_n_grid, default=None, help="comma-separated n")
    p.add_argument("--log2-min", type=_nonnegative_float, default=None)
    p.add_argument("--log2-max", type=_nonnegative_float, default=None)
    p.add_argument("--points", type=_positive_int, default=None)
    p.add_argument("--D", type=_positive_float, default=None)
    p.add_argument("--jobs", type=_positive_int, default=None)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("cstar", parents=[common], help="root c* of the sign-change equation")
    p.add_argument("--tolerance", type=_tolerance, default=None)
    p.set_defaults(handler=cmd_cstar)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.config is not None:
            use_settings(load_settings(args.config))
        configure_logging(args.debug or settings.DEBUG)
        return args.handler(args)
    except EwensError as exc:
        logger.error("[CLI] %s: %s", args.command, exc)
        return exc.exit_status
