from __future__ import annotations

import argparse
from typing import Final, Literal

from lbentropy import __version__
from lbentropy.core.kernels import KernelKind


LOG_LEVELS: Final[tuple[str, ...]] = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

ESTIMATOR_KEYS: Final[str] = """\
estimator config keys (JSON object; env LBE_ESTIMATOR_<KEY>):
  kernel         epanechnikov | triangular | uniform  (default epanechnikov)
  bandwidth      "rot" or a positive number            (default "rot")
  grid_points    u-grid nodes for xi1/xi2              (default 501)
  trim           integration trim delta in (0, 0.5)    (default 0.01)
  log_floor      floor applied before taking logs      (default 1e-12)
  x_grid_points  x-grid nodes for H1/H2                (default 1001)
  x_min_ratio    H1 lower limit as a fraction of Y(1)  (default 0.5)
  eq14_literal   unweighted kernel sum for the H2 density (default false)
"""

STUDY_KEYS: Final[str] = f"""\
study config keys (JSON object; env LBE_STUDY_<KEY> where noted):
  cells             list of {{"model": {{"family", "params"}}, "sample_sizes": [...]}}
  replicates        Monte-Carlo replicates per cell     (default 200, env)
  estimators        subset of xi1, xi2, H1, H2          (default all)
  estimator         nested estimator config, see below
  master_seed       64-bit unsigned seed                (default 20240917, env)
  max_failure_rate  tolerated failed replicates share   (default 0.01, env)
  truth             trimmed | full                      (default trimmed, env)
  threads           env only; "auto" or a count         (default auto)

{ESTIMATOR_KEYS}"""

DATA_KEYS: Final[str] = """\
data settings (env LBE_DATA_<KEY>):
  dir         directory holding data files (default <repo>/data)
  shrub_file  default sample file name     (default shrub_widths.csv)
  presets_dir directory of --preset configs (default <repo>/configs)
"""

MODEL_KEYS: Final[str] = """\
model families and parameter order:
  govindarajulu      theta, sigma, beta
  gld                lambda1, lambda2, lambda3, lambda4
  power_pareto       C, lambda1, lambda2
  uniform            a, b
"""


def bandwidth_arg(raw: str) -> float | Literal["rot"]:
    if raw.strip().lower() == "rot":
        return "rot"
    try:
        value = float(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected `rot` or a number, got `{raw}`") from e
    if not value > 0:
        raise argparse.ArgumentTypeError("bandwidth must be positive")

    return value


def threads_arg(raw: str) -> int | Literal["auto"]:
    if raw == "auto":
        return "auto"
    try:
        value = int(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected `auto` or an integer, got `{raw}`") from e
    if value < 1:
        raise argparse.ArgumentTypeError("threads must be at least 1")

    return value


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Logging level on stderr (env LBE_LOG_LEVEL, default INFO)",
    )
    parent.add_argument(
        "-o",
        "--output",
        default=None,
        help="Output file; stdout when omitted or `-`",
    )
    return parent


def _estimator_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("estimator overrides")
    group.add_argument("--kernel", choices=[k.value for k in KernelKind], default=None)
    group.add_argument("--bandwidth", type=bandwidth_arg, default=None, help="`rot` or h > 0")
    group.add_argument("--trim", type=float, default=None, help="Trim delta in (0, 0.5)")
    group.add_argument("--grid-points", type=int, default=None, help="u-grid nodes")
    group.add_argument(
        "--eq14-literal",
        action="store_true",
        default=None,
        help="Use the unweighted kernel sum for the H2 density",
    )
    return parent


def _estimators_flag(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument(
        "--estimators",
        default=None,
        help=f"Comma-separated subset of xi1,xi2,H1,H2 ({help_text})",
    )


def _model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, help="Model family")
    parser.add_argument("--params", required=True, help="Comma-separated parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lbentropy",
        description="Quantile-based Shannon entropy from length-biased samples.",
        epilog=DATA_KEYS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common, estimator = _common(), _estimator_flags()

    simulate = sub.add_parser(
        "simulate",
        parents=[common, estimator],
        help="Run a Monte-Carlo study and write the report CSV",
        epilog=STUDY_KEYS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    source = simulate.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", default=None, help="Study config JSON file")
    source.add_argument("--preset", default=None, help="Shipped study config name")
    simulate.add_argument("--seed", type=int, default=None, help="master_seed override")
    simulate.add_argument("--replicates", type=int, default=None)
    simulate.add_argument("--threads", type=threads_arg, default=None, help="`auto` or a count")
    simulate.add_argument("--truth", choices=("trimmed", "full"), default=None)
    simulate.add_argument("--max-failure-rate", type=float, default=None)
    _estimators_flag(simulate, "default: config value")

    estimate = sub.add_parser(
        "estimate",
        parents=[common, estimator],
        help="Estimate entropy of a sample CSV and print JSON",
        epilog=f"{ESTIMATOR_KEYS}\n{DATA_KEYS}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    estimate.add_argument("--data", default=None, help="Sample CSV (default: shipped data)")
    estimate.add_argument("--config", default=None, help="Estimator config JSON file")
    estimate.add_argument(
        "--verbose", action="store_true", help="Also report xi1/xi2 at trims 0.005 and 0.02"
    )
    _estimators_flag(estimate, "default: all")

    fit = sub.add_parser(
        "fit",
        parents=[common, estimator],
        help="Fit a Power-Pareto model to a sample CSV and print JSON",
        epilog=f"{ESTIMATOR_KEYS}\n{DATA_KEYS}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    fit.add_argument("--data", default=None, help="Sample CSV (default: shipped data)")
    fit.add_argument("--config", default=None, help="Estimator config JSON file")
    fit.add_argument(
        "--bias-corrected",
        action="store_true",
        help="Score observations under the length-biased density",
    )
    fit.add_argument("--starts", type=int, default=None, help="Nelder-Mead starts (default 8)")
    fit.add_argument(
        "--qq-output",
        default="qq_points.csv",
        help="Q-Q pairs CSV (default qq_points.csv; `-` for stdout)",
    )

    sample = sub.add_parser(
        "sample",
        parents=[common],
        help="Draw a length-biased sample from a model and write CSV",
        epilog=MODEL_KEYS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _model_flags(sample)
    sample.add_argument("--n", type=int, required=True, help="Sample size")
    sample.add_argument("--seed", type=int, default=None, help="Seed (default: master_seed)")

    true_entropy = sub.add_parser(
        "true-entropy",
        parents=[common],
        help="Print the quantile entropy of a model as JSON",
        epilog=MODEL_KEYS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _model_flags(true_entropy)
    true_entropy.add_argument(
        "--trim", type=float, default=0.0, help="Integrate over [trim, 1 - trim] (default 0)"
    )

    return parser
