"""Subcommand bodies: flags and config files in, one bus dispatch, output out."""

from __future__ import annotations

import argparse
from collections.abc import Callable
from pathlib import Path
from typing import Any

from lbentropy.app import dto
from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.contracts.context import Context
from lbentropy.app.use_cases import commands, queries
from lbentropy.infra.io.configs import read_config
from lbentropy.infra.io.reports import write_json, write_values

from .dependencies import Buses


type Subcommand = Callable[[argparse.Namespace, Context, Buses], None]


def _present(values: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in values.items() if v is not None}


def estimator_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return _present({
        "kernel": args.kernel,
        "bandwidth": args.bandwidth,
        "trim": args.trim,
        "grid_points": args.grid_points,
        "eq14_literal": args.eq14_literal,
    })


def estimator_config(args: argparse.Namespace, ctx: Context) -> dto.EstimatorConfig:
    """Settings, then the ``--config`` file, then flags."""
    mapping: dict[str, Any] = ctx.config.estimator.model_dump()
    if args.config is not None:
        mapping.update(read_config(Path(args.config)))
    mapping.update(estimator_overrides(args))

    return dto.EstimatorConfig.from_mapping(mapping)


def study_config(args: argparse.Namespace, ctx: Context) -> dto.StudyConfig:
    """Settings, then the study file (``--config`` or ``--preset``), then flags."""
    path = Path(args.config) if args.config else ctx.config.data.preset_path(args.preset)
    raw = read_config(path)

    nested = raw.pop("estimator", None) or {}
    if not isinstance(nested, dict):
        raise exc.ParseError(f"`estimator` in {path} must be a JSON object", path=str(path))

    settings = ctx.config.study
    mapping: dict[str, Any] = {
        "replicates": settings.replicates,
        "master_seed": settings.master_seed,
        "max_failure_rate": settings.max_failure_rate,
        "truth": settings.truth,
        **raw,
        "estimator": {
            **ctx.config.estimator.model_dump(),
            **nested,
            **estimator_overrides(args),
        },
    }
    estimators = (
        [name.value for name in dto.EstimatorName.parse_list(args.estimators)]
        if args.estimators is not None
        else None
    )
    mapping.update(
        _present({
            "replicates": args.replicates,
            "master_seed": args.seed,
            "truth": args.truth,
            "max_failure_rate": args.max_failure_rate,
            "estimators": estimators,
        })
    )

    return dto.StudyConfig.from_mapping(mapping)


def _data_path(args: argparse.Namespace, ctx: Context) -> str:
    return str(args.data) if args.data is not None else str(ctx.config.data.shrub_path)


def _estimator_names(args: argparse.Namespace) -> list[dto.EstimatorName]:
    if args.estimators is None:
        return list(dto.EstimatorName)

    return dto.EstimatorName.parse_list(args.estimators)


def simulate(args: argparse.Namespace, ctx: Context, buses: Buses) -> None:
    command = commands.simulate.SimulateCommand(
        study=study_config(args, ctx), output=args.output
    )
    buses.commands(ctx, command).result()


def estimate(args: argparse.Namespace, ctx: Context, buses: Buses) -> None:
    query = queries.estimate.EstimateQuery(
        data=_data_path(args, ctx),
        estimators=_estimator_names(args),
        estimator=estimator_config(args, ctx),
        verbose=args.verbose,
    )
    write_json(buses.queries(ctx, query).result(), args.output)


def fit(args: argparse.Namespace, ctx: Context, buses: Buses) -> None:
    options = dto.FitOptions.from_mapping(
        _present({"bias_corrected": args.bias_corrected, "starts": args.starts})
    )
    command = commands.fit.FitCommand(
        data=_data_path(args, ctx),
        options=options,
        estimator=estimator_config(args, ctx),
        qq_output=args.qq_output,
    )
    write_json(buses.commands(ctx, command).result(), args.output)


def sample(args: argparse.Namespace, ctx: Context, buses: Buses) -> None:
    seed = args.seed if args.seed is not None else ctx.config.study.master_seed
    query = queries.sample.SampleQuery(
        model=dto.ModelSpec.parse(args.family, args.params), n=args.n, seed=seed
    )
    draw = buses.queries(ctx, query).result()
    write_values(args.output, draw.values, header="y")


def true_entropy(args: argparse.Namespace, ctx: Context, buses: Buses) -> None:
    query = queries.entropy.TrueEntropyQuery(
        model=dto.ModelSpec.parse(args.family, args.params), trim=args.trim
    )
    write_json(buses.queries(ctx, query).result(), args.output)


SUBCOMMANDS: dict[str, Subcommand] = {
    "simulate": simulate,
    "estimate": estimate,
    "fit": fit,
    "sample": sample,
    "true-entropy": true_entropy,
}
