"""Monte-Carlo study engine: replicate generation, estimation and aggregation."""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.contracts.result import AppResult
from lbentropy.app.dto.estimator import EntropyEstimate, EstimatorConfig, EstimatorName
from lbentropy.app.dto.model import ModelSpec
from lbentropy.app.dto.study import StudyConfig, StudyReport, StudyRow, TruthMode
from lbentropy.shared.result import ResultImpl, as_result

from . import estimators as est
from .entropy import estimate
from .models import QuantileModel
from .sample import LBSample
from .sampling import LBSampler
from .streams import cell_key, replicate_stream


logger = logging.getLogger(__name__)

type Outcome = AppResult[EntropyEstimate]


class Aggregate(NamedTuple):
    mse: float
    abs_bias: float
    mean: float
    mae: float
    mc_se: float


def aggregate(estimates: Sequence[float], truth: float) -> Aggregate:
    """MSE and absolute bias of ``estimates`` around ``truth``.

    ``mae`` is the mean absolute error and ``mc_se`` the standard error of
    the mean estimate.
    """
    values = np.asarray(estimates, dtype=np.float64)
    if values.size < 2:
        raise exc.ValidationError("Aggregation needs at least two estimates", count=values.size)
    if not (np.all(np.isfinite(values)) and math.isfinite(truth)):
        raise exc.ValidationError("Estimates and truth must be finite")

    errors = values - truth
    mean = float(np.mean(values))
    return Aggregate(
        mse=float(np.mean(errors**2)),
        abs_bias=abs(mean - truth),
        mean=mean,
        mae=float(np.mean(np.abs(errors))),
        mc_se=float(np.std(values, ddof=1) / math.sqrt(values.size)),
    )


def truth_for(model: QuantileModel, name: EstimatorName, trim: float, mode: TruthMode) -> float:
    """Target of ``name``.

    Quantile-based estimators are scored against the trimmed integral in ``trimmed`` mode.
    """
    if name.quantile_based and mode == "trimmed":
        return model.true_entropy(trim)

    return model.true_entropy()


@dataclass(frozen=True, slots=True)
class _Cell:
    sampler: LBSampler
    n: int
    key: int
    master_seed: int
    estimators: Sequence[EstimatorName]
    cfg: EstimatorConfig

    def replicate(self, index: int) -> dict[EstimatorName, Outcome]:
        rng = replicate_stream(self.master_seed, self.key, index)
        sample: ResultImpl[LBSample, exc.AppError] = as_result(self.sampler.sample)(self.n, rng)
        if (err := sample.error()) is not None:
            return dict.fromkeys(self.estimators, ResultImpl.failed(err))

        s = sample.unwrap()
        bandwidth = as_result(est.resolve_bandwidth)(
            s, self.cfg.kernel_spec, self.cfg.explicit_bandwidth
        )
        if (err := bandwidth.error()) is not None:
            return dict.fromkeys(self.estimators, ResultImpl.failed(err))

        h = bandwidth.unwrap()
        return {name: as_result(estimate)(s, self.cfg, name, h) for name in self.estimators}


def _row(
    model: QuantileModel,
    n: int,
    name: EstimatorName,
    truth: float,
    outcomes: Sequence[Outcome],
    max_failures: float,
    wall_time: float,
) -> StudyRow:
    ok = [o.unwrap() for o in outcomes if o.is_ok()]
    failures = len(outcomes) - len(ok)

    if failures > max_failures or len(ok) < 2:
        logger.error(
            "%s n=%d %s: %d of %d replicates failed", model.label, n, name, failures, len(outcomes)
        )
        stats = Aggregate(*(math.nan,) * 5)
        floored = math.nan
    else:
        stats = aggregate([e.value for e in ok], truth)
        floored = float(np.mean([e.floored_fraction for e in ok]))

    return StudyRow(
        model=model.family,
        params=ModelSpec.from_model(model).params_text,
        n=n,
        estimator=name,
        truth=truth,
        mse=stats.mse,
        abs_bias=stats.abs_bias,
        mean_estimate=stats.mean,
        failures=failures,
        floored_frac=floored,
        mae=stats.mae,
        mc_se=stats.mc_se,
        wall_time=wall_time,
    )


def run_cell(
    model: QuantileModel,
    n: int,
    replicates: int,
    estimators: Sequence[EstimatorName],
    cfg: EstimatorConfig,
    master_seed: int,
    *,
    threads: int = 1,
    max_failure_rate: float = 0.01,
    truth: TruthMode = "trimmed",
    sampler: LBSampler | None = None,
) -> list[StudyRow]:
    """Run ``replicates`` samples of size ``n`` and aggregate one row per estimator.

    Replicate ``r`` always draws from the stream keyed by
    ``(master_seed, cell_key(model, n), r)`` and results are consumed in
    replicate order, so rows do not depend on ``threads``.
    """
    started = time.perf_counter()
    cell = _Cell(
        sampler=sampler or LBSampler.from_model(model),
        n=n,
        key=cell_key(model.family, model.params, n),
        master_seed=master_seed,
        estimators=tuple(estimators),
        cfg=cfg,
    )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(cell.replicate, range(replicates)))
    else:
        outcomes = [cell.replicate(r) for r in range(replicates)]

    for r, per_estimator in enumerate(outcomes):
        for name, outcome in per_estimator.items():
            if (err := outcome.error()) is not None:
                logger.warning(
                    "Replicate %d of %s n=%d failed for %s: %s", r, model.label, n, name, err
                )

    elapsed = time.perf_counter() - started
    rows = [
        _row(
            model,
            n,
            name,
            truth_for(model, name, cfg.trim, truth),
            [per_estimator[name] for per_estimator in outcomes],
            max_failure_rate * replicates,
            elapsed,
        )
        for name in cell.estimators
    ]
    logger.info("Cell %s n=%d finished in %.2fs", model.label, n, elapsed)
    return rows


def run_study(cfg: StudyConfig, *, threads: int = 1, version: str = "") -> StudyReport:
    """Execute every (model, n) cell of ``cfg`` in config order."""
    rows: list[StudyRow] = []
    for spec in cfg.cells:
        model = spec.model.build()
        sampler = LBSampler.from_model(model)
        for n in spec.sample_sizes:
            rows.extend(
                run_cell(
                    model,
                    n,
                    cfg.replicates,
                    cfg.estimators,
                    cfg.estimator,
                    cfg.master_seed,
                    threads=threads,
                    max_failure_rate=cfg.max_failure_rate,
                    truth=cfg.truth,
                    sampler=sampler,
                )
            )

    return StudyReport(
        rows=rows,
        version=version,
        master_seed=cfg.master_seed,
        config_sha256=cfg.sha256,
    )
