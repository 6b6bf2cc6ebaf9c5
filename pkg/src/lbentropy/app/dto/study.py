from __future__ import annotations

import hashlib
import math
from typing import Final, Literal

from msgspec import field

from lbentropy.app.common.tools import full, rounded
from lbentropy.app.contracts import exceptions as exc

from .base import ConfigDTO, ReportDTO
from .estimator import EstimatorConfig, EstimatorName
from .model import ModelSpec


MIN_REPLICATES: Final[int] = 2
MIN_SAMPLE_SIZE: Final[int] = 10
REPORT_COLUMNS: Final[tuple[str, ...]] = (
    "model",
    "params",
    "n",
    "estimator",
    "truth",
    "mse",
    "abs_bias",
    "mean_estimate",
    "failures",
    "floored_frac",
    "mae",
    "mc_se",
)

type TruthMode = Literal["trimmed", "full"]


def _all_estimators() -> list[EstimatorName]:
    return list(EstimatorName)


class CellSpec(ConfigDTO):
    model: ModelSpec
    sample_sizes: list[int]

    def __post_init__(self) -> None:
        if not self.sample_sizes:
            raise exc.ValidationError(
                "A cell needs at least one sample size", model=self.model.family
            )
        if any(n < MIN_SAMPLE_SIZE for n in self.sample_sizes):
            raise exc.ValidationError(
                f"Sample sizes must be at least {MIN_SAMPLE_SIZE}", sample_sizes=self.sample_sizes
            )


class StudyConfig(ConfigDTO):
    cells: list[CellSpec]
    replicates: int = 200
    estimators: list[EstimatorName] = field(default_factory=_all_estimators)
    estimator: EstimatorConfig = field(default_factory=EstimatorConfig)
    master_seed: int = 20240917
    max_failure_rate: float = 0.01
    truth: Literal["trimmed", "full"] = "trimmed"

    def __post_init__(self) -> None:
        if not self.cells:
            raise exc.ValidationError("Study has no cells", code="cells")
        if self.replicates < MIN_REPLICATES:
            raise exc.ValidationError(
                f"At least {MIN_REPLICATES} replicates are needed", replicates=self.replicates
            )
        if not self.estimators:
            raise exc.ValidationError("Estimator set is empty", code="estimators")
        if not 0 <= self.master_seed < 2**64:
            raise exc.ValidationError("master_seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.max_failure_rate < 1.0:
            raise exc.ValidationError(
                "max_failure_rate must lie in [0, 1)", max_failure_rate=self.max_failure_rate
            )

    @property
    def sha256(self) -> str:
        return hashlib.sha256(self.as_string(canonical=True).encode()).hexdigest()


class StudyRow(ReportDTO):
    model: str
    params: str
    n: int
    estimator: EstimatorName
    truth: float
    mse: float
    abs_bias: float
    mean_estimate: float
    failures: int
    floored_frac: float
    mae: float
    mc_se: float
    wall_time: float = 0.0

    @property
    def failed(self) -> bool:
        return math.isnan(self.mse)

    def csv_record(self) -> list[str]:
        return [
            self.model,
            self.params,
            str(self.n),
            self.estimator.value,
            full(self.truth),
            full(self.mse),
            full(self.abs_bias),
            full(self.mean_estimate),
            str(self.failures),
            full(self.floored_frac),
            full(self.mae),
            full(self.mc_se),
        ]

    def summary(self) -> str:
        return (
            f"{self.model}({self.params}) n={self.n} {self.estimator}: "
            f"MSE={rounded(self.mse)} |bias|={rounded(self.abs_bias)} failures={self.failures}"
        )


class StudyReport(ReportDTO):
    rows: list[StudyRow]
    version: str
    master_seed: int
    config_sha256: str

    @property
    def failed_cells(self) -> int:
        return len({(r.model, r.params, r.n) for r in self.rows if r.failed})

    def provenance(self) -> str:
        return (
            f"# lbentropy {self.version} master_seed={self.master_seed} "
            f"config_sha256={self.config_sha256}"
        )
