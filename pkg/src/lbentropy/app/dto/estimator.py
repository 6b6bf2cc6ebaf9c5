from __future__ import annotations

import enum
from typing import Final, Literal, Self

import msgspec

from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.kernels import KernelSpec

from .base import ConfigDTO, ReportDTO


FLOOR_WARNING: Final[float] = 0.05
MIN_GRID: Final[int] = 11


@enum.unique
class EstimatorName(enum.StrEnum):
    XI1 = "xi1"
    XI2 = "xi2"
    H1 = "H1"
    H2 = "H2"

    @classmethod
    def parse(cls, raw: str) -> EstimatorName:
        for member in cls:
            if member.value.lower() == raw.strip().lower():
                return member

        raise exc.ValidationError(
            f"Unknown estimator `{raw}`", code="estimator", choices=", ".join(cls)
        )

    @classmethod
    def parse_list(cls, raw: str) -> list[EstimatorName]:
        names = [cls.parse(part) for part in raw.split(",") if part.strip()]
        if not names:
            raise exc.ValidationError("Estimator list is empty", code="estimators")

        return list(dict.fromkeys(names))

    @property
    def quantile_based(self) -> bool:
        return self in (EstimatorName.XI1, EstimatorName.XI2)


class EstimatorConfig(ConfigDTO):
    kernel: str = "epanechnikov"
    bandwidth: float | Literal["rot"] = "rot"
    grid_points: int = 501
    trim: float = 0.01
    log_floor: float = 1e-12
    x_grid_points: int = 1001
    x_min_ratio: float = 0.5
    eq14_literal: bool = False

    def __post_init__(self) -> None:
        KernelSpec.from_name(self.kernel)
        if self.bandwidth != "rot" and not self.bandwidth > 0:
            raise exc.ValidationError(
                "Explicit bandwidth must be positive", bandwidth=self.bandwidth
            )
        if not 0.0 < self.trim < 0.5:
            raise exc.ValidationError("trim must lie in (0, 0.5)", trim=self.trim)
        if self.grid_points < MIN_GRID or self.x_grid_points < MIN_GRID:
            raise exc.ValidationError(
                f"Integration grids need at least {MIN_GRID} nodes",
                grid_points=self.grid_points,
                x_grid_points=self.x_grid_points,
            )
        if not self.log_floor > 0:
            raise exc.ValidationError("log_floor must be positive", log_floor=self.log_floor)
        if not 0.0 < self.x_min_ratio < 1.0:
            raise exc.ValidationError(
                "x_min_ratio must lie in (0, 1)", x_min_ratio=self.x_min_ratio
            )

    @property
    def kernel_spec(self) -> KernelSpec:
        return KernelSpec.from_name(self.kernel)

    @property
    def explicit_bandwidth(self) -> float | None:
        return None if self.bandwidth == "rot" else float(self.bandwidth)

    def with_trim(self, trim: float) -> Self:
        return msgspec.structs.replace(self, trim=trim)


class EntropyEstimate(ReportDTO):
    estimator: EstimatorName
    value: float
    floored_fraction: float
    bandwidth: float
    trim: float
    grid_points: int

    @property
    def warning(self) -> bool:
        return self.floored_fraction > FLOOR_WARNING


class EstimateReport(ReportDTO):
    n: int
    bandwidth: float
    trim: float
    estimates: dict[str, float]
    floored_fraction: dict[str, float]
    # xi estimates at other trims, keyed by trim then estimator
    trim_sensitivity: dict[str, dict[str, float]] | None = None
