from __future__ import annotations

import os
from pathlib import Path
from typing import TYPE_CHECKING, Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


if TYPE_CHECKING:
    import _typeshed

type KernelName = Literal["epanechnikov", "triangular", "uniform"]
type TruthMode = Literal["trimmed", "full"]
type LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def root_dir() -> Path:
    return Path(__file__).resolve().parent.parent.parent


def absolute_path(
    *paths: _typeshed.StrPath | Path,
    base_path: _typeshed.StrPath | Path | None = None,
) -> str:
    if base_path is None:
        base_path = root_dir()

    return os.path.join(base_path, *paths)  # noqa: PTH118


class EstimatorSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=absolute_path(".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LBE_ESTIMATOR_",
        extra="ignore",
    )
    kernel: KernelName = "epanechnikov"
    bandwidth: float | Literal["rot"] = "rot"
    grid_points: int = 501
    trim: float = 0.01
    log_floor: float = 1e-12
    x_grid_points: int = 1001
    x_min_ratio: float = 0.5
    eq14_literal: bool = False


class StudySettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=absolute_path(".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LBE_STUDY_",
        extra="ignore",
    )
    replicates: int = 200
    master_seed: int = 20240917
    threads: int | Literal["auto"] = "auto"
    max_failure_rate: float = 0.01
    truth: TruthMode = "trimmed"

    def threads_count(self) -> int:
        if self.threads == "auto":
            return max(1, os.cpu_count() or 1)

        return max(1, self.threads)


class DataSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=absolute_path(".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LBE_DATA_",
        extra="ignore",
    )
    dir: Path = Path(absolute_path("data"))
    shrub_file: str = "shrub_widths.csv"
    presets_dir: Path = Path(absolute_path("configs"))

    @property
    def shrub_path(self) -> Path:
        return self.dir / self.shrub_file

    def preset_path(self, name: str) -> Path:
        return self.presets_dir / f"{name}.json"


class LogSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=absolute_path(".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LBE_LOG_",
        extra="ignore",
    )
    level: LogLevel = "INFO"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class AppConfig(BaseSettings):
    estimator: EstimatorSettings
    study: StudySettings
    data: DataSettings
    log: LogSettings


def load_config(
    estimator: EstimatorSettings | None = None,
    study: StudySettings | None = None,
    data: DataSettings | None = None,
    log: LogSettings | None = None,
) -> AppConfig:
    return AppConfig(
        estimator=estimator or EstimatorSettings(),
        study=study or StudySettings(),
        data=data or DataSettings(),
        log=log or LogSettings(),
    )
