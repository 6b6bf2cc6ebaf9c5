from __future__ import annotations

from .base import ReportDTO
from .model import ModelSpec


class SampleDraw(ReportDTO):
    model: ModelSpec
    n: int
    seed: int
    mu: float
    values: list[float]
