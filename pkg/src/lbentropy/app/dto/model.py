from __future__ import annotations

from lbentropy.app.common.tools import join_floats
from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.models import QuantileModel, model_from_spec

from .base import ConfigDTO, ReportDTO


class ModelSpec(ConfigDTO):
    """``{"family": ..., "params": [...]}`` with parameters in the published order."""

    family: str
    params: list[float]

    def __post_init__(self) -> None:
        self.build()

    @classmethod
    def from_model(cls, model: QuantileModel) -> ModelSpec:
        return cls(family=model.family, params=list(model.params))

    @classmethod
    def parse(cls, family: str, params: str) -> ModelSpec:
        """Build from CLI text such as ``govindarajulu`` and ``0,1,0.25``."""
        try:
            values = [float(p) for p in params.split(",") if p.strip()]
        except ValueError as e:
            raise exc.ParseError(f"Cannot parse model parameters `{params}`", code="params") from e

        return cls(family=family, params=values)

    def build(self) -> QuantileModel:
        return model_from_spec(self.family, self.params)

    @property
    def params_text(self) -> str:
        return join_floats(self.params)


class TrueEntropyReport(ReportDTO):
    model: str
    params: list[float]
    entropy: float
    trim: float
    mean: float
