from __future__ import annotations

from typing import Final

from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.models import PowerPareto

from .base import ConfigDTO, ReportDTO


DEFAULT_STARTS: Final[int] = 8


class FitOptions(ConfigDTO):
    bias_corrected: bool = False
    starts: int = DEFAULT_STARTS

    def __post_init__(self) -> None:
        if self.starts < 1:
            raise exc.ValidationError("At least one start is needed", starts=self.starts)


class PowerParetoParams(ReportDTO):
    C: float
    lambda1: float
    lambda2: float

    def model(self) -> PowerPareto:
        return PowerPareto(self.C, self.lambda1, self.lambda2)


class FitResult(ReportDTO):
    params: PowerParetoParams
    log_likelihood: float
    converged: bool
    n_starts_used: int
    n_converged: int
    bias_corrected: bool


class FitReport(ReportDTO):
    params: PowerParetoParams
    loglik: float
    converged: bool
    ks: float
    n: int
    bias_corrected: bool
    # asymptotic c(alpha) / sqrt(n), advisory only
    ks_reference: dict[str, float]
    true_entropy: float
    true_entropy_trimmed: float
    trim: float
    xi1: float
    xi2: float
    bandwidth: float
    qq_path: str | None = None
