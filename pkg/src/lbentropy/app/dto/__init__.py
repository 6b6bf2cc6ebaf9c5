from . import estimator, fit, model, sample, study
from .base import BaseDTO, ConfigDTO, ReportDTO
from .estimator import EntropyEstimate, EstimateReport, EstimatorConfig, EstimatorName
from .fit import FitOptions, FitReport, FitResult, PowerParetoParams
from .model import ModelSpec, TrueEntropyReport
from .sample import SampleDraw
from .study import CellSpec, StudyConfig, StudyReport, StudyRow


__all__ = (
    "BaseDTO",
    "CellSpec",
    "ConfigDTO",
    "EntropyEstimate",
    "EstimateReport",
    "EstimatorConfig",
    "EstimatorName",
    "FitOptions",
    "FitReport",
    "FitResult",
    "ModelSpec",
    "PowerParetoParams",
    "ReportDTO",
    "SampleDraw",
    "StudyConfig",
    "StudyReport",
    "StudyRow",
    "TrueEntropyReport",
    "estimator",
    "fit",
    "model",
    "sample",
    "study",
)
