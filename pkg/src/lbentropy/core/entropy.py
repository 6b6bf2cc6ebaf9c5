"""Plug-in entropy estimators on length-biased samples."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from typing import assert_never

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.dto.estimator import EntropyEstimate, EstimatorConfig, EstimatorName
from lbentropy.shared.types import ArrayLike, FloatArray

from . import estimators as est
from .kernels import KernelSpec
from .sample import LBSample


logger = logging.getLogger(__name__)

type Density = Callable[[LBSample, float, KernelSpec, ArrayLike], FloatArray]


def u_grid(cfg: EstimatorConfig) -> FloatArray:
    return np.linspace(cfg.trim, 1.0 - cfg.trim, cfg.grid_points)


def log_integral(values: FloatArray, trim: float, floor: float) -> tuple[float, float]:
    """Trapezoid of ``log(max(v, floor))`` on a uniform grid over ``[trim, 1 - trim]``.

    Returns the integral and the fraction of nodes that fell below ``floor``.
    """
    values = np.asarray(values, dtype=np.float64)
    floored = values < floor
    logs = np.log(np.maximum(values, floor))
    step = (1.0 - 2.0 * trim) / (values.size - 1)
    return float(np.trapezoid(logs, dx=step)), float(np.mean(floored))


def _finish(
    name: EstimatorName,
    value: float,
    floored: float,
    h: float,
    trim: float,
    m: int,
) -> EntropyEstimate:
    result = EntropyEstimate(
        estimator=name,
        value=value,
        floored_fraction=floored,
        bandwidth=h,
        trim=trim,
        grid_points=m,
    )
    if result.warning:
        logger.warning(
            "%s floored %.1f%% of grid nodes (h=%.4g); bandwidth may be too small",
            name,
            100 * floored,
            h,
        )
    return result


def _bandwidth(s: LBSample, cfg: EstimatorConfig, bandwidth: float | None) -> float:
    if bandwidth is not None:
        return bandwidth

    return est.resolve_bandwidth(s, cfg.kernel_spec, cfg.explicit_bandwidth)


def xi1(s: LBSample, cfg: EstimatorConfig, bandwidth: float | None = None) -> EntropyEstimate:
    """``-integral of log f_n(Q_n(u))`` over the trimmed grid."""
    kernel = cfg.kernel_spec
    h = _bandwidth(s, cfg, bandwidth)
    density = est.jones_density(s, h, kernel, est.sen_quantile(s, u_grid(cfg)))
    value, floored = log_integral(density, cfg.trim, cfg.log_floor)
    return _finish(EstimatorName.XI1, -value, floored, h, cfg.trim, cfg.grid_points)


def xi2(s: LBSample, cfg: EstimatorConfig, bandwidth: float | None = None) -> EntropyEstimate:
    """``integral of log q2n(u)`` over the trimmed grid."""
    kernel = cfg.kernel_spec
    h = _bandwidth(s, cfg, bandwidth)
    value, floored = log_integral(est.q2n(s, h, kernel, u_grid(cfg)), cfg.trim, cfg.log_floor)
    return _finish(EstimatorName.XI2, value, floored, h, cfg.trim, cfg.grid_points)


def x_grid(s: LBSample, h: float, cfg: EstimatorConfig) -> FloatArray:
    lower = max(float(s.values[0]) - h, cfg.x_min_ratio * float(s.values[0]))
    upper = float(s.values[-1]) + h
    return np.linspace(lower, upper, cfg.x_grid_points)


def h_integral(
    s: LBSample,
    cfg: EstimatorConfig,
    variant: EstimatorName,
    bandwidth: float | None = None,
) -> EntropyEstimate:
    """``-integral of f log f`` for the Bhattacharyya (H1) or Jones (H2) density."""
    density: Density
    match variant:
        case EstimatorName.H1:
            density = est.bhatta_density
        case EstimatorName.H2:
            density = est.unweighted_jones_density if cfg.eq14_literal else est.jones_density
        case EstimatorName.XI1 | EstimatorName.XI2:
            raise exc.DomainError(f"{variant} is not an integral estimator")
        case _:
            assert_never(variant)

    kernel = cfg.kernel_spec
    h = _bandwidth(s, cfg, bandwidth)
    x = x_grid(s, h, cfg)
    f = density(s, h, kernel, x)

    positive = f > cfg.log_floor
    # t log t -> 0 as t -> 0
    integrand = np.where(positive, -f * np.log(np.where(positive, f, 1.0)), 0.0)
    value = float(np.trapezoid(integrand, x))
    return _finish(variant, value, float(np.mean(~positive)), h, 0.0, cfg.x_grid_points)


def estimate(
    s: LBSample,
    cfg: EstimatorConfig,
    name: EstimatorName,
    bandwidth: float | None = None,
) -> EntropyEstimate:
    match name:
        case EstimatorName.XI1:
            return xi1(s, cfg, bandwidth)
        case EstimatorName.XI2:
            return xi2(s, cfg, bandwidth)
        case EstimatorName.H1 | EstimatorName.H2:
            return h_integral(s, cfg, name, bandwidth)
        case _:
            assert_never(name)


def estimate_many(
    s: LBSample,
    cfg: EstimatorConfig,
    names: Sequence[EstimatorName],
) -> dict[EstimatorName, EntropyEstimate]:
    """Every estimator in ``names`` with one shared bandwidth."""
    h = est.resolve_bandwidth(s, cfg.kernel_spec, cfg.explicit_bandwidth)
    return {name: estimate(s, cfg, name, h) for name in names}
