"""Kernel estimators on length-biased samples.

All density and quantile-density estimators take a sorted sample and only
visit observations inside the kernel window ``|x - Y_i| <= h``, found by
binary search, so evaluating ``m`` points costs ``O(n log n + window)``.
"""

from __future__ import annotations

import logging
from typing import Final

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.shared.types import ArrayLike, FloatArray

from .kernels import KernelSpec
from .sample import LBSample


logger = logging.getLogger(__name__)

# R(f'') of a normal density is 3 / (8 sqrt(pi) sigma^5)
_NORMAL_ROUGHNESS: Final[float] = 3.0 / (8.0 * np.sqrt(np.pi))
_RELATIVE_VARIANCE_FLOOR: Final[float] = 1e-12


def _check_bandwidth(h: float) -> None:
    if not (np.isfinite(h) and h > 0):
        raise exc.ValidationError("Bandwidth must be positive and finite", bandwidth=h)


def windowed_kernel_sum(
    centers: FloatArray,
    weights: FloatArray,
    x: FloatArray,
    h: float,
    kernel: KernelSpec,
) -> FloatArray:
    """``sum_i weights[i] * K((x - centers[i]) / h)`` for every point of ``x``.

    ``centers`` must be sorted. Terms are added in index order per point.
    """
    lo = np.searchsorted(centers, x - h, side="left")
    hi = np.searchsorted(centers, x + h, side="right")
    counts = hi - lo
    total = int(counts.sum())
    if total == 0:
        return np.zeros(x.shape, dtype=np.float64)

    rows = np.repeat(np.arange(x.size), counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    cols = lo[rows] + offsets
    terms = weights[cols] * kernel((x[rows] - centers[cols]) / h)
    return np.bincount(rows, weights=terms, minlength=x.size)


def _points(x: ArrayLike) -> tuple[FloatArray, tuple[int, ...]]:
    arr = np.asarray(x, dtype=np.float64)
    return np.atleast_1d(arr).ravel(), arr.shape


def cox_mean(s: LBSample) -> float:
    return s.n / s.sum_inv


def jones_density(s: LBSample, h: float, k: KernelSpec, x: ArrayLike) -> FloatArray:
    """``f_n(x) = mu / (n h) * sum_i K((x - Y_i) / h) / Y_i``; integrates to one."""
    _check_bandwidth(h)
    flat, shape = _points(x)
    sums = windowed_kernel_sum(s.values, 1.0 / s.values, flat, h, k)
    return (cox_mean(s) / (s.n * h) * sums).reshape(shape)


def bhatta_density(s: LBSample, h: float, k: KernelSpec, x: ArrayLike) -> FloatArray:
    """``f_1(x) = (1/h) sum_i K((x - Y_i) / h) / (x sum_i 1/Y_i)``, defined for ``x > 0``."""
    _check_bandwidth(h)
    flat, shape = _points(x)
    if np.any(~(flat > 0.0)):
        raise exc.DomainError("Bhattacharyya density needs x > 0")

    sums = windowed_kernel_sum(s.values, np.ones(s.n), flat, h, k)
    return (sums / (h * flat * s.sum_inv)).reshape(shape)


def unweighted_jones_density(s: LBSample, h: float, k: KernelSpec, x: ArrayLike) -> FloatArray:
    """Plain kernel sum over ``sum_i 1/Y_i``; does not integrate to one."""
    _check_bandwidth(h)
    flat, shape = _points(x)
    sums = windowed_kernel_sum(s.values, np.ones(s.n), flat, h, k)
    return (sums / (h * s.sum_inv)).reshape(shape)


def sen_index(s: LBSample, u: ArrayLike) -> FloatArray:
    """Zero-based ``k_n - 1`` with ``k_n = max{k : S_k <= u S_n}``, or 0 if there is none."""
    flat, shape = _points(u)
    if np.any(~((flat >= 0.0) & (flat <= 1.0))):
        raise exc.DomainError("Empirical quantile needs 0 <= u <= 1")

    count = np.searchsorted(s.inv_prefix, flat * s.sum_inv, side="right")
    return (np.maximum(count, 1) - 1).reshape(shape)


def sen_quantile(s: LBSample, u: ArrayLike) -> FloatArray:
    return s.values[sen_index(s, u)]


def jump_points(s: LBSample) -> FloatArray:
    """``T_i = S_i / S_n`` for ``i = 1 .. n-1``."""
    return s.inv_prefix[:-1] / s.sum_inv


def q1n(s: LBSample, h: float, k: KernelSpec, u: ArrayLike) -> FloatArray:
    return 1.0 / jones_density(s, h, k, sen_quantile(s, u))


def q2n(s: LBSample, h: float, k: KernelSpec, u: ArrayLike) -> FloatArray:
    """Kernel-smoothed spacings ``(1/h) sum_i K((T_i - u) / h) (Y_(i+1) - Y_(i))``."""
    _check_bandwidth(h)
    flat, shape = _points(u)
    spacings = np.diff(s.values)
    sums = windowed_kernel_sum(jump_points(s), spacings, flat, h, k)
    return (sums / h).reshape(shape)


def rot_bandwidth(s: LBSample, k: KernelSpec) -> float:
    """Normal-reference rule of thumb for the 1/Y-weighted estimator.

    Moments of the unbiased law are recovered as ``E_f(X^k) = mu * mean(Y^(k-1))``.
    """
    mu = cox_mean(s)
    m_inv = mu * float(np.mean(s.values**-2.0))
    variance = mu * float(np.mean(s.values)) - mu * mu

    # the moment difference cancels to a few ulps on constant samples
    if s.values[-1] == s.values[0] or not (
        np.isfinite(variance) and variance > _RELATIVE_VARIANCE_FLOOR * mu * mu
    ):
        raise exc.DegenerateSampleError(
            "Rule-of-thumb bandwidth needs a positive variance estimate", variance=variance
        )

    roughness, mu2 = k.constants
    curvature = _NORMAL_ROUGHNESS / variance**2.5
    h = (roughness * mu * m_inv / (mu2 * mu2 * curvature)) ** 0.2 * s.n**-0.2
    logger.debug("Rule-of-thumb bandwidth %.6g (n=%d, sigma=%.6g)", h, s.n, np.sqrt(variance))
    return float(h)


def resolve_bandwidth(s: LBSample, k: KernelSpec, explicit: float | None) -> float:
    if explicit is None:
        return rot_bandwidth(s, k)

    _check_bandwidth(explicit)
    return explicit
