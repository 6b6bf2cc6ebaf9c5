"""Composite Gauss-Legendre quadrature and bracketed monotone root finding."""

from __future__ import annotations

from collections.abc import Callable
from functools import cache
from typing import Final

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.shared.types import FloatArray, IntArray


type VectorFn = Callable[[FloatArray], FloatArray]
type IndexedFn = Callable[[FloatArray, IntArray], FloatArray]

DEFAULT_ORDER: Final[int] = 16
GRADED_LEVELS: Final[int] = 48
UPPER_LEVELS: Final[int] = 30


@cache
def legendre_rule(order: int) -> tuple[FloatArray, FloatArray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_integrals(
    f: VectorFn,
    lo: FloatArray,
    hi: FloatArray,
    order: int = DEFAULT_ORDER,
) -> FloatArray:
    """Integral of ``f`` over each panel ``[lo[k], hi[k]]`` with one Gauss rule per panel."""
    nodes, weights = legendre_rule(order)
    mid = 0.5 * (hi + lo)
    half = 0.5 * (hi - lo)
    points = mid[:, None] + half[:, None] * nodes[None, :]
    values = f(points.ravel()).reshape(points.shape)
    return half * (values @ weights)


def graded_edges(
    a: float,
    b: float,
    levels: int = GRADED_LEVELS,
    upper_levels: int = UPPER_LEVELS,
) -> tuple[FloatArray, FloatArray]:
    """Panels on [a, b] halving geometrically towards both ends.

    Integrable endpoint singularities (``u**(beta - 1)``, ``(1 - u)**(-lambda)``)
    are resolved because every panel touching an end is twice as narrow as its
    neighbour.
    """
    width = b - a
    lower = np.concatenate(([0.0], 0.5 ** np.arange(levels + 1, 0, -1)))
    # Gauss nodes closer to 1.0 than one ulp collapse onto the endpoint
    upper = np.concatenate(([0.0], 0.5 ** np.arange(upper_levels + 1, 0, -1)))
    left = a + width * 0.5 * lower
    right = b - width * 0.5 * upper[::-1]
    edges = np.unique(np.concatenate((left, right)))
    return edges[:-1], edges[1:]


def gauss_legendre(
    f: VectorFn,
    a: float,
    b: float,
    *,
    rtol: float = 1e-10,
    atol: float = 1e-13,
    order: int = DEFAULT_ORDER,
    max_refinements: int = 12,
) -> float:
    """Adaptive composite Gauss-Legendre integral of ``f`` on ``[a, b]``.

    The graded panel set is refined by splitting every panel in two until two
    consecutive estimates agree to ``rtol`` (or ``atol`` near zero).
    """
    lo, hi = graded_edges(a, b)
    previous = float(np.sum(panel_integrals(f, lo, hi, order)))

    for _ in range(max_refinements):
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate((lo, mid)), np.concatenate((mid, hi))
        order_idx = np.argsort(lo, kind="stable")
        lo, hi = lo[order_idx], hi[order_idx]
        current = float(np.sum(panel_integrals(f, lo, hi, order)))

        if not np.isfinite(current):
            raise exc.DivergenceError("Integrand is not integrable", lower=a, upper=b)
        if abs(current - previous) <= max(rtol * abs(current), atol):
            return current
        previous = current

    raise exc.DivergenceError(
        "Gauss-Legendre refinement did not reach tolerance", lower=a, upper=b, rtol=rtol
    )


def bisect_increasing(
    f: IndexedFn,
    target: FloatArray,
    lo: FloatArray,
    hi: FloatArray,
    *,
    ftol: FloatArray | float = 0.0,
    max_iter: int = 2200,
) -> FloatArray:
    """Vectorised bisection for ``f(x, i) = target[i]`` with ``f`` nondecreasing in ``x``.

    ``f`` receives the trial points together with their positions in the
    input arrays, so per-element parameters can be looked up. An element is
    settled once its residual is within ``ftol`` or its bracket holds no
    representable midpoint; in the latter case the end with the smaller
    residual wins.
    """
    target = np.atleast_1d(np.asarray(target, dtype=np.float64))
    lo = np.array(np.broadcast_to(lo, target.shape), dtype=np.float64)
    hi = np.array(np.broadcast_to(hi, target.shape), dtype=np.float64)
    ftol = np.broadcast_to(np.asarray(ftol, dtype=np.float64), target.shape)
    result = np.full(target.shape, np.nan)
    pending = np.ones(target.shape, dtype=bool)

    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for _ in range(max_iter):
            idx = np.flatnonzero(pending)
            if idx.size == 0:
                return result

            left, right, goal = lo[idx], hi[idx], target[idx]
            mid = 0.5 * (left + right)
            residual = f(mid, idx) - goal

            hit = np.abs(residual) <= ftol[idx]
            stuck = ~hit & ~((mid > left) & (mid < right))
            result[idx[hit]] = mid[hit]

            if np.any(stuck):
                s = idx[stuck]
                pick_left = np.abs(f(left[stuck], s) - goal[stuck]) <= np.abs(
                    f(right[stuck], s) - goal[stuck]
                )
                result[s] = np.where(pick_left, left[stuck], right[stuck])

            below = residual < 0
            lo[idx] = np.where(below, mid, left)
            hi[idx] = np.where(below, right, mid)
            pending[idx[hit | stuck]] = False

    raise exc.ConvergenceError("Bisection did not converge", iterations=max_iter)
