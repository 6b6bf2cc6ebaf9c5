from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.kernels import KernelKind, KernelSpec, eval_kernel, kernel_constants
from lbentropy.core.quadrature import gauss_legendre
from lbentropy.shared.types import FloatArray


GRID = np.linspace(-1.5, 1.5, 300_001)


@pytest.mark.parametrize("kind", list(KernelKind))
def test_kernel_integrates_to_one(kind: KernelKind) -> None:
    k = KernelSpec(kind)

    assert np.trapezoid(k(GRID), GRID) == pytest.approx(1.0, abs=1e-4)


@pytest.mark.parametrize("kind", list(KernelKind))
def test_kernel_constants_match_quadrature(kind: KernelKind) -> None:
    k = KernelSpec(kind)
    constants = kernel_constants(k)
    values = k(GRID)

    assert np.trapezoid(values**2, GRID) == pytest.approx(constants.roughness, abs=1e-4)
    assert np.trapezoid(GRID**2 * values, GRID) == pytest.approx(constants.mu2, abs=1e-4)


@pytest.mark.parametrize("kind", list(KernelKind))
def test_kernel_vanishes_outside_support(kind: KernelKind) -> None:
    k = KernelSpec(kind)

    assert np.all(k(np.array([-3.0, -1.0001, 1.0001, 7.0])) == 0.0)
    assert np.all(k(np.linspace(-0.99, 0.99, 11)) > 0.0)


@pytest.mark.parametrize(("x", "expected"), [(0.0, 0.75), (1.0, 0.0), (0.5, 0.5625), (-0.5, 0.5625)])
def test_eval_epanechnikov(x: float, expected: float) -> None:
    assert float(eval_kernel(KernelSpec(), x)) == pytest.approx(expected)


def test_from_name_is_case_insensitive() -> None:
    assert KernelSpec.from_name(" Triangular ").kind is KernelKind.TRIANGULAR


def test_from_name_rejects_unknown_kernel() -> None:
    with pytest.raises(exc.ValidationError, match="gaussian"):
        KernelSpec.from_name("gaussian")


def _halves(f: Callable[[FloatArray], FloatArray]) -> float:
    return gauss_legendre(f, -1.0, 0.0) + gauss_legendre(f, 0.0, 1.0)


@pytest.mark.parametrize("kind", list(KernelKind))
def test_kernel_moments_by_gauss_legendre(kind: KernelKind) -> None:
    k = KernelSpec(kind)
    constants = kernel_constants(k)

    assert _halves(k) == pytest.approx(1.0, abs=1e-10)
    assert _halves(lambda x: x * k(x)) == pytest.approx(0.0, abs=1e-10)
    assert _halves(lambda x: x**2 * k(x)) == pytest.approx(constants.mu2, abs=1e-10)
    assert _halves(lambda x: k(x) ** 2) == pytest.approx(constants.roughness, abs=1e-10)


@pytest.mark.parametrize("kind", list(KernelKind))
def test_kernel_is_even(kind: KernelKind) -> None:
    k = KernelSpec(kind)
    x = np.linspace(-1.2, 1.2, 241)

    assert np.array_equal(k(x), k(-x))
