"""Compactly supported kernels on [-1, 1] and their moment constants."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Final, NamedTuple, assert_never

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.shared.types import ArrayLike, FloatArray


@enum.unique
class KernelKind(enum.StrEnum):
    EPANECHNIKOV = enum.auto()
    TRIANGULAR = enum.auto()
    UNIFORM = enum.auto()


class KernelConstants(NamedTuple):
    roughness: float
    """R(K) = integral of K^2."""
    mu2: float
    """mu_2(K) = integral of x^2 K."""


_CONSTANTS: Final[dict[KernelKind, KernelConstants]] = {
    KernelKind.EPANECHNIKOV: KernelConstants(0.6, 0.2),
    KernelKind.TRIANGULAR: KernelConstants(2.0 / 3.0, 1.0 / 6.0),
    KernelKind.UNIFORM: KernelConstants(0.5, 1.0 / 3.0),
}


@dataclass(slots=True, frozen=True)
class KernelSpec:
    kind: KernelKind = KernelKind.EPANECHNIKOV

    @classmethod
    def from_name(cls, name: str) -> KernelSpec:
        try:
            return cls(KernelKind(name.strip().lower()))
        except ValueError as e:
            choices = ", ".join(k.value for k in KernelKind)
            raise exc.ValidationError(
                f"Unknown kernel `{name}`", code="kernel", choices=choices
            ) from e

    def __call__(self, x: ArrayLike) -> FloatArray:
        return eval_kernel(self, x)

    @property
    def constants(self) -> KernelConstants:
        return _CONSTANTS[self.kind]


def eval_kernel(spec: KernelSpec, x: ArrayLike) -> FloatArray:
    x = np.asarray(x, dtype=np.float64)
    ax = np.abs(x)
    inside = ax <= 1.0

    match spec.kind:
        case KernelKind.EPANECHNIKOV:
            values = 0.75 * (1.0 - x * x)
        case KernelKind.TRIANGULAR:
            values = 1.0 - ax
        case KernelKind.UNIFORM:
            values = np.full_like(x, 0.5)
        case _:
            assert_never(spec.kind)

    return np.where(inside, values, 0.0)


def kernel_constants(spec: KernelSpec) -> KernelConstants:
    return spec.constants
