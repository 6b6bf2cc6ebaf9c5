"""Distributions defined through their quantile function Q(u)."""

from __future__ import annotations

import abc
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import ClassVar, Final, Literal, cast, override

import numpy as np
from scipy import special

from lbentropy.app.contracts import exceptions as exc
from lbentropy.shared.types import ArrayLike, FloatArray, IntArray

from .quadrature import bisect_increasing, gauss_legendre


logger = logging.getLogger(__name__)

type Family = Literal["govindarajulu", "gld", "power_pareto", "uniform"]

VALIDATION_GRID: Final[int] = 1025
CDF_RTOL: Final[float] = 1e-10


def _int_log(a: float, b: float) -> float:
    """Integral of log(u) over [a, b] for 0 <= a <= b, with 0 log 0 = 0."""

    def antiderivative(t: float) -> float:
        return t * np.log(t) - t if t > 0 else 0.0

    return antiderivative(b) - antiderivative(a)


def _check_trim(trim: float) -> None:
    if not 0.0 <= trim < 0.5:
        raise exc.ValidationError("trim must lie in [0, 0.5)", trim=trim)


@dataclass(slots=True, frozen=True)
class QuantileModel(abc.ABC):
    family: ClassVar[Family]

    def __post_init__(self) -> None:
        self._check_params()
        self._check_shape()

    @property
    @abc.abstractmethod
    def params(self) -> tuple[float, ...]:
        raise NotImplementedError

    @abc.abstractmethod
    def _check_params(self) -> None:
        raise NotImplementedError

    @abc.abstractmethod
    def _quantile(self, u: FloatArray) -> FloatArray:
        raise NotImplementedError

    @abc.abstractmethod
    def _quantile_density(self, u: FloatArray) -> FloatArray:
        raise NotImplementedError

    @abc.abstractmethod
    def mean(self) -> float:
        raise NotImplementedError

    def _closed_entropy(self, trim: float) -> float | None:
        return None

    @property
    def label(self) -> str:
        return f"{self.family}({','.join(f'{p:g}' for p in self.params)})"

    def support(self) -> tuple[float, float]:
        ends = self._quantile(np.array([0.0, 1.0]))
        return float(ends[0]), float(ends[1])

    def quantile(self, u: ArrayLike) -> FloatArray:
        u = np.asarray(u, dtype=np.float64)
        if np.any(~((u >= 0.0) & (u <= 1.0))):
            raise exc.DomainError("quantile() needs 0 <= u <= 1", family=self.family)

        with np.errstate(divide="ignore"):
            return self._quantile(u)

    def quantile_density(self, u: ArrayLike) -> FloatArray:
        u = np.asarray(u, dtype=np.float64)
        if np.any(~((u > 0.0) & (u < 1.0))):
            raise exc.DomainError("quantile_density() needs 0 < u < 1", family=self.family)

        return self._quantile_density(u)

    def cdf(self, x: ArrayLike) -> FloatArray:
        """F(x) by monotone bisection of Q(u) = x.

        Points at or beyond the ends of the support map to 0 and 1.
        """
        x = np.asarray(x, dtype=np.float64)
        flat = np.atleast_1d(x).ravel()
        lower, upper = self.support()
        result = np.where(flat <= lower, 0.0, 1.0)
        inside = (flat > lower) & (flat < upper)

        if np.any(inside):
            targets = flat[inside]

            def _q(u: FloatArray, _: IntArray) -> FloatArray:
                return self._quantile(u)

            result[inside] = bisect_increasing(
                _q,
                targets,
                np.zeros_like(targets),
                np.ones_like(targets),
                ftol=CDF_RTOL * np.maximum(1.0, np.abs(targets)),
            )

        return result.reshape(x.shape)

    def true_entropy(self, trim: float = 0.0) -> float:
        """Integral of log q(u) over [trim, 1 - trim]."""
        _check_trim(trim)
        if (closed := self._closed_entropy(trim)) is not None:
            return closed

        def _log_q(u: FloatArray) -> FloatArray:
            return np.log(self._quantile_density(u))

        value = gauss_legendre(_log_q, trim, 1.0 - trim)
        logger.debug(
            "Quadrature entropy of %s over [%g, %g]: %.12g", self.label, trim, 1 - trim, value
        )
        return value

    def _check_shape(self) -> None:
        u = np.linspace(0.0, 1.0, VALIDATION_GRID)
        if not np.isfinite(self.support()[1]):
            u = u[:-1]

        q = self._quantile(u)
        if not np.all(np.isfinite(q)):
            raise exc.ValidationError("Q(u) must be finite on [0, 1)", model=self.label)
        if q[0] < 0.0:
            raise exc.ValidationError("Support must be nonnegative", model=self.label, q0=q[0])
        if not np.all(np.diff(q) > 0.0):
            raise exc.ValidationError("Q(u) must be strictly increasing", model=self.label)


@dataclass(slots=True, frozen=True)
class Govindarajulu(QuantileModel):
    family: ClassVar[Family] = "govindarajulu"
    theta: float
    sigma: float
    beta: float

    @property
    @override
    def params(self) -> tuple[float, ...]:
        return (self.theta, self.sigma, self.beta)

    @override
    def _check_params(self) -> None:
        if not (self.theta >= 0 and self.sigma > 0 and self.beta > 0):
            raise exc.ValidationError(
                "Govindarajulu needs theta >= 0, sigma > 0, beta > 0", params=self.params
            )

    @override
    def _quantile(self, u: FloatArray) -> FloatArray:
        b = self.beta
        return self.theta + self.sigma * ((b + 1) * u**b - b * u ** (b + 1))

    @override
    def _quantile_density(self, u: FloatArray) -> FloatArray:
        b = self.beta
        return self.sigma * b * (b + 1) * u ** (b - 1) * (1 - u)

    @override
    def mean(self) -> float:
        return self.theta + 2 * self.sigma / (self.beta + 2)

    @override
    def _closed_entropy(self, trim: float) -> float:
        # log q = log(sigma b (b+1)) + (b-1) log u + log(1-u); both logs integrate alike
        scale = np.log(self.sigma * self.beta * (self.beta + 1))
        return float((1 - 2 * trim) * scale + self.beta * _int_log(trim, 1 - trim))


@dataclass(slots=True, frozen=True)
class GeneralizedLambda(QuantileModel):
    family: ClassVar[Family] = "gld"
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float

    @property
    @override
    def params(self) -> tuple[float, ...]:
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    @override
    def _check_params(self) -> None:
        if not (
            np.isfinite(self.lambda1) and self.lambda2 > 0 and self.lambda3 > 0 and self.lambda4 > 0
        ):
            raise exc.ValidationError("GLD needs lambda2, lambda3, lambda4 > 0", params=self.params)

    @override
    def _quantile(self, u: FloatArray) -> FloatArray:
        return self.lambda1 + (u**self.lambda3 - (1 - u) ** self.lambda4) / self.lambda2

    @override
    def _quantile_density(self, u: FloatArray) -> FloatArray:
        l3, l4 = self.lambda3, self.lambda4
        return (l3 * u ** (l3 - 1) + l4 * (1 - u) ** (l4 - 1)) / self.lambda2

    @override
    def mean(self) -> float:
        return self.lambda1 + (1 / (self.lambda3 + 1) - 1 / (self.lambda4 + 1)) / self.lambda2


@dataclass(slots=True, frozen=True)
class PowerPareto(QuantileModel):
    family: ClassVar[Family] = "power_pareto"
    c: float
    lambda1: float
    lambda2: float

    @property
    @override
    def params(self) -> tuple[float, ...]:
        return (self.c, self.lambda1, self.lambda2)

    @override
    def _check_params(self) -> None:
        if not (self.c > 0 and self.lambda1 >= 0 and self.lambda2 >= 0):
            raise exc.ValidationError(
                "Power-Pareto needs C > 0, lambda1 >= 0, lambda2 >= 0", params=self.params
            )
        if self.lambda1 == 0 and self.lambda2 == 0:
            raise exc.ValidationError("lambda1 and lambda2 cannot both be 0", params=self.params)

    @override
    def _quantile(self, u: FloatArray) -> FloatArray:
        # Q(1) is +inf whenever lambda2 > 0
        with np.errstate(divide="ignore"):
            return self.c * u**self.lambda1 * (1 - u) ** (-self.lambda2)

    @override
    def _quantile_density(self, u: FloatArray) -> FloatArray:
        return self._quantile(u) * (self.lambda1 / u + self.lambda2 / (1 - u))

    @override
    def mean(self) -> float:
        if self.lambda2 >= 1:
            return float("inf")
        return float(self.c * special.beta(self.lambda1 + 1, 1 - self.lambda2))


@dataclass(slots=True, frozen=True)
class Uniform(QuantileModel):
    family: ClassVar[Family] = "uniform"
    a: float = 0.0
    b: float = 1.0

    @property
    @override
    def params(self) -> tuple[float, ...]:
        return (self.a, self.b)

    @override
    def _check_params(self) -> None:
        if not (self.a >= 0 and self.b > self.a):
            raise exc.ValidationError("Uniform needs 0 <= a < b", params=self.params)

    @override
    def _quantile(self, u: FloatArray) -> FloatArray:
        return self.a + (self.b - self.a) * u

    @override
    def _quantile_density(self, u: FloatArray) -> FloatArray:
        return np.full_like(u, self.b - self.a)

    @override
    def mean(self) -> float:
        return 0.5 * (self.a + self.b)

    @override
    def _closed_entropy(self, trim: float) -> float:
        return float((1 - 2 * trim) * np.log(self.b - self.a))


FAMILIES: Final[dict[Family, type[QuantileModel]]] = {
    "govindarajulu": Govindarajulu,
    "gld": GeneralizedLambda,
    "power_pareto": PowerPareto,
    "uniform": Uniform,
}
ARITY: Final[dict[Family, int]] = {
    "govindarajulu": 3,
    "gld": 4,
    "power_pareto": 3,
    "uniform": 2,
}


def model_from_spec(family: str, params: Sequence[float]) -> QuantileModel:
    """Build a model from its family name and parameters in the published order.

    ``(theta, sigma, beta)``, ``(l1, l2, l3, l4)``, ``(C, l1, l2)`` and ``(a, b)``.
    """
    if (key := family.strip().lower().replace("-", "_")) not in FAMILIES:
        raise exc.ValidationError(
            f"Unknown model family `{family}`", code="family", choices=", ".join(FAMILIES)
        )

    name = cast(Family, key)
    if len(params) != ARITY[name]:
        raise exc.ValidationError(
            f"`{name}` takes {ARITY[name]} parameters, got {len(params)}", code="params"
        )

    return FAMILIES[name](*(float(p) for p in params))


def quantile(model: QuantileModel, u: ArrayLike) -> FloatArray:
    return model.quantile(u)


def quantile_density(model: QuantileModel, u: ArrayLike) -> FloatArray:
    return model.quantile_density(u)


def cdf(model: QuantileModel, x: ArrayLike) -> FloatArray:
    return model.cdf(x)


def true_entropy(model: QuantileModel, trim: float = 0.0) -> float:
    return model.true_entropy(trim)
