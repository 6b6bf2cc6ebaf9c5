from __future__ import annotations

import numpy as np
import pytest

from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.models import (
    GeneralizedLambda,
    Govindarajulu,
    PowerPareto,
    QuantileModel,
    Uniform,
    model_from_spec,
    true_entropy,
)
from lbentropy.core.quadrature import gauss_legendre
from lbentropy.shared.types import FloatArray


MODELS: list[QuantileModel] = [
    Govindarajulu(0.0, 1.0, 1.0),
    Govindarajulu(0.0, 1.0, 0.25),
    Govindarajulu(0.0, 0.75, 0.25),
    GeneralizedLambda(2.0, 1.0, 2.0, 6.0),
    GeneralizedLambda(2.0, 1.0, 3.0, 5.0),
    GeneralizedLambda(3.0, 2.0, 1.0, 5.0),
    PowerPareto(1.5827, 0.6368, 0.1016),
    Uniform(),
    Uniform(1.0, 3.0),
]


def _quadrature_entropy(model: QuantileModel, trim: float = 0.0) -> float:
    def log_q(u: FloatArray) -> FloatArray:
        return np.log(model.quantile_density(u))

    return gauss_legendre(log_q, trim, 1.0 - trim)


def test_govindarajulu_unit_entropy() -> None:
    assert true_entropy(Govindarajulu(0.0, 1.0, 1.0)) == pytest.approx(np.log(2.0) - 1.0, abs=1e-12)


def test_govindarajulu_closed_form_matches_quadrature() -> None:
    rng = np.random.default_rng(7)
    for sigma, beta in zip(rng.uniform(0.3, 3.0, 50), rng.uniform(0.2, 3.0, 50), strict=True):
        model = Govindarajulu(0.0, float(sigma), float(beta))

        assert model.true_entropy() == pytest.approx(_quadrature_entropy(model), abs=1e-8)


@pytest.mark.parametrize("trim", [0.005, 0.01, 0.02])
def test_trimmed_closed_form_matches_quadrature(trim: float) -> None:
    model = Govindarajulu(0.0, 0.75, 0.25)

    assert model.true_entropy(trim) == pytest.approx(_quadrature_entropy(model, trim), abs=1e-9)


def test_uniform_entropy_is_log_width() -> None:
    assert Uniform(1.0, 3.0).true_entropy() == pytest.approx(np.log(2.0), abs=1e-14)
    assert Uniform().true_entropy(0.01) == 0.0


def test_power_pareto_entropy_full_and_trimmed() -> None:
    model = PowerPareto(1.5827, 0.6368, 0.1016)

    assert model.true_entropy() == pytest.approx(0.8210, abs=1e-3)
    assert model.true_entropy(0.01) == pytest.approx(0.7570, abs=2e-3)


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.label)
def test_quantile_density_matches_finite_difference(model: QuantileModel) -> None:
    u = np.linspace(0.05, 0.95, 19)
    step = 1e-6
    numeric = (model.quantile(u + step) - model.quantile(u - step)) / (2 * step)

    assert model.quantile_density(u) == pytest.approx(numeric, rel=1e-6)


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.label)
def test_mean_matches_quadrature(model: QuantileModel) -> None:
    assert model.mean() == pytest.approx(gauss_legendre(model.quantile, 0.0, 1.0), rel=1e-9)


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.label)
def test_cdf_inverts_quantile(model: QuantileModel) -> None:
    u = np.linspace(0.02, 0.98, 25)

    assert model.cdf(model.quantile(u)) == pytest.approx(u, abs=1e-7)


def test_cdf_outside_support() -> None:
    model = GeneralizedLambda(2.0, 1.0, 3.0, 5.0)
    lower, upper = model.support()

    assert model.cdf(np.array([lower - 1.0, lower, upper, upper + 1.0])).tolist() == [
        0.0,
        0.0,
        1.0,
        1.0,
    ]


def test_power_pareto_upper_end_is_infinite() -> None:
    model = PowerPareto(1.0, 0.5, 0.2)

    assert model.quantile(np.array([0.0, 1.0])).tolist() == [0.0, np.inf]
    assert PowerPareto(1.0, 0.5, 1.2).mean() == np.inf


def test_quantile_rejects_levels_outside_unit_interval() -> None:
    model = Uniform()

    with pytest.raises(exc.DomainError):
        model.quantile(np.array([0.5, 1.5]))
    with pytest.raises(exc.DomainError):
        model.quantile_density(np.array([0.0]))


@pytest.mark.parametrize(
    ("family", "params"),
    [
        ("govindarajulu", [0.0, -1.0, 1.0]),
        ("govindarajulu", [0.0, 1.0, 0.0]),
        ("gld", [2.0, -1.0, 3.0, 5.0]),
        ("power_pareto", [1.0, 0.0, 0.0]),
        ("uniform", [2.0, 1.0]),
        ("uniform", [-1.0, 1.0]),
    ],
)
def test_invalid_parameters(family: str, params: list[float]) -> None:
    with pytest.raises(exc.ValidationError):
        model_from_spec(family, params)


def test_model_from_spec_normalises_family() -> None:
    model = model_from_spec("Power-Pareto", [1.0, 0.5, 0.1])

    assert isinstance(model, PowerPareto)
    assert model.params == (1.0, 0.5, 0.1)
    assert model.label == "power_pareto(1,0.5,0.1)"


def test_model_from_spec_checks_arity() -> None:
    with pytest.raises(exc.ValidationError, match="takes 4 parameters"):
        model_from_spec("gld", [1.0, 2.0, 3.0])


def test_model_from_spec_unknown_family() -> None:
    with pytest.raises(exc.ValidationError, match="Unknown model family"):
        model_from_spec("weibull", [1.0, 2.0])
