from __future__ import annotations

import logging

import numpy as np
import pytest

from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.dto import EstimatorConfig, EstimatorName
from lbentropy.core import entropy
from lbentropy.core.sample import LBSample
from lbentropy.core.sampling import LBSampler


def test_log_integral_of_constant() -> None:
    value, floored = entropy.log_integral(np.full(101, np.e), 0.01, 1e-12)

    assert value == pytest.approx(0.98, abs=1e-14)
    assert floored == 0.0


def test_log_integral_counts_floored_nodes() -> None:
    values = np.ones(11)
    values[:3] = 0.0

    value, floored = entropy.log_integral(values, 0.0, 1e-12)

    assert floored == pytest.approx(3 / 11)
    assert value == pytest.approx(0.25 * np.log(1e-12))


def test_u_grid_spans_trimmed_interval(estimator_config: EstimatorConfig) -> None:
    u = entropy.u_grid(estimator_config)

    assert u.size == 501
    assert u[0] == 0.01 and u[-1] == pytest.approx(0.99)


@pytest.mark.parametrize("factor", [0.5, 2.0, 4.0])
def test_xi2_shifts_by_log_scale(factor: float, gld_sample: LBSample, estimator_config: EstimatorConfig) -> None:
    base = entropy.xi2(gld_sample, estimator_config, bandwidth=0.1)
    scaled = entropy.xi2(gld_sample.scaled(factor), estimator_config, bandwidth=0.1)

    assert base.floored_fraction == 0.0
    assert scaled.value - base.value == pytest.approx(0.98 * np.log(factor), abs=1e-10)


@pytest.mark.parametrize("factor", [0.5, 2.0, 4.0])
def test_xi1_shifts_by_log_scale(factor: float, gld_sample: LBSample, estimator_config: EstimatorConfig) -> None:
    h = 0.2
    base = entropy.xi1(gld_sample, estimator_config, bandwidth=h)
    scaled = entropy.xi1(gld_sample.scaled(factor), estimator_config, bandwidth=h * factor)

    assert base.floored_fraction == 0.0
    assert scaled.value - base.value == pytest.approx(0.98 * np.log(factor), abs=1e-10)


def test_estimate_many_shares_one_bandwidth(gld_sample: LBSample, estimator_config: EstimatorConfig) -> None:
    results = entropy.estimate_many(gld_sample, estimator_config, list(EstimatorName))

    assert list(results) == list(EstimatorName)
    assert len({r.bandwidth for r in results.values()}) == 1
    assert all(np.isfinite(r.value) for r in results.values())
    assert results[EstimatorName.XI1].trim == 0.01
    assert results[EstimatorName.H1].trim == 0.0


def test_explicit_bandwidth_from_config(gld_sample: LBSample) -> None:
    cfg = EstimatorConfig(bandwidth=0.15)

    assert entropy.estimate(gld_sample, cfg, EstimatorName.XI2).bandwidth == 0.15


def test_h_integral_rejects_quantile_estimators(gld_sample: LBSample, estimator_config: EstimatorConfig) -> None:
    with pytest.raises(exc.DomainError):
        entropy.h_integral(gld_sample, estimator_config, EstimatorName.XI1)


def test_x_grid_stays_positive(estimator_config: EstimatorConfig) -> None:
    s = LBSample.from_values([0.1, 0.2, 0.4])

    x = entropy.x_grid(s, 1.0, estimator_config)

    assert x[0] == pytest.approx(0.05)
    assert x[-1] == pytest.approx(1.4)
    assert x.size == 1001


def test_eq14_literal_only_changes_h2(gld_sample: LBSample) -> None:
    literal = EstimatorConfig(bandwidth=0.1, eq14_literal=True)
    weighted = EstimatorConfig(bandwidth=0.1)

    assert entropy.estimate(gld_sample, literal, EstimatorName.H2).value != pytest.approx(
        entropy.estimate(gld_sample, weighted, EstimatorName.H2).value
    )
    for name in (EstimatorName.XI1, EstimatorName.XI2, EstimatorName.H1):
        assert (
            entropy.estimate(gld_sample, literal, name).value
            == entropy.estimate(gld_sample, weighted, name).value
        )


def test_tiny_bandwidth_warns_about_flooring(
    gld_sample: LBSample, estimator_config: EstimatorConfig, caplog: pytest.LogCaptureFixture
) -> None:
    with caplog.at_level(logging.WARNING, logger="lbentropy.core.entropy"):
        result = entropy.xi2(gld_sample, estimator_config, bandwidth=1e-6)

    assert result.warning
    assert "floored" in caplog.text


def test_h2_close_to_differential_entropy(
    gld_sampler: LBSampler, estimator_config: EstimatorConfig
) -> None:
    s = gld_sampler.sample(4000, np.random.default_rng(12))
    truth = gld_sampler.model.true_entropy()

    assert entropy.estimate(s, estimator_config, EstimatorName.H2).value == pytest.approx(truth, abs=0.1)


def test_xi_ignore_sample_order(gld_sample: LBSample, estimator_config: EstimatorConfig) -> None:
    shuffled = LBSample.from_values(np.random.default_rng(8).permutation(gld_sample.values))

    for name in (EstimatorName.XI1, EstimatorName.XI2):
        a = entropy.estimate(gld_sample, estimator_config, name)
        b = entropy.estimate(shuffled, estimator_config, name)
        assert a.value == b.value
        assert a.floored_fraction == b.floored_fraction


def test_doubling_the_grid_barely_moves_xi(gld_sampler: LBSampler, estimator_config: EstimatorConfig) -> None:
    fine = EstimatorConfig(grid_points=2 * estimator_config.grid_points)
    rng = np.random.default_rng(31)

    for _ in range(100):
        s = gld_sampler.sample(200, rng)
        for name in (EstimatorName.XI1, EstimatorName.XI2):
            coarse_value = entropy.estimate(s, estimator_config, name).value
            fine_value = entropy.estimate(s, fine, name).value
            assert abs(fine_value - coarse_value) < 1e-3


def test_trim_sensitivity_is_monotone_and_small(gld_sampler: LBSampler) -> None:
    s = gld_sampler.sample(500, np.random.default_rng(6))

    for name in (EstimatorName.XI1, EstimatorName.XI2):
        values = [entropy.estimate(s, EstimatorConfig(trim=t), name).value for t in (0.005, 0.01, 0.02)]
        assert values[0] > values[1] > values[2]
        assert values[0] - values[2] < 0.2


def test_xi_near_zero_for_uniform_base(uniform_sampler: LBSampler) -> None:
    s = uniform_sampler.sample(5000, np.random.default_rng(12))
    cfg = EstimatorConfig(bandwidth=0.05)

    assert entropy.xi1(s, cfg).value == pytest.approx(0.0, abs=0.1)
    assert entropy.xi2(s, cfg).value == pytest.approx(0.0, abs=0.1)
