from __future__ import annotations

from pathlib import Path
from typing import Final

import numpy as np
import pytest

from config.core import absolute_path, load_config
from lbentropy.app.contracts.context import Context
from lbentropy.app.dto import EstimatorConfig
from lbentropy.core.models import GeneralizedLambda, Govindarajulu, Uniform
from lbentropy.core.sample import LBSample
from lbentropy.core.sampling import LBSampler
from lbentropy.core.streams import sample_stream


SEED: Final[int] = 20240917
SHRUB_PATH: Final[Path] = Path(absolute_path("data", "shrub_widths.csv"))


@pytest.fixture(scope="session")
def estimator_config() -> EstimatorConfig:
    return EstimatorConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    return sample_stream(SEED)


@pytest.fixture(scope="session")
def uniform_sampler() -> LBSampler:
    return LBSampler.from_model(Uniform())


@pytest.fixture(scope="session")
def govindarajulu_sampler() -> LBSampler:
    return LBSampler.from_model(Govindarajulu(0.0, 1.0, 1.0))


@pytest.fixture(scope="session")
def gld_sampler() -> LBSampler:
    return LBSampler.from_model(GeneralizedLambda(2.0, 1.0, 3.0, 5.0))


@pytest.fixture
def uniform_sample(uniform_sampler: LBSampler, rng: np.random.Generator) -> LBSample:
    return uniform_sampler.sample(200, rng)


@pytest.fixture
def gld_sample(gld_sampler: LBSampler, rng: np.random.Generator) -> LBSample:
    return gld_sampler.sample(300, rng)


@pytest.fixture(scope="session")
def context() -> Context:
    return Context(load_config())


@pytest.fixture(scope="session")
def shrub_path() -> Path:
    return SHRUB_PATH
