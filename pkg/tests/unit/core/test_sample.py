from __future__ import annotations

import numpy as np
import pytest

from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.sample import LBSample


def test_from_values_sorts_and_accumulates() -> None:
    s = LBSample.from_values([4.0, 1.0, 2.0])

    assert s.values.tolist() == [1.0, 2.0, 4.0]
    assert s.inv_prefix.tolist() == [1.0, 1.5, 1.75]
    assert s.n == len(s) == 3
    assert s.sum_inv == 1.75


def test_from_values_ignores_input_order() -> None:
    values = np.random.default_rng(3).lognormal(size=50)
    shuffled = np.random.default_rng(4).permutation(values)

    a, b = LBSample.from_values(values), LBSample.from_values(shuffled)

    assert np.array_equal(a.values, b.values)
    assert np.array_equal(a.inv_prefix, b.inv_prefix)


def test_arrays_are_read_only() -> None:
    s = LBSample.from_values([1.0, 2.0])

    with pytest.raises(ValueError, match="read-only"):
        s.values[0] = 5.0


@pytest.mark.parametrize(
    "values",
    [[1.0], [], [1.0, 0.0], [1.0, -2.0], [1.0, np.nan], [np.inf, 1.0]],
)
def test_from_values_rejects_bad_samples(values: list[float]) -> None:
    with pytest.raises(exc.ValidationError):
        LBSample.from_values(values)


def test_scaled() -> None:
    s = LBSample.from_values([1.0, 3.0]).scaled(2.0)

    assert s.values.tolist() == [2.0, 6.0]
