from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lbentropy.app.contracts import exceptions as exc
from lbentropy.shared.types import ArrayLike, FloatArray


MIN_SIZE = 2


def _frozen(values: FloatArray) -> FloatArray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class LBSample:
    """Sorted, strictly positive length-biased observations.

    ``inv_prefix[k - 1]`` holds ``S_k``, the sum of ``1 / Y_(i)`` over the
    first ``k`` order statistics.
    """

    values: FloatArray
    inv_prefix: FloatArray

    @classmethod
    def from_values(cls, values: ArrayLike) -> LBSample:
        data = np.array(values, dtype=np.float64).ravel()

        if data.size < MIN_SIZE:
            raise exc.ValidationError(
                f"A sample needs at least {MIN_SIZE} observations", code="sample", n=data.size
            )
        if not np.all(np.isfinite(data)):
            bad = int(np.flatnonzero(~np.isfinite(data))[0])
            raise exc.ValidationError(
                "Sample contains a non-finite value", code="sample", index=bad
            )
        if np.any(data <= 0.0):
            bad = int(np.flatnonzero(data <= 0.0)[0])
            raise exc.ValidationError(
                "Length-biased observations must be strictly positive",
                code="sample",
                index=bad,
                value=float(data[bad]),
            )

        data.sort(kind="stable")
        # fixed summation order keeps results independent of the input permutation
        return cls(_frozen(data), _frozen(np.cumsum(1.0 / data)))

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def sum_inv(self) -> float:
        return float(self.inv_prefix[-1])

    def scaled(self, factor: float) -> LBSample:
        return LBSample.from_values(self.values * factor)

    def __len__(self) -> int:
        return self.n
