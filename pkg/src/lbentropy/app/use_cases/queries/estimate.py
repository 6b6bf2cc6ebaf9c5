import logging
from collections.abc import Callable
from pathlib import Path
from typing import Final, override

from lbentropy.app import dto
from lbentropy.app.bus.interfaces.handler import Handler, handler
from lbentropy.app.contracts.context import Context
from lbentropy.core import entropy
from lbentropy.core.sample import LBSample


logger = logging.getLogger(__name__)

SENSITIVITY_TRIMS: Final[tuple[float, ...]] = (0.005, 0.02)

type SampleLoader = Callable[[Path], LBSample]


class EstimateQuery(dto.BaseDTO):
    data: str
    estimators: list[dto.EstimatorName]
    estimator: dto.EstimatorConfig
    verbose: bool = False


@handler
class EstimateQueryHandler(Handler[Context, EstimateQuery, dto.EstimateReport]):
    load_sample: SampleLoader

    @override
    def __call__(self, ctx: Context, qc: EstimateQuery, /) -> dto.EstimateReport:
        sample = self.load_sample(Path(qc.data))
        results = entropy.estimate_many(sample, qc.estimator, qc.estimators)
        bandwidth = next(iter(results.values())).bandwidth

        sensitivity = None
        if qc.verbose:
            quantile_based = [n for n in qc.estimators if n.quantile_based]
            sensitivity = {
                f"{trim:g}": {
                    name.value: estimate.value
                    for name, estimate in entropy.estimate_many(
                        sample, qc.estimator.with_trim(trim), quantile_based
                    ).items()
                }
                for trim in SENSITIVITY_TRIMS
            }

        return dto.EstimateReport(
            n=sample.n,
            bandwidth=bandwidth,
            trim=qc.estimator.trim,
            estimates={name.value: r.value for name, r in results.items()},
            floored_fraction={name.value: r.floored_fraction for name, r in results.items()},
            trim_sensitivity=sensitivity,
        )
