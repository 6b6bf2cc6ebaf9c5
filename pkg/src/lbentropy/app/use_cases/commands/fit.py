import logging
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import override

from lbentropy.app import dto
from lbentropy.app.bus.interfaces.handler import Handler, handler
from lbentropy.app.contracts.context import Context
from lbentropy.core import entropy, fitting
from lbentropy.core.sample import LBSample


logger = logging.getLogger(__name__)

type SampleLoader = Callable[[Path], LBSample]
type OutputPath = Path | str | None
type PairsWriter = Callable[[OutputPath, tuple[str, str], Iterable[float], Iterable[float]], None]


class FitCommand(dto.BaseDTO):
    data: str
    options: dto.FitOptions
    estimator: dto.EstimatorConfig
    qq_output: str | None = None


@handler
class FitCommandHandler(Handler[Context, FitCommand, dto.FitReport]):
    load_sample: SampleLoader
    write_pairs: PairsWriter

    @override
    def __call__(self, ctx: Context, qc: FitCommand, /) -> dto.FitReport:
        sample = self.load_sample(Path(qc.data))
        fit = fitting.fit_power_pareto(sample, qc.options)
        model = fit.params.model()
        logger.info(
            "Fitted %s (loglik=%.4f, converged=%s)", model.label, fit.log_likelihood, fit.converged
        )

        if qc.qq_output is not None:
            qq = fitting.qq_points(sample, model)
            self.write_pairs(
                qc.qq_output, ("theoretical", "empirical"), qq.theoretical, qq.empirical
            )

        estimates = entropy.estimate_many(
            sample, qc.estimator, [dto.EstimatorName.XI1, dto.EstimatorName.XI2]
        )
        xi1, xi2 = estimates[dto.EstimatorName.XI1], estimates[dto.EstimatorName.XI2]

        return dto.FitReport(
            params=fit.params,
            loglik=fit.log_likelihood,
            converged=fit.converged,
            ks=fitting.ks_statistic(sample, model),
            n=sample.n,
            bias_corrected=fit.bias_corrected,
            ks_reference=fitting.ks_reference(sample.n),
            true_entropy=model.true_entropy(),
            true_entropy_trimmed=model.true_entropy(qc.estimator.trim),
            trim=qc.estimator.trim,
            xi1=xi1.value,
            xi2=xi2.value,
            bandwidth=xi1.bandwidth,
            qq_path=qc.qq_output,
        )
