import logging
from collections.abc import Callable
from pathlib import Path
from typing import override

from lbentropy.app import dto
from lbentropy.app.bus.interfaces.handler import Handler, handler
from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.contracts.context import Context
from lbentropy.core.simulation import run_study


logger = logging.getLogger(__name__)

type StudyWriter = Callable[[dto.StudyReport, Path | str | None], None]


class SimulateCommand(dto.BaseDTO):
    study: dto.StudyConfig
    output: str | None = None


@handler
class SimulateCommandHandler(Handler[Context, SimulateCommand, dto.StudyReport]):
    version: str
    write_study: StudyWriter

    @override
    def __call__(self, ctx: Context, qc: SimulateCommand, /) -> dto.StudyReport:
        logger.info(
            "Running %d cell(s) x %d replicates on %d thread(s)",
            sum(len(c.sample_sizes) for c in qc.study.cells),
            qc.study.replicates,
            ctx.threads,
        )
        report = run_study(qc.study, threads=ctx.threads, version=self.version)
        self.write_study(report, qc.output)

        for row in report.rows:
            logger.info(row.summary())

        if report.failed_cells:
            raise exc.ReplicateFailureError(
                f"{report.failed_cells} cell(s) exceeded the replicate failure threshold",
                max_failure_rate=qc.study.max_failure_rate,
            )

        return report
