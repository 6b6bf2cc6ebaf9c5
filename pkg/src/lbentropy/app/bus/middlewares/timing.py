import logging
import time
from dataclasses import dataclass
from typing import override

from lbentropy.app.bus.interfaces.middleware import (
    CallNextHandlerMiddlewareType,
    HandlerMiddleware,
)
from lbentropy.app.contracts.context import Context
from lbentropy.app.contracts.dto import DTO


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TimingMiddleware(HandlerMiddleware[Context]):
    level: int = logging.INFO

    @override
    def __call__[Q: DTO, R](
        self,
        call_next: CallNextHandlerMiddlewareType,
        context: Context,
        qc: Q,
        /,
    ) -> R:
        started = time.perf_counter()
        try:
            result: R = call_next(context, qc)
        except Exception:
            logger.log(
                self.level,
                "%s failed after %.3fs",
                type(qc).__name__,
                time.perf_counter() - started,
            )
            raise

        logger.log(self.level, "%s done in %.3fs", type(qc).__name__, time.perf_counter() - started)
        return result
