from typing import Any, Protocol, overload, runtime_checkable

from lbentropy.app.bus.interfaces.bus import CallProxy
from lbentropy.app.bus.interfaces.handler import Handler
from lbentropy.app.contracts.context import Context
from lbentropy.app.contracts.dto import DTO

from . import entropy, estimate, sample


__all__ = (
    "QueryBus",
    "entropy",
    "estimate",
    "sample",
)


@runtime_checkable
class QueryBus(Protocol):
    @overload
    def send_unwrapped(
        self,
        context: Context,
        qc: estimate.EstimateQuery,
        /,
    ) -> CallProxy[estimate.EstimateQueryHandler]: ...
    @overload
    def send_unwrapped(
        self,
        context: Context,
        qc: sample.SampleQuery,
        /,
    ) -> CallProxy[sample.SampleQueryHandler]: ...
    @overload
    def send_unwrapped(
        self,
        context: Context,
        qc: entropy.TrueEntropyQuery,
        /,
    ) -> CallProxy[entropy.TrueEntropyQueryHandler]: ...

    def send_unwrapped[R, Q: DTO, T](
        self,
        context: R,
        qc: Q,
        /,
        **kw: Any,
    ) -> CallProxy[Handler[R, Q, T]]: ...

    __call__ = send_unwrapped  # type: ignore[misc]
