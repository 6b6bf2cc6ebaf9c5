from __future__ import annotations

from typing import Protocol, runtime_checkable

from lbentropy.app.contracts.dto import DTO

from .handler import Handler, HandlerType


class CallProxy[_: HandlerType]:
    """A dispatched command or query; runs when ``result()`` is called."""

    __slots__ = (
        "_context",
        "_handler",
        "_qc",
    )

    def __init__[T, Q: DTO, R](self, handler: Handler[T, Q, R], context: T, qc: Q) -> None:
        self._handler = handler
        self._context = context
        self._qc = qc

    def result[T, Q: DTO, R](self: CallProxy[Handler[T, Q, R]]) -> R:
        return self._handler(self._context, self._qc)  # type: ignore[arg-type]


@runtime_checkable
class QCBusType(Protocol):
    def __call__[T, Q: DTO, R](self, context: T, qc: Q, /) -> CallProxy[Handler[T, Q, R]]: ...
    def send_unwrapped[T, Q: DTO, R](
        self,
        context: T,
        qc: Q,
        /,
    ) -> CallProxy[Handler[T, Q, R]]: ...
