from __future__ import annotations

import logging
from collections.abc import Callable
from typing import TYPE_CHECKING, Any, cast

from lbentropy.app.contracts.dto import DTO

from .interfaces.bus import CallProxy
from .interfaces.handler import Handler, HandlerType
from .interfaces.middleware import MiddlewareType
from .middlewares import wrap_middleware


if TYPE_CHECKING:
    from .builder import BusBuilder

type HandlerLike = Callable[[], HandlerType] | HandlerType
logger = logging.getLogger(__name__)


class UnregisteredHandlerError(Exception): ...


class QCBus:
    """Routes a query or command to its handler by exact type.

    Factories are called on first use; the handler they build serves every later message.
    """

    __slots__ = (
        "_dispatch_fn",
        "_factories",
        "_handlers",
    )

    def __init__(self, *middlewares: MiddlewareType) -> None:
        self._factories: dict[type[DTO], HandlerLike] = {}
        self._handlers: dict[type[DTO], HandlerType] = {}
        self._dispatch_fn = cast(HandlerType, wrap_middleware(self._dispatch, *middlewares))

    def _dispatch[T, Q: DTO, R](self, context: T, qc: Q, /) -> R:
        handler: Handler[T, Q, R] = self._get_handler(qc)
        logger.debug("Dispatching %s to %s", type(qc).__name__, type(handler).__name__)

        return handler(context, qc)

    def __call__[T, Q: DTO, R](self, context: T, qc: Q, /) -> CallProxy[Handler[T, Q, R]]:
        return CallProxy(self._dispatch_fn, context, qc)

    def register[T, Q: DTO, R](
        self,
        qc: type[Q],
        handler: Callable[[], Handler[T, Q, R]] | Handler[T, Q, R],
    ) -> QCBus:
        self._factories[qc] = handler
        self._handlers.pop(qc, None)

        return self

    def send_unwrapped[T, Q: DTO, R](
        self,
        context: T,
        qc: Q,
        /,
    ) -> CallProxy[Handler[T, Q, R]]:
        return CallProxy(self._get_handler(qc), context, qc)

    def _get_handler[T, Q: DTO, R](self, qc: Q) -> Handler[T, Q, R]:
        kind = type(qc)
        if (handler := self._handlers.get(kind)) is None:
            try:
                factory: Any = self._factories[kind]
            except KeyError as e:
                raise UnregisteredHandlerError(f"Handler for `{kind}` is not registered") from e
            handler = factory if isinstance(factory, Handler) else factory()
            self._handlers[kind] = handler

        return cast(Handler[T, Q, R], handler)

    @staticmethod
    def builder() -> BusBuilder:
        from .builder import BusBuilder

        return BusBuilder()
