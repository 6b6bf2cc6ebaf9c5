from functools import partial
from typing import cast

from lbentropy.app.bus.interfaces.middleware import (
    CallNextHandlerMiddlewareType,
    MiddlewareType,
)

from .timing import TimingMiddleware


__all__ = (
    "TimingMiddleware",
    "wrap_middleware",
)


def wrap_middleware(
    call_next: CallNextHandlerMiddlewareType,
    *middlewares: MiddlewareType,
) -> CallNextHandlerMiddlewareType:
    """Chain ``middlewares`` around ``call_next``; the first one given runs outermost."""
    wrapped = call_next
    for m in reversed(middlewares):
        wrapped = cast(CallNextHandlerMiddlewareType, partial(m, wrapped))

    return wrapped
