from __future__ import annotations

import inspect
from collections.abc import Callable
from itertools import chain
from typing import TYPE_CHECKING, Any, get_args, get_origin, get_overloads, get_type_hints

from lbentropy.app.contracts.dto import DTO
from lbentropy.shared.types import is_typevar

from .interfaces.bus import CallProxy, QCBusType
from .interfaces.handler import Handler, HandlerType
from .interfaces.middleware import MiddlewareType


if TYPE_CHECKING:
    from .core import QCBus

type Dependency = Callable[[], Any] | Any


def _handler_fields(handler: type[HandlerType]) -> list[str]:
    return list(inspect.signature(handler).parameters)


def _bind_or_raise(
    handler: type[HandlerType],
    available: dict[str, Dependency],
) -> dict[str, Dependency]:
    needed = _handler_fields(handler)
    missing = [k for k in needed if k not in available]
    if missing:
        details = ", ".join(f"`{k}`" for k in missing)
        raise TypeError(f"Did you forget to set dependency {details} for {handler.__name__}?")

    return {k: available[k] for k in needed}


def get_handlers_map(*buses: type[QCBusType]) -> dict[type[DTO], type[HandlerType]]:
    """Map every command/query type to its handler from the ``send_unwrapped`` overloads."""
    data: dict[type[DTO], type[HandlerType]] = {}

    for func in chain.from_iterable(get_overloads(bus.send_unwrapped) for bus in buses):
        hints = get_type_hints(func)
        qc, proxy = hints.get("qc"), hints.get("return")

        if qc is None or is_typevar(qc) or not isinstance(qc, type) or not issubclass(qc, DTO):
            raise TypeError(f"Overload {func!r} must annotate `qc` with a concrete DTO type")
        if get_origin(proxy) is not CallProxy or not get_args(proxy):
            raise TypeError(
                f"Overload for {qc.__name__} must return a {CallProxy.__name__}[Handler]"
            )

        handler = get_args(proxy)[0]
        if not issubclass(handler, Handler):
            raise TypeError(f"{handler!r} must inherit from base {Handler}.")

        data[qc] = handler

    return data


def create_handler_factory(
    handler: type[HandlerType],
    **dependencies: Dependency,
) -> Callable[[], HandlerType]:
    def _factory() -> HandlerType:
        return handler(**{k: v() if callable(v) else v for k, v in dependencies.items()})

    return _factory


class BusBuilder:
    def __init__(self) -> None:
        self._buses: list[type[QCBusType]] = []
        self._dependencies: dict[str, Dependency] = {}
        self._middlewares: list[MiddlewareType] = []

    def buses(self, *buses: Any) -> BusBuilder:
        self._buses.extend(buses)

        return self

    def middlewares(self, *middlewares: MiddlewareType) -> BusBuilder:
        self._middlewares.extend(middlewares)

        return self

    def dependencies(self, **dependencies: Dependency) -> BusBuilder:
        self._dependencies.update(dependencies)

        return self

    def build(self) -> QCBus:
        from .core import QCBus

        impl = QCBus(*self._middlewares)

        for qc, handler in get_handlers_map(*self._buses).items():
            impl.register(
                qc=qc,
                handler=create_handler_factory(
                    handler, **_bind_or_raise(handler, self._dependencies)
                ),
            )

        return impl
