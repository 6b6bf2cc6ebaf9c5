from typing import Any, Protocol, overload, runtime_checkable

from lbentropy.app.bus.interfaces.bus import CallProxy
from lbentropy.app.bus.interfaces.handler import Handler
from lbentropy.app.contracts.context import Context
from lbentropy.app.contracts.dto import DTO

from . import fit, simulate


__all__ = (
    "CommandBus",
    "fit",
    "simulate",
)


@runtime_checkable
class CommandBus(Protocol):
    @overload
    def send_unwrapped(
        self,
        context: Context,
        qc: simulate.SimulateCommand,
        /,
    ) -> CallProxy[simulate.SimulateCommandHandler]: ...
    @overload
    def send_unwrapped(
        self,
        context: Context,
        qc: fit.FitCommand,
        /,
    ) -> CallProxy[fit.FitCommandHandler]: ...

    def send_unwrapped[R, Q: DTO, T](
        self,
        context: R,
        qc: Q,
        /,
        **kw: Any,
    ) -> CallProxy[Handler[R, Q, T]]: ...

    __call__ = send_unwrapped  # type: ignore[misc]
