import abc
from dataclasses import dataclass
from typing import Any, dataclass_transform

from lbentropy.app.contracts.dto import DTO


class Handler[T, Q: DTO, R](abc.ABC):
    __slots__ = ()

    @abc.abstractmethod
    def __call__(self, context: T, qc: Q, /) -> R: ...


type HandlerType = Handler[Any, Any, Any]


@dataclass_transform()
def handler[T](cls: type[T]) -> type[T]:
    """Handlers are frozen slotted dataclasses whose fields are bus dependencies."""
    return dataclass(slots=True, frozen=True)(cls)
