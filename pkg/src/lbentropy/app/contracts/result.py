from __future__ import annotations

from typing import Protocol, runtime_checkable

from lbentropy.app.contracts.exceptions import AppError


@runtime_checkable
class Result[T, E: Exception](Protocol):
    def is_ok(self) -> bool: ...
    def error(self) -> E | None: ...
    def unwrap(self) -> T: ...


type AppResult[T] = Result[T, AppError]
