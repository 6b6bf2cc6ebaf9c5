from __future__ import annotations

import traceback
from collections.abc import Callable
from functools import wraps
from typing import NamedTuple

from lbentropy.app.contracts.exceptions import AppError, NumericalError


class ResultImpl[T, E: Exception](NamedTuple):
    """Value of one replicate step, or the error that stopped it."""

    data: T | None
    err: E | None

    @classmethod
    def ok(cls, data: T) -> ResultImpl[T, E]:
        return cls(data, None)

    @classmethod
    def failed(cls, err: E) -> ResultImpl[T, E]:
        return cls(None, err)

    def is_ok(self) -> bool:
        return self.err is None

    def error(self) -> E | None:
        return self.err

    def unwrap(self) -> T:
        if self.err is not None:
            raise self.err
        if self.data is None:
            raise AppError("Empty result")

        return self.data


def _normalize_exc(e: Exception) -> AppError:
    if isinstance(e, AppError):
        return e

    # plain exceptions raised inside a replicate, mostly from numpy / scipy
    detail = "\n".join(map(str, e.args))
    ae = NumericalError(f"{type(e).__name__}: {detail}" if detail else type(e).__name__)
    tb = traceback.TracebackException.from_exception(e, capture_locals=False)
    ae.add_note(f"\n\nOriginal traceback:\n{''.join(tb.format())}")

    return ae


def as_result[T, **P](f: Callable[P, T], /) -> Callable[P, ResultImpl[T, AppError]]:
    """Run ``f`` and capture any ``Exception`` it raises as an ``AppError`` result.

    ``KeyboardInterrupt`` and other ``BaseException``s still propagate.
    """

    @wraps(f)
    def _wrapper(*args: P.args, **kwargs: P.kwargs) -> ResultImpl[T, AppError]:
        try:
            return ResultImpl.ok(f(*args, **kwargs))
        except Exception as e:  # noqa: BLE001
            return ResultImpl.failed(_normalize_exc(e))

    return _wrapper
