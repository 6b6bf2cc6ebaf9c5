from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import Any, Final

import msgspec


DEFAULT_CONVERT_TO_TYPES: Final[tuple[type, ...]] = (bytes, bytearray)
DEFAULT_CONVERT_FROM_TYPES: Final[tuple[type, ...]] = (*DEFAULT_CONVERT_TO_TYPES, memoryview)
FULL_PRECISION: Final[str] = ".17g"


def convert_to[T](cls: type[T], value: Any, **kw: Any) -> T:
    return msgspec.convert(
        value,
        cls,
        dec_hook=kw.pop("dec_hook", None),
        builtin_types=kw.pop("builtin_types", DEFAULT_CONVERT_TO_TYPES),
        **kw,
    )


def convert_from(value: Any, **kw: Any) -> Any:
    return msgspec.to_builtins(
        value, builtin_types=kw.pop("builtin_types", DEFAULT_CONVERT_FROM_TYPES), **kw
    )


def msgspec_encoder(obj: Any, *args: Any, **kw: Any) -> str:
    return msgspec.json.encode(obj, *args, **kw).decode(encoding="utf-8")


def msgspec_decoder(obj: Any, *args: Any, **kw: Any) -> Any:
    return msgspec.json.decode(obj, *args, **kw)


def pretty_json(obj: Any) -> str:
    return msgspec.json.format(msgspec.json.encode(obj), indent=2).decode(encoding="utf-8")


def full(value: float) -> str:
    """Shortest text for ``value`` at 17 significant digits (``nan``/``inf`` spelled out)."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"

    return format(value, FULL_PRECISION)


def rounded(value: float, digits: int = 4) -> str:
    return f"{value:.{digits}f}"


def join_floats(values: Iterable[float], sep: str = ";", fmt: Callable[[float], str] = full) -> str:
    return sep.join(fmt(float(v)) for v in values)


def read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8-sig")


def singleton[T](value: T) -> Callable[[], T]:
    def _factory() -> T:
        return value

    return _factory
