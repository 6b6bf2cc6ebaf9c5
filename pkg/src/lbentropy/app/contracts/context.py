from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from config.core import AppConfig


@dataclass(frozen=True, slots=True)
class Context:
    """Per-invocation settings shared by every handler."""

    config: AppConfig
    threads: int = 1
