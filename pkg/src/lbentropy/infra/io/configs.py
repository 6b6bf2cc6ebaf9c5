from __future__ import annotations

from pathlib import Path
from typing import Any

import msgspec

from lbentropy.app.common.tools import msgspec_decoder, read_text
from lbentropy.app.contracts import exceptions as exc


def read_config(path: Path) -> dict[str, Any]:
    """Top-level JSON object of the config file at ``path``."""
    if not path.is_file():
        raise exc.NotFoundError(f"Config file not found: {path}", path=str(path))

    try:
        data = msgspec_decoder(read_text(path))
    except msgspec.DecodeError as e:
        raise exc.ParseError(f"Invalid JSON in {path}: {e}", path=str(path)) from e

    if not isinstance(data, dict):
        raise exc.ParseError(f"{path} must hold a JSON object", path=str(path))

    return data
