"""Reading observed samples from one-column CSV files."""

from __future__ import annotations

import csv
import io
import logging
import math
from pathlib import Path

from lbentropy.app.common.tools import read_text
from lbentropy.app.contracts import exceptions as exc
from lbentropy.core.sample import LBSample


logger = logging.getLogger(__name__)


def _parse(text: str, row: int) -> float:
    try:
        return float(text)
    except ValueError as e:
        raise exc.ParseError(f"Row {row}: `{text}` is not a number", row=row) from e


def parse_sample(text: str, source: str = "<string>") -> LBSample:
    """One positive value per row; a non-numeric first row is taken as a header."""
    values: list[float] = []
    # csv handles LF and CRLF alike
    for row, fields in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [f.strip() for f in fields if f.strip()]
        if not cells:
            continue
        if len(cells) > 1:
            raise exc.ParseError(
                f"Row {row}: expected a single value, got {len(cells)}", row=row, source=source
            )

        if row == 1 and not values:
            try:
                float(cells[0])
            except ValueError:
                logger.debug("Treating `%s` in %s as a header", cells[0], source)
                continue

        value = _parse(cells[0], row)
        if not math.isfinite(value) or value <= 0.0:
            raise exc.ValidationError(
                f"Row {row}: observations must be positive and finite, got {cells[0]}",
                code="sample",
                row=row,
                source=source,
            )
        values.append(value)

    return LBSample.from_values(values)


def load_sample(path: Path) -> LBSample:
    if not path.is_file():
        raise exc.NotFoundError(f"Data file not found: {path}", path=str(path))

    sample = parse_sample(read_text(path), str(path))
    logger.info("Loaded %d observations from %s", sample.n, path)
    return sample
