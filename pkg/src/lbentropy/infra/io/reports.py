"""CSV and JSON writers for reports, Q-Q pairs and generated samples."""

from __future__ import annotations

import contextlib
import csv
import logging
import sys
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path
from typing import TextIO

from lbentropy.app.common.tools import full, pretty_json
from lbentropy.app.dto.study import REPORT_COLUMNS, StudyReport


logger = logging.getLogger(__name__)

STDOUT = "-"


@contextlib.contextmanager
def open_output(path: Path | str | None) -> Iterator[TextIO]:
    """``path`` opened for writing, or stdout for ``None`` and ``-``."""
    if path is None or str(path) == STDOUT:
        yield sys.stdout
        return

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as stream:
        yield stream

    logger.info("Wrote %s", target)


def write_rows(
    stream: TextIO,
    header: Sequence[str],
    rows: Iterable[Sequence[str]],
    comment: str | None = None,
) -> None:
    if comment is not None:
        stream.write(f"{comment}\n")

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_study(report: StudyReport, path: Path | str | None) -> None:
    with open_output(path) as stream:
        write_rows(
            stream,
            REPORT_COLUMNS,
            (row.csv_record() for row in report.rows),
            comment=report.provenance(),
        )


def write_pairs(
    path: Path | str | None,
    header: tuple[str, str],
    first: Iterable[float],
    second: Iterable[float],
) -> None:
    with open_output(path) as stream:
        write_rows(stream, header, ([full(a), full(b)] for a, b in zip(first, second, strict=True)))


def write_values(path: Path | str | None, values: Iterable[float], header: str = "value") -> None:
    with open_output(path) as stream:
        write_rows(stream, (header,), ([full(v)] for v in values))


def write_json(obj: object, path: Path | str | None) -> None:
    with open_output(path) as stream:
        stream.write(pretty_json(obj))
        stream.write("\n")
