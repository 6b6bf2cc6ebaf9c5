from __future__ import annotations

import logging
import sys
from collections.abc import Sequence

import pydantic

from config.core import AppConfig, LogSettings, load_config
from lbentropy.app.contracts import exceptions as app_exc
from lbentropy.app.contracts.context import Context

from .commands import SUBCOMMANDS
from .dependencies import setup_buses
from .exceptions import EXIT_OK, handle_error
from .parser import build_parser


__all__ = (
    "main",
    "run_cli",
)

log = logging.getLogger(__name__)


def setup_logging(settings: LogSettings, level: str | None = None) -> None:
    logging.basicConfig(
        level=level or settings.level,
        format=settings.format,
        stream=sys.stderr,
        force=True,
    )


def _load_config() -> AppConfig:
    try:
        return load_config()
    except pydantic.ValidationError as e:
        raise app_exc.ValidationError(f"Invalid environment settings: {e}", code="settings") from e


def _threads(config: AppConfig, requested: int | str | None) -> int:
    if requested is None:
        return config.study.threads_count()

    return config.study.model_copy(update={"threads": requested}).threads_count()


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        config = _load_config()
    except app_exc.AppError as e:
        setup_logging(LogSettings.model_construct(), args.log_level)
        return handle_error(e)

    setup_logging(config.log, args.log_level)
    ctx = Context(config=config, threads=_threads(config, getattr(args, "threads", None)))
    log.debug("Running `%s` on %d thread(s)", args.command, ctx.threads)

    try:
        SUBCOMMANDS[args.command](args, ctx, setup_buses())
    except app_exc.AppError as e:
        return handle_error(e)

    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())
