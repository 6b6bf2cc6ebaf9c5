import logging
from typing import Final

import lbentropy.app.contracts.exceptions as app_exc


log = logging.getLogger(__name__)

EXIT_OK: Final[int] = 0
EXIT_INVALID: Final[int] = 2
EXIT_NUMERICAL: Final[int] = 3

type ExitCodesMap = dict[type[app_exc.AppError], int]


def exit_codes() -> ExitCodesMap:
    return {
        app_exc.ValidationError: EXIT_INVALID,
        app_exc.NumericalError: EXIT_NUMERICAL,
        app_exc.AppError: EXIT_NUMERICAL,
    }


def exit_code_for(exc: app_exc.AppError, codes: ExitCodesMap | None = None) -> int:
    """Code of the closest class of ``exc`` present in ``codes``."""
    codes = codes or exit_codes()
    for cls in type(exc).__mro__:
        if cls in codes:
            return codes[cls]

    return EXIT_NUMERICAL


def handle_error(exc: app_exc.AppError) -> int:
    log.error("Handle error: %s -> %s", type(exc).__name__, exc.content)

    return exit_code_for(exc)
