from __future__ import annotations

from dataclasses import dataclass

from lbentropy import __version__
from lbentropy.app.bus import QCBus
from lbentropy.app.bus.middlewares import TimingMiddleware
from lbentropy.app.common.tools import singleton
from lbentropy.app.use_cases.commands import CommandBus
from lbentropy.app.use_cases.queries import QueryBus
from lbentropy.infra.io.reports import write_pairs, write_study
from lbentropy.infra.io.samples import load_sample


@dataclass(frozen=True, slots=True)
class Buses:
    commands: CommandBus
    queries: QueryBus


def setup_buses(version: str = __version__) -> Buses:
    query_bus = (
        QCBus.builder()
        .dependencies(load_sample=singleton(load_sample))
        .buses(QueryBus)
        .middlewares(TimingMiddleware())
        .build()
    )
    command_bus = (
        QCBus.builder()
        .dependencies(
            version=version,
            load_sample=singleton(load_sample),
            write_study=singleton(write_study),
            write_pairs=singleton(write_pairs),
        )
        .buses(CommandBus)
        .middlewares(TimingMiddleware())
        .build()
    )
    return Buses(commands=command_bus, queries=query_bus)  # type: ignore[arg-type]
