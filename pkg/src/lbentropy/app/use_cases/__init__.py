from . import commands, queries


__all__ = (
    "commands",
    "queries",
)
