from .core import QCBus


__all__ = ("QCBus",)
