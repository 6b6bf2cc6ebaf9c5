"""Counter-based random streams keyed by (master seed, cell, replicate)."""

from __future__ import annotations

import hashlib
from collections.abc import Sequence

import numpy as np


def cell_key(family: str, params: Sequence[float], n: int) -> int:
    """Stable 32-bit identifier of a study cell.

    Built from the text form of the cell so that it does not depend on
    the position of the cell inside a config or on the Python hash seed.
    """
    text = f"{family}|{','.join(repr(float(p)) for p in params)}|{n}"
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:4], "little")


def replicate_stream(master_seed: int, key: int, replicate: int) -> np.random.Generator:
    seq = np.random.SeedSequence(master_seed, spawn_key=(key, replicate))
    return np.random.Generator(np.random.Philox(seq))


def sample_stream(master_seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(master_seed)))
