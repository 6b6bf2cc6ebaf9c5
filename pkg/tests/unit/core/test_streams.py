from __future__ import annotations

import numpy as np

from lbentropy.core.streams import cell_key, replicate_stream, sample_stream


def test_cell_key_is_stable_and_distinguishes_cells() -> None:
    key = cell_key("gld", [2.0, 1.0, 3.0, 5.0], 50)

    assert key == cell_key("gld", (2, 1, 3, 5), 50)
    assert 0 <= key < 2**32
    assert key != cell_key("gld", [2.0, 1.0, 3.0, 5.0], 100)
    assert key != cell_key("gld", [2.0, 1.0, 5.0, 3.0], 50)


def test_replicate_streams_are_reproducible_and_distinct() -> None:
    first = replicate_stream(1, 42, 0).random(8)

    assert np.array_equal(first, replicate_stream(1, 42, 0).random(8))
    assert not np.array_equal(first, replicate_stream(1, 42, 1).random(8))
    assert not np.array_equal(first, replicate_stream(2, 42, 0).random(8))


def test_replicate_stream_uses_philox() -> None:
    assert isinstance(replicate_stream(1, 2, 3).bit_generator, np.random.Philox)
    assert isinstance(sample_stream(1).bit_generator, np.random.Philox)
