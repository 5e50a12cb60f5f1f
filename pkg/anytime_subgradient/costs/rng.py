"""Reproducible per-trial random streams."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidParameterError

MAX_SEED = 2 ** 64


@dataclass
class RngStream:
    """
    A random stream fixed by (seed, stream_id).

    Streams with different ids come from independent SeedSequence children
    of the same master seed, so trials never share bits. The stream is
    single-owner: `cursor` counts the cost vectors drawn through it.
    """
    seed: int
    stream_id: int = 0
    cursor: int = field(default=0, init=False)
    _generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.seed < MAX_SEED:
            raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.stream_id < 0:
            raise InvalidParameterError(f"stream_id must be >= 0, got {self.stream_id}")
        ss = np.random.SeedSequence(entropy=int(self.seed), spawn_key=(int(self.stream_id),))
        self._generator = np.random.Generator(np.random.PCG64(ss))

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def clone(self, stream_id: int) -> "RngStream":
        """Fresh stream for another trial under the same master seed."""
        return RngStream(self.seed, stream_id)
