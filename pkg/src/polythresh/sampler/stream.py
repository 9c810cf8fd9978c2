import numpy as np

_UINT64_LIMIT = 2 ** 64


class RngStream:
    """
    RngStream is a reproducible random stream identified by a master seed and a stream index.
    Streams with different indices are statistically independent; the pair fully determines
    the output sequence on every platform and in every thread.

    The bit generator is Philox, a counter-based generator, keyed by
    ``SeedSequence(seed, spawn_key=(stream_id,))``.
    """
    __slots__ = ('_seed', '_stream_id', '_generator')

    def __init__(self, seed: int, stream_id: int = 0):
        """
        Initializes RngStream object.

        >>> RngStream(7, 3)
        RngStream(seed=7, stream_id=3)

        :param seed: master seed, 0 <= seed < 2^64
        :param stream_id: index of the substream, 0 <= stream_id < 2^64 (default: 0)
        """
        for name, value in (('seed', seed), ('stream_id', stream_id)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f'{name} must be an integer')

            if not 0 <= value < _UINT64_LIMIT:
                raise ValueError(f'{name} must be in range [0, 2^64)')

        self._seed = int(seed)
        self._stream_id = int(stream_id)

        sequence = np.random.SeedSequence(self._seed, spawn_key=(self._stream_id,))
        self._generator = np.random.Generator(np.random.Philox(sequence))

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def stream_id(self) -> int:
        return self._stream_id

    @property
    def generator(self) -> np.random.Generator:
        """
        Returns the underlying numpy generator. It is owned by this stream
        and must not be shared between threads.

        :return: numpy Generator
        """
        return self._generator

    def integer_seed(self) -> int:
        """
        Draws a 63-bit seed for a nested family of streams.

        :return: non-negative integer below 2^63
        """
        return int(self._generator.integers(0, 2 ** 63, dtype=np.int64))

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(seed={self._seed}, stream_id={self._stream_id})'
