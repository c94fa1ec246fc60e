"""Counter-based, splittable 64-bit random numbers.

The generator is a keyed SplitMix64: the ``n``-th draw of a stream with key
``k`` is ``mix64(k + n * GAMMA mod 2**64)`` for ``n = 1, 2, ...``.  A stream
is identified by a path of labels; each label is folded into the key with
``key = mix64(key ^ mix64(label + GAMMA))``, where string labels are first
mapped to the first 8 bytes (little endian) of their BLAKE2b digest.

Sample ``i`` of a suite always draws from the stream ``(seed, suite, field,
i)``, so the values it sees do not depend on how samples are scheduled.
"""
from __future__ import annotations

import hashlib

from gmpy2 import mpq

from .scalar import DIMENSION, Scalar, check_field

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def _label(part) -> int:
    if isinstance(part, int):
        return part & MASK
    digest = hashlib.blake2b(str(part).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class CounterRNG:
    __slots__ = ("key", "counter")

    def __init__(self, seed: int, *path):
        key = mix64(seed)
        for part in path:
            key = mix64(key ^ mix64(_label(part) + GAMMA))
        self.key = key
        self.counter = 0

    def child(self, *path) -> "CounterRNG":
        """An independent stream derived from this stream's key (not its position)."""
        return CounterRNG(self.key, *path)

    def next_u64(self) -> int:
        self.counter += 1
        return mix64(self.key + self.counter * GAMMA)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def gen_rational(rng: CounterRNG, bound: int) -> mpq:
    return mpq(rng.randint(-bound, bound), rng.randint(1, bound))


def gen_scalar(rng: CounterRNG, field: str, bound: int = 10) -> Scalar:
    """Each coefficient is num/den with num in [-bound, bound], den in [1, bound]."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = DIMENSION[check_field(field)]
    return Scalar._raw(field, tuple(gen_rational(rng, bound) for _ in range(n)))


def gen_nonzero(rng: CounterRNG, field: str, bound: int = 10) -> Scalar:
    while True:
        s = gen_scalar(rng, field, bound)
        if not s.is_zero():
            return s


def gen_central(rng: CounterRNG, field: str, bound: int = 10) -> Scalar:
    """A random element of the center (a rational embedded in ``field``)."""
    n = DIMENSION[check_field(field)]
    return Scalar._raw(field, (gen_rational(rng, bound),) + (mpq(0),) * (n - 1))
