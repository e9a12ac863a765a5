"""Deterministic 64-bit pseudo-random stream (splitmix64).

Every randomized routine in the package draws from this generator so that
runs are bit-exact reproducible from a single integer seed.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator of Steele/Lea/Flood, fixed-point arithmetic mod 2^64."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); n must be positive.

        Plain modulo reduction: the bias is irrelevant for the mixing and
        sampling done here, and the output is reproducible across platforms.
        """
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def bit(self) -> int:
        return self.next_u64() & 1
