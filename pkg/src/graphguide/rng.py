"""Seedable, portable random number generator.

Graph generation and layout seeding use SplitMix64 rather than Python's
Mersenne Twister so the algorithm is small enough to restate in full and
reproduce in any language:

    state := (state + 0x9E3779B97F4A7C15) mod 2^64
    z := state
    z := (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z := (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output := z XOR (z >> 31)

Every derived helper (``randrange``, ``uniform``, ``choice``, ``sample``,
``shuffle``) is defined on top of that single stream, so a fixed seed yields
an identical call-for-call sequence everywhere.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n). Rejection-sampled to avoid modulo bias."""
        if n <= 0:
            raise ValueError("randrange() requires n >= 1")
        limit = (MASK64 // n) * n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def sample(self, seq, k: int) -> list:
        """k distinct elements, drawn without replacement (partial shuffle)."""
        if k > len(seq):
            raise ValueError("sample larger than population")
        pool = list(seq)
        for i in range(k):
            j = i + self.randrange(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
