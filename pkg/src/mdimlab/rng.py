"""Seedable, portable pseudo-random generator for reproducible corpora.

SplitMix64 (Steele, Lea, Flood; the java.util.SplittableRandom finalizer)
with the canonical constants.  State advances by the 64-bit golden-gamma
increment and each output is the mixed state.  Bounded draws use rejection
sampling on the top range so every remainder is exactly uniform.  The
algorithm is fixed here so that a (family, parameters, seed) triple
produces byte-identical graphs on any platform or language.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound
