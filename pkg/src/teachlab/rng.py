"""Deterministic 64-bit pseudo-randomness.

Every random draw in this package is the SplitMix64 output at an explicit
stream index, so draws are order-independent: index i under seed s yields
the same value no matter which other draws happen, which makes tournament
sampling reproducible pair by pair and experiment trials safe to reorder or
run in parallel.
"""

__all__ = ["MASK64", "mix64", "stream", "stream_bit"]

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer (Steele, Lea, Flood 2014), a bijection on 64 bits."""
    x &= MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & MASK64
    x ^= x >> 31
    return x


def stream(seed: int, index: int) -> int:
    """The index-th output of the SplitMix64 sequence started at seed."""
    if index < 0:
        raise ValueError("stream index must be nonnegative")
    return mix64((seed + (index + 1) * _GAMMA) & MASK64)


def stream_bit(seed: int, index: int) -> int:
    """One unbiased bit per (seed, index)."""
    return stream(seed, index) & 1
