"""Deterministic case generation for the verification suites.

The generator is SplitMix64: state advances by adding 0x9E3779B97F4A7C15
(mod 2^64) and each output is the finalizer

    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all arithmetic mod 2^64.  The algorithm and constants are fixed so any
implementation, in any language, reproduces the same case streams from the
same seed.  ``below(n)`` reduces an output modulo n; the modulo bias is
irrelevant at these tiny ranges and keeps the recipe one line.

Random variable-set entries are rationals with numerator in [-9, 9]
(0 excluded unless requested) and denominator in [1, 9]; small exact values
exercise signs and non-integrality while keeping blowup bounded.
"""

from __future__ import annotations

from .exact_ring import Rat

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n


def random_scalar(rng: SplitMix64, allow_zero: bool = False) -> Rat:
    if allow_zero:
        num = rng.below(19) - 9
    else:
        d = rng.below(18)  # 18 nonzero numerators in [-9, 9]
        num = d - 9 if d < 9 else d - 8
    den = 1 + rng.below(9)
    return Rat(num, den)


def random_variable_set(
    rng: SplitMix64,
    max_size: int,
    min_size: int = 1,
    allow_zero: bool = False,
) -> tuple:
    size = min_size + rng.below(max_size - min_size + 1)
    return tuple(random_scalar(rng, allow_zero) for _ in range(size))
