"""Pinned PCG32 generator so sampled splits are reproducible byte-for-byte.

Standard-library and numpy generators vary across versions and languages, so
the experiment protocol fixes PCG32 (XSH-RR output, 64-bit LCG state) with
the canonical multiplier/increment, plus rejection sampling for unbiased
bounded draws.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1
_MASK32 = (1 << 32) - 1


class PCG32:
    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be unsigned")
        self._state = 0
        self._step()
        self._state = (self._state + seed) & _MASK64
        self._step()

    def _step(self) -> None:
        self._state = (self._state * _MULT + _INC) & _MASK64

    def next_u32(self) -> int:
        old = self._state
        self._step()
        xorshifted = (((old >> 18) ^ old) >> 27) & _MASK32
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((32 - rot) & 31))) & _MASK32

    def bounded(self, bound: int) -> int:
        """Unbiased draw in [0, bound) by rejecting the short tail of 2^32."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 32) % bound
        while True:
            r = self.next_u32()
            if r >= threshold:
                return r % bound


def partial_shuffle(count: int, n: int, rng: PCG32) -> list[int]:
    """First n slots of a Fisher-Yates shuffle of range(count)."""
    if not 0 <= n <= count:
        raise ValueError(f"cannot select {n} of {count}")
    idx = list(range(count))
    for i in range(n):
        j = i + rng.bounded(count - i)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:n]
