"""Ground-truth primality, independent of the Pell machinery.

Trial division below 10**4; above that, Miller-Rabin with the first
twelve primes as witnesses, which is deterministic for every n < 2**64.
"""

from __future__ import annotations

import math

from ._backend import kernels
from ._tables import U64_LIMIT


def is_prime_oracle(n: int) -> bool:
    if n < 2:
        raise ValueError(f"oracle is defined for n >= 2, got {n}")
    if n >= U64_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic range 2**64")
    return bool(kernels.is_prime(n))


def sieve_upto(bound: int) -> list[int]:
    """All primes <= bound, ascending (sieve of Eratosthenes)."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i, f in enumerate(flags) if f]
