"""Choice of the product parameter r for n = 1 (mod 3).

The candidate order is every prime up to 997, then every integer from 998
up to n - 2. Products of cubes are cubes, so composite candidates below
998 can never be the first non-cube and are skipped.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator

from ._backend import kernels
from ._tables import PRIMES_BELOW_1000
from .modmath import MulCounter, OddModulus, Residue, powmod

PRIME_TABLE = PRIMES_BELOW_1000
SWITCHOVER = 998


def _require_one_mod_three(n: OddModulus) -> None:
    if n.residue_class != 1:
        raise ValueError(f"parameter search needs n = 1 (mod 3), got n = {n.n}")


def is_cube_witness(n: OddModulus, candidate: Residue, counter: MulCounter | None = None) -> bool:
    """True when candidate**((n-1)/3) != 1 mod n.

    For prime n this certifies that candidate is not a cube.
    """
    _require_one_mod_three(n)
    if candidate.modulus != n:
        raise ValueError("candidate is not a residue of n")
    if not 1 <= candidate.value <= n.n - 2:
        raise ValueError(f"candidate must lie in [1, n-2], got {candidate.value}")
    return powmod(candidate, (n.n - 1) // 3, counter).value != 1


def candidates(n: int) -> Iterator[int]:
    """Search order for r, restricted to values below n - 1."""
    for p in PRIME_TABLE:
        if p >= n - 1:
            return
        yield p
    yield from range(SWITCHOVER, n - 1)


def find_smallest_noncube(
    n: OddModulus,
    counter: MulCounter | None = None,
    probe: Callable[[int], None] | None = None,
) -> Residue | None:
    """First candidate failing the cubic Euler criterion, or None.

    None means no candidate worked, which only happens for composite n.
    With ``probe`` set, the search runs in Python and reports every
    candidate it examines, in order.
    """
    _require_one_mod_three(n)
    if probe is None:
        r, count = kernels.smallest_noncube(n.n)
        if counter is not None:
            counter.count += count
        return n(r) if r else None
    for c in candidates(n.n):
        probe(c)
        if is_cube_witness(n, n(c), counter):
            return n(c)
    return None
