"""Triples under the r-twisted product and fast powers of (1, 1, 0).

The product of two triples is

    (x1, y1, z1) * (x2, y2, z2) =
        (x1 x2 + r (y1 z2 + z1 y2),  x1 y2 + y1 x2 + r z1 z2,  x1 z2 + y1 y2 + z1 x2)

which is multiplication in F[t] / (t^3 - r) written on coefficient
vectors. Only (1, 1, 0) is ever raised to a power, so the powering loop
uses a dedicated squaring and a cheap multiply-by-generator step.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import _pykernels, kernels
from ._tables import U64_LIMIT
from .modmath import MAX_MODULUS, ModulusMismatch, MulCounter, OddModulus, Residue

# mulmod calls per step, matching the kernels' accounting
SQUARE_COST = 8
GENERATOR_COST = 1


@dataclass(frozen=True)
class PellTriple:
    x: int
    y: int
    z: int
    r: int
    n: int

    def __post_init__(self):
        n = self.n
        if n < 2 or n > MAX_MODULUS:
            raise ValueError(f"modulus out of range: {n}")
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not 0 <= v < n:
                raise ValueError(f"{name}={v} is not reduced mod {n}")
        if not 0 < self.r < n - 1:
            raise ValueError(f"parameter r must be reduced and not 0 or -1 mod {n}: {self.r}")

    @classmethod
    def identity(cls, r: int, n: int) -> PellTriple:
        return cls(1, 0, 0, r, n)

    @classmethod
    def generator(cls, r: int, n: int) -> PellTriple:
        return cls(1, 1, 0, r, n)

    def components(self) -> tuple[int, int, int]:
        return self.x, self.y, self.z

    def _like(self, x, y, z) -> PellTriple:
        return PellTriple(x, y, z, self.r, self.n)


def _check_pair(a: PellTriple, b: PellTriple) -> None:
    if a.n != b.n:
        raise ModulusMismatch(f"mod {a.n} vs mod {b.n}")
    if a.r != b.r:
        raise ValueError(f"parameter mismatch: r={a.r} vs r={b.r}")


def triple_mul(a: PellTriple, b: PellTriple) -> PellTriple:
    """Generic product of two triples."""
    _check_pair(a, b)
    n, r = a.n, a.r
    x1, y1, z1 = a.components()
    x2, y2, z2 = b.components()
    return a._like(
        (x1 * x2 + r * (y1 * z2 + z1 * y2)) % n,
        (x1 * y2 + y1 * x2 + r * z1 * z2) % n,
        (x1 * z2 + y1 * y2 + z1 * x2) % n,
    )


def step_square(a: PellTriple) -> PellTriple:
    """a * a via (x^2 + 2ryz, 2xy + rz^2, 2xz + y^2)."""
    return a._like(*kernels.square_step(a.x, a.y, a.z, a.r, a.n))


def step_mul_generator(a: PellTriple) -> PellTriple:
    """(1, 1, 0) * a, i.e. (x + rz, x + y, y + z)."""
    return a._like(*kernels.mul_generator_step(a.x, a.y, a.z, a.r, a.n))


def power_of_generator(
    n: OddModulus | int,
    r: Residue | int,
    e: int,
    counter: MulCounter | None = None,
) -> PellTriple:
    """(1, 1, 0) raised to the e-th power mod n.

    Walks the bits of e from the second most significant down to bit 0,
    squaring at each bit and multiplying by the generator on set bits.
    """
    n = n.n if isinstance(n, OddModulus) else n
    r = r.value if isinstance(r, Residue) else r % n
    if e < 1:
        raise ValueError("exponent must be >= 1; build the identity with PellTriple.identity")
    PellTriple.generator(r, n)  # validates n and r
    impl = kernels if e < U64_LIMIT else _pykernels
    x, y, z, count = impl.power_of_generator(n, r, e)
    if counter is not None:
        counter.count += count
    return PellTriple(x, y, z, r, n)
