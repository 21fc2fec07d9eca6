"""Modular arithmetic on odd moduli below 2**64.

Values are carried as :class:`Residue` objects bound to an
:class:`OddModulus`; every operation returns a fully reduced residue.
Multiplications can be tallied by passing a :class:`MulCounter`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._backend import kernels, _pykernels
from ._tables import U64_LIMIT

MAX_MODULUS = U64_LIMIT - 1


class ModulusMismatch(ValueError):
    """Operands belong to different moduli."""


@dataclass(frozen=True)
class OddModulus:
    """An odd modulus n > 3 prime to 3, with k = n // 3 precomputed."""

    n: int
    k: int = field(init=False, repr=False)
    residue_class: int = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"modulus must be an int, got {type(n).__name__}")
        if n <= 3 or n % 2 == 0 or n % 3 == 0:
            raise ValueError(f"modulus must be odd, > 3 and prime to 3: {n}")
        if n > MAX_MODULUS:
            raise ValueError(f"modulus {n} exceeds the supported bound 2**64")
        object.__setattr__(self, "k", n // 3)
        object.__setattr__(self, "residue_class", n % 3)

    def __call__(self, value: int) -> Residue:
        return Residue(value % self.n, self)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: OddModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.n:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus.n}")

    def __int__(self):
        return self.value


class MulCounter:
    """Tally of modular multiplications for one measurement context."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, k: int) -> None:
        self.count += k

    def __repr__(self):
        return f"MulCounter(count={self.count})"


def _shared(a: Residue, b: Residue) -> OddModulus:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"mod {a.modulus.n} vs mod {b.modulus.n}")
    return a.modulus


def mulmod(a: Residue, b: Residue, counter: MulCounter | None = None) -> Residue:
    m = _shared(a, b)
    if counter is not None:
        counter.count += 1
    return Residue(kernels.mulmod(a.value, b.value, m.n), m)


def addmod(a: Residue, b: Residue) -> Residue:
    m = _shared(a, b)
    return Residue(kernels.addmod(a.value, b.value, m.n), m)


def submod(a: Residue, b: Residue) -> Residue:
    m = _shared(a, b)
    return Residue(kernels.submod(a.value, b.value, m.n), m)


def negmod(a: Residue) -> Residue:
    return Residue(kernels.negmod(a.value, a.modulus.n), a.modulus)


def powmod(base: Residue, e: int, counter: MulCounter | None = None) -> Residue:
    """base**e by left-to-right binary powering; ``powmod(b, 0) == 1``."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    m = base.modulus
    impl = kernels if e < U64_LIMIT else _pykernels
    value, count = impl.powmod(base.value, e, m.n)
    if counter is not None:
        counter.count += count
    return Residue(value, m)
