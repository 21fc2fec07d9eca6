"""The linear Pell's-cubic primality test and its strong composition.

For odd n > 3 prime to 3, with k = n // 3, the test computes
(x, y, z) = (1, 1, 0)^n mod n and checks

* n = 2 (mod 3), r = 2:  x = 1, y = 0, z = 2^k
* n = 1 (mod 3), r = smallest non-cube candidate:
  x = 1, y = r^k, z = 0, y + y^2 = -1

Conditions are checked in that order and the first failure is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _tables as T
from ._backend import kernels
from .modmath import MAX_MODULUS, MulCounter


class Outcome(str, Enum):
    PRIME = "prime"
    COMPOSITE = "composite"


class Reason(str, Enum):
    PASSED = "passed"
    DIVISIBLE_BY_3 = "divisible_by_3"
    SMALL_FACTOR = "small_factor"
    NO_NONCUBE_FOUND = "no_noncube_found"
    COND_X = "cond_x"
    COND_Y = "cond_y"
    COND_Z = "cond_z"
    COND_QUADRATIC = "cond_quadratic"
    FERMAT_BASE2 = "fermat_base2"


REASON_BY_CODE = {
    T.PASSED: Reason.PASSED,
    T.DIVISIBLE_BY_3: Reason.DIVISIBLE_BY_3,
    T.SMALL_FACTOR: Reason.SMALL_FACTOR,
    T.NO_NONCUBE_FOUND: Reason.NO_NONCUBE_FOUND,
    T.COND_X: Reason.COND_X,
    T.COND_Y: Reason.COND_Y,
    T.COND_Z: Reason.COND_Z,
    T.COND_QUADRATIC: Reason.COND_QUADRATIC,
    T.FERMAT_BASE2: Reason.FERMAT_BASE2,
}


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: Reason
    r_used: int | None = None

    def __post_init__(self):
        if (self.outcome is Outcome.PRIME) != (self.reason is Reason.PASSED):
            raise ValueError(f"inconsistent verdict {self.outcome} / {self.reason}")

    @property
    def is_prime(self) -> bool:
        return self.outcome is Outcome.PRIME

    @classmethod
    def from_code(cls, code: int, r: int) -> Verdict:
        reason = REASON_BY_CODE[code]
        outcome = Outcome.PRIME if reason is Reason.PASSED else Outcome.COMPOSITE
        return cls(outcome, reason, r or None)


def _check_input(n: int, minimum: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n % 2 == 0 or n <= minimum:
        raise ValueError(f"n must be odd and > {minimum}, got {n}")
    if n > MAX_MODULUS:
        raise ValueError(f"n = {n} exceeds the supported bound 2**64")


def pell_test_variant(
    n: int, drop_quadratic_condition: bool = False, counter: MulCounter | None = None
) -> Verdict:
    """The linear test, optionally without the y + y^2 = -1 check.

    Dropping the check is only useful to expose the pseudoprimes that the
    fourth condition removes.
    """
    _check_input(n, 3)
    code, r, count = kernels.pell_test(n, drop_quadratic_condition)
    if counter is not None:
        counter.count += count
    return Verdict.from_code(code, r)


def pell_test(n: int, counter: MulCounter | None = None) -> Verdict:
    return pell_test_variant(n, False, counter)


def strong_test(n: int, counter: MulCounter | None = None) -> Verdict:
    """Odd primes below 1000 by table, trial division by them, a base-2
    Fermat check, then the linear test."""
    _check_input(n, 2)
    code, r, count = kernels.strong_test(n)
    if counter is not None:
        counter.count += count
    return Verdict.from_code(code, r)


MODES = {
    "linear": T.MODE_LINEAR,
    "strong": T.MODE_STRONG,
    "drop-fourth": T.MODE_DROP_FOURTH,
}


def run(n: int, mode: str = "linear", counter: MulCounter | None = None) -> Verdict:
    if mode == "linear":
        return pell_test(n, counter)
    if mode == "strong":
        return strong_test(n, counter)
    if mode == "drop-fourth":
        return pell_test_variant(n, True, counter)
    raise ValueError(f"unknown mode {mode!r}")
