"""Pell-X, Pell-Y and Pell-Z recurrences and the companion matrix M.

All three sequences satisfy s[i+3] = 3 s[i+2] - 3 s[i+1] + (r+1) s[i],
the recurrence of t^3 - 3t^2 + 3t - (r+1) = (t-1)^3 - r. Their starting
windows are X: (1,1,1), Y: (0,1,2), Z: (0,0,1), so (X_i, Y_i, Z_i) is the
i-th power of (1,1,0) under the r-product.

These are slow, obviously-correct oracles. Exact integer mode grows
exponentially and is meant for small indices; pass ``modulus`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Kind(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


INITIAL_WINDOWS = {
    Kind.X: (1, 1, 1),
    Kind.Y: (0, 1, 2),
    Kind.Z: (0, 0, 1),
}


class InvariantViolation(AssertionError):
    """A guaranteed mathematical property failed; indicates a bug."""


@dataclass
class SequenceState:
    """Rolling window (s_i, s_{i+1}, s_{i+2}) of one sequence."""

    r: int
    window: tuple[int, int, int]
    index: int = 0
    modulus: int | None = None

    @classmethod
    def start(cls, kind: Kind | str, r: int, modulus: int | None = None) -> SequenceState:
        window = INITIAL_WINDOWS[Kind(kind)]
        if modulus is not None:
            window = tuple(v % modulus for v in window)
        return cls(r, window, 0, modulus)

    @property
    def current(self) -> int:
        return self.window[0]

    def advance(self) -> None:
        a, b, c = self.window
        nxt = 3 * c - 3 * b + (self.r + 1) * a
        if self.modulus is not None:
            nxt %= self.modulus
        self.window = (b, c, nxt)
        self.index += 1


def seq_eval(kind: Kind | str, r: int, i: int, modulus: int | None = None) -> int:
    """The i-th term, by straight iteration of the recurrence."""
    if i < 0:
        raise ValueError("index must be non-negative")
    state = SequenceState.start(kind, r, modulus)
    for _ in range(i):
        state.advance()
    return state.current


def seq_triple(r: int, i: int, modulus: int | None = None) -> tuple[int, int, int]:
    return tuple(seq_eval(k, r, i, modulus) for k in Kind)


def iter_triples(r: int, modulus: int | None = None):
    """Yield (X_i, Y_i, Z_i) for i = 0, 1, 2, ..."""
    states = [SequenceState.start(k, r, modulus) for k in Kind]
    while True:
        yield tuple(s.current for s in states)
        for s in states:
            s.advance()


def matrix_m(r: int) -> list[list[int]]:
    return [[1, 0, r], [1, 1, 0], [0, 1, 1]]


def _matmul(a, b, modulus):
    out = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    if modulus is not None:
        out = [[v % modulus for v in row] for row in out]
    return out


def matrix_power_vector(r: int, k: int, modulus: int | None = None) -> tuple[int, int, int]:
    """First column of M**k, i.e. M**k applied to (1, 0, 0)."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = [[int(i == j) for j in range(3)] for i in range(3)]
    base = matrix_m(r)
    if modulus is not None:
        base = [[v % modulus for v in row] for row in base]
        result = [[v % modulus for v in row] for row in result]
    while k:
        if k & 1:
            result = _matmul(result, base, modulus)
        base = _matmul(base, base, modulus)
        k >>= 1
    return result[0][0], result[1][0], result[2][0]


def _first_free_index(kind: Kind) -> int:
    # Leading zeros of the starting window are structural, not divisibility.
    window = INITIAL_WINDOWS[kind]
    return max(1, next(i for i, v in enumerate(window) if v))


def rank_of_appearance(kind: Kind | str, r: int, p: int) -> int | None:
    """Smallest index m <= p, past the window's leading zeros, with p | term m.

    Pell-Z for p = 1 (mod 3) and Pell-Y for p = 2 (mod 3) are guaranteed
    to hit within p steps; a miss there raises InvariantViolation. Other
    combinations return None on a miss.
    """
    kind = Kind(kind)
    if p <= 3:
        raise ValueError("p must be a prime greater than 3")
    guaranteed = (kind is Kind.Z and p % 3 == 1) or (kind is Kind.Y and p % 3 == 2)
    state = SequenceState.start(kind, r, p)
    first = _first_free_index(kind)
    while state.index < first:
        state.advance()
    while state.index <= p:
        if state.current == 0:
            return state.index
        state.advance()
    if guaranteed:
        raise InvariantViolation(f"no rank of appearance <= {p} in Pell-{kind.value} with r={r}")
    return None
