"""Range scans against the oracle, parameter statistics, and operation counts.

Scans split [lo, hi] into contiguous chunks of CHUNK numbers, optionally
spread over worker processes. Chunks are merged in order, so output does
not depend on the worker count, and a checkpoint file holding the last
completed n is rewritten after every chunk.
"""

from __future__ import annotations

import os
import random
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _backend
from .modmath import MAX_MODULUS, MulCounter
from .oracle import is_prime_oracle
from .primality import MODES, REASON_BY_CODE, run

CHUNK = 1 << 20
JOBS_ENV = "PELLCUBIC_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw:
        jobs = int(raw)
        if jobs < 1:
            raise ValueError(f"{JOBS_ENV} must be >= 1")
        return jobs
    return 1


@dataclass
class ScanSummary:
    lo: int
    hi: int
    mode: str
    start: int
    tested: int = 0
    false_primes: int = 0
    false_composites: int = 0
    not_found: int = 0
    records: list[dict] = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return self.false_primes + self.false_composites

    def line(self) -> str:
        return (
            f"# tested={self.tested} disagreements={self.disagreements}"
            f" false_primes={self.false_primes} false_composites={self.false_composites}"
            f" no_noncube_found={self.not_found} range={self.start}..{self.hi} mode={self.mode}"
        )


def _verdict(prime: bool) -> str:
    return "prime" if prime else "composite"


def make_record(n: int, says: bool, truth: bool, reason: int, r: int) -> dict:
    return {
        "n": n,
        "pell_verdict": _verdict(says),
        "oracle_verdict": _verdict(truth),
        "reason": REASON_BY_CODE[reason].value,
        "r": r or None,
    }


def _scan_chunk(args):
    lo, hi, mode, backend = args
    return _backend.load(backend).scan_block(lo, hi, mode)


def read_checkpoint(path: str) -> int | None:
    try:
        with open(path) as fh:
            text = fh.read().strip()
    except FileNotFoundError:
        return None
    return int(text) if text else None


def write_checkpoint(path: str, last_completed: int) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(f"{last_completed}\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def chunks(lo: int, hi: int, size: int = CHUNK) -> Iterator[tuple[int, int]]:
    start = lo
    while start <= hi:
        end = min(hi, start + size - 1)
        yield start, end
        start = end + 1


def scan(
    lo: int,
    hi: int,
    mode: str = "linear",
    jobs: int = 1,
    checkpoint: str | None = None,
    on_record: Callable[[dict], None] | None = None,
    chunk: int = CHUNK,
) -> ScanSummary:
    """Run the chosen test on every odd n in [lo, hi] prime to 3."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if lo < 5 or hi > MAX_MODULUS:
        raise ValueError(f"scan range must satisfy 5 <= lo and hi < 2**64, got {lo}..{hi}")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    start = lo
    if checkpoint:
        done = read_checkpoint(checkpoint)
        if done is not None:
            start = max(lo, done + 1)
    summary = ScanSummary(lo, hi, mode, start)
    if start > hi:
        return summary

    backend = _backend.kernels.NAME
    tasks = [(a, b, MODES[mode], backend) for a, b in chunks(start, hi, chunk)]
    if jobs > 1 and len(tasks) > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_scan_chunk, tasks)
    else:
        pool = None
        results = map(_scan_chunk, tasks)
    try:
        for (_, b, _, _), (tested, not_found, raw) in zip(tasks, results):
            summary.tested += tested
            summary.not_found += not_found
            for n, says, truth, reason, r in raw:
                if says:
                    summary.false_primes += 1
                else:
                    summary.false_composites += 1
                rec = make_record(n, says, truth, reason, r)
                summary.records.append(rec)
                if on_record is not None:
                    on_record(rec)
            if checkpoint:
                write_checkpoint(checkpoint, b)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return summary


@dataclass
class RStats:
    bound: int
    counts: dict[int, int]
    not_found: int

    @property
    def total(self) -> int:
        return sum(self.counts.values()) + self.not_found

    def percent(self, r: int) -> float:
        return 100.0 * self.counts.get(r, 0) / self.total if self.total else 0.0


def r_stats(bound: int) -> RStats:
    """Tally the chosen r over n = 7, 13, 19, ... below bound."""
    if bound < 7:
        raise ValueError("bound must be >= 7")
    if bound > MAX_MODULUS + 1:
        raise ValueError("bound exceeds 2**64")
    counts, not_found = _backend.kernels.rstats_block(7, bound)
    return RStats(bound, dict(sorted(counts.items())), not_found)


def random_prime(bits: int, rng: random.Random) -> int:
    """Uniform-ish random prime with exactly ``bits`` bits (and > 3)."""
    if not 3 <= bits <= 64:
        raise ValueError(f"bit size must be in [3, 64], got {bits}")
    lo, hi = 1 << (bits - 1), (1 << bits) - 1
    while True:
        n = rng.randint(lo, hi) | 1
        if n > 3 and n <= hi and is_prime_oracle(n):
            return n


@dataclass
class BenchRow:
    bits: int
    samples: int
    mean_mulmods: float
    ns_per_test: dict[str, float] = field(default_factory=dict)

    @property
    def ratio(self) -> float:
        return self.mean_mulmods / self.bits


def bench(
    bit_sizes: list[int],
    samples: int = 200,
    seed: int = 0,
    backends: list[str] | None = None,
) -> list[BenchRow]:
    """Mean mulmod count of the linear test on random primes per bit size.

    ``backends`` adds wall-clock timing of each named kernel backend on the
    same primes.
    """
    rows = []
    for bits in bit_sizes:
        rng = random.Random(f"{seed}:{bits}")
        primes = [random_prime(bits, rng) for _ in range(samples)]
        total = 0
        for p in primes:
            c = MulCounter()
            if not run(p, "linear", c).is_prime:
                raise AssertionError(f"linear test rejected the prime {p}")
            total += c.count
        row = BenchRow(bits, samples, total / samples if samples else 0.0)
        for name in backends or ():
            k = _backend.load(name)
            t0 = time.perf_counter_ns()
            for p in primes:
                k.pell_test(p, False)
            row.ns_per_test[name] = (time.perf_counter_ns() - t0) / max(samples, 1)
        rows.append(row)
    return rows
