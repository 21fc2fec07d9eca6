"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/compare_backends.py [--bits 16,32,48,63] [--samples 200]
"""

import argparse
import random
import time

from pellcubic import _backend
from pellcubic.harness import random_prime


def timed(fn, *args, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bits", default="16,32,48,63")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--scan-hi", type=int, default=1 << 16)
    args = ap.parse_args()

    names = _backend.available()
    kernels = {name: _backend.load(name) for name in names}
    print("workload\t" + "\t".join(f"{n}_s" for n in names) + ("\tspeedup" if len(names) > 1 else ""))

    def row(label, seconds):
        cells = [f"{seconds[n]:.6f}" for n in names]
        if len(names) > 1:
            cells.append(f"{seconds['python'] / seconds['c']:.1f}x")
        print(label + "\t" + "\t".join(cells))

    for bits in (int(b) for b in args.bits.split(",")):
        rng = random.Random(bits)
        primes = [random_prime(bits, rng) for _ in range(args.samples)]
        seconds = {n: timed(lambda k=k: [k.pell_test(p, False) for p in primes]) / len(primes) for n, k in kernels.items()}
        row(f"pell_test/{bits}bit", seconds)
        seconds = {n: timed(lambda k=k: [k.is_prime(p) for p in primes]) / len(primes) for n, k in kernels.items()}
        row(f"oracle/{bits}bit", seconds)

    seconds = {n: timed(k.scan_block, 5, args.scan_hi, 0) for n, k in kernels.items()}
    row(f"scan_block/5..{args.scan_hi}", seconds)
    seconds = {n: timed(k.rstats_block, 7, args.scan_hi) for n, k in kernels.items()}
    row(f"rstats_block/7..{args.scan_hi}", seconds)


if __name__ == "__main__":
    main()
