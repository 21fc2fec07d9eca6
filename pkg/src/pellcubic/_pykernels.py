"""Pure-Python kernels.

Reference twin of ``_ckernels``: same function names, same return shapes,
same mulmod accounting. Used when the extension is not built or when
``PELLCUBIC_BACKEND=python`` is set.
"""

from ._tables import (
    COND_QUADRATIC,
    COND_X,
    COND_Y,
    COND_Z,
    DIVISIBLE_BY_3,
    FERMAT_BASE2,
    MODE_DROP_FOURTH,
    MODE_STRONG,
    MR_WITNESSES,
    NO_NONCUBE_FOUND,
    PASSED,
    PRIMES_BELOW_1000,
    SMALL_FACTOR,
    TRIAL_DIVISION_LIMIT,
)

NAME = "python"

_ODD_SMALL_PRIMES = PRIMES_BELOW_1000[1:]
_ODD_SMALL_PRIME_SET = frozenset(_ODD_SMALL_PRIMES)


def mulmod(a, b, n):
    return a * b % n


def addmod(a, b, n):
    s = a + b
    return s - n if s >= n else s


def submod(a, b, n):
    return a - b if a >= b else a - b + n


def negmod(a, n):
    return n - a if a else 0


def powmod(base, e, n):
    """Left-to-right binary powering. Returns ``(value, mulmods)``."""
    if e == 0:
        return 1 % n, 0
    base %= n
    result = base
    count = 0
    for i in range(e.bit_length() - 2, -1, -1):
        result = result * result % n
        count += 1
        if (e >> i) & 1:
            result = result * base % n
            count += 1
    return result, count


def square_step(x, y, z, r, n):
    ryz = r * (y * z % n) % n
    rzz = r * (z * z % n) % n
    xy = x * y % n
    xz = x * z % n
    return (
        (x * x % n + 2 * ryz) % n,
        (2 * xy + rzz) % n,
        (2 * xz + y * y % n) % n,
    )


def mul_generator_step(x, y, z, r, n):
    return (x + r * z % n) % n, (x + y) % n, (y + z) % n


def power_of_generator(n, r, e):
    """``(1,1,0)`` raised to ``e`` under the r-product, mod n.

    Returns ``(x, y, z, mulmods)``. Squarings cost 8 mulmods, the
    multiply-by-generator step costs 1.
    """
    x, y, z = 1 % n, 1 % n, 0
    count = 0
    for i in range(e.bit_length() - 2, -1, -1):
        ryz = r * (y * z % n) % n
        rzz = r * (z * z % n) % n
        x, y, z = (
            (x * x % n + 2 * ryz) % n,
            (2 * (x * y % n) + rzz) % n,
            (2 * (x * z % n) + y * y % n) % n,
        )
        count += 8
        if (e >> i) & 1:
            x, y, z = (x + r * z % n) % n, (x + y) % n, (y + z) % n
            count += 1
    return x, y, z, count


def smallest_noncube(n):
    """Tweaked non-cube search for n = 1 (mod 3). Returns ``(r, mulmods)``
    with ``r == 0`` when no candidate works."""
    e = (n - 1) // 3
    count = 0
    for c in PRIMES_BELOW_1000:
        if c >= n - 1:
            return 0, count
        v, k = powmod(c, e, n)
        count += k
        if v != 1:
            return c, count
    for c in range(998, n - 1):
        v, k = powmod(c, e, n)
        count += k
        if v != 1:
            return c, count
    return 0, count


def pell_test(n, drop_quadratic=False):
    """Returns ``(reason, r, mulmods)``; reason 0 means prime."""
    if n % 3 == 0:
        return DIVISIBLE_BY_3, 0, 0
    k = n // 3
    if n % 3 == 2:
        r = 2
        count = 0
    else:
        r, count = smallest_noncube(n)
        if r == 0:
            return NO_NONCUBE_FOUND, 0, count
    x, y, z, c = power_of_generator(n, r, n)
    count += c
    if x != 1:
        return COND_X, r, count
    rk, c = powmod(r, k, n)
    count += c
    if n % 3 == 2:
        if y != 0:
            return COND_Y, r, count
        if z != rk:
            return COND_Z, r, count
        return PASSED, r, count
    if y != rk:
        return COND_Y, r, count
    if z != 0:
        return COND_Z, r, count
    if not drop_quadratic:
        count += 1
        if (y + y * y % n) % n != n - 1:
            return COND_QUADRATIC, r, count
    return PASSED, r, count


def strong_test(n):
    if n in _ODD_SMALL_PRIME_SET:
        return PASSED, 0, 0
    for p in _ODD_SMALL_PRIMES:
        if n % p == 0:
            return SMALL_FACTOR, 0, 0
    v, count = powmod(2, n - 1, n)
    if v != 1:
        return FERMAT_BASE2, 0, count
    reason, r, c = pell_test(n)
    return reason, r, count + c


def is_prime(n):
    """Trial division below 10**4, deterministic Miller-Rabin above."""
    if n < 2:
        return False
    if n < TRIAL_DIVISION_LIMIT:
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        d = 3
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    if n % 2 == 0:
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        if n % a == 0:
            return False
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def run_test(n, mode):
    if mode == MODE_STRONG:
        return strong_test(n)
    return pell_test(n, mode == MODE_DROP_FOURTH)


def scan_block(lo, hi, mode):
    """Check every odd n in [lo, hi] prime to 3 against the oracle.

    Returns ``(tested, not_found, records)`` where each record is
    ``(n, test_says_prime, oracle_says_prime, reason, r)``.
    """
    tested = 0
    not_found = 0
    records = []
    n = lo | 1
    if n % 3 == 0:
        n += 2
    while n <= hi:
        reason, r, _ = run_test(n, mode)
        tested += 1
        if reason == NO_NONCUBE_FOUND:
            not_found += 1
        says = reason == PASSED
        truth = is_prime(n)
        if says != truth:
            records.append((n, says, truth, reason, r))
        n += 4 if n % 6 == 1 else 2
    return tested, not_found, records


def rstats_block(lo, hi):
    """Tally smallest_noncube over n = 1 (mod 6) in [lo, hi).

    Returns ``(counts, not_found)`` with counts keyed by r.
    """
    counts = {}
    not_found = 0
    n = lo + (1 - lo) % 6
    while n < hi:
        r, _ = smallest_noncube(n)
        if r == 0:
            not_found += 1
        else:
            counts[r] = counts.get(r, 0) + 1
        n += 6
    return counts, not_found
