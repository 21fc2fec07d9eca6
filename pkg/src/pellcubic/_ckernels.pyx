# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for moduli below 2**64.

Mirrors ``_pykernels`` function for function. Products go through a
128-bit intermediate, with a 64-bit shortcut when n < 2**32.
"""

from libc.stdint cimport uint64_t

from ._tables import PRIMES_BELOW_1000, MR_WITNESSES

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

NAME = "c"

cdef enum:
    N_SMALL = 168
    N_WITNESS = 12

cdef enum:
    PASSED = 0
    DIVISIBLE_BY_3 = 1
    SMALL_FACTOR = 2
    NO_NONCUBE_FOUND = 3
    COND_X = 4
    COND_Y = 5
    COND_Z = 6
    COND_QUADRATIC = 7
    FERMAT_BASE2 = 8

cdef enum:
    MODE_LINEAR = 0
    MODE_STRONG = 1
    MODE_DROP_FOURTH = 2

cdef uint64_t SMALL[N_SMALL]
cdef uint64_t WITNESS[N_WITNESS]

for _i in range(N_SMALL):
    SMALL[_i] = PRIMES_BELOW_1000[_i]
for _i in range(N_WITNESS):
    WITNESS[_i] = MR_WITNESSES[_i]


cdef inline uint64_t _mul(uint64_t a, uint64_t b, uint64_t n) nogil:
    if n <= 0xFFFFFFFFULL:
        return (a * b) % n
    return <uint64_t>((<u128>a * b) % n)


cdef inline uint64_t _add(uint64_t a, uint64_t b, uint64_t n) nogil:
    # a, b < n; the sum may wrap past 2**64
    cdef uint64_t s = a + b
    if s < a or s >= n:
        s -= n
    return s


cdef inline uint64_t _sub(uint64_t a, uint64_t b, uint64_t n) nogil:
    if a >= b:
        return a - b
    return a - b + n


cdef inline int _bitlen(uint64_t e) nogil:
    cdef int k = 0
    while e:
        e >>= 1
        k += 1
    return k


cdef uint64_t _pow(uint64_t base, uint64_t e, uint64_t n, uint64_t *count) nogil:
    cdef uint64_t result
    cdef int i
    if e == 0:
        return 1 % n
    base %= n
    result = base
    i = _bitlen(e) - 2
    while i >= 0:
        result = _mul(result, result, n)
        count[0] += 1
        if (e >> i) & 1:
            result = _mul(result, base, n)
            count[0] += 1
        i -= 1
    return result


cdef void _square(uint64_t *x, uint64_t *y, uint64_t *z, uint64_t r, uint64_t n) nogil:
    cdef uint64_t ryz = _mul(r, _mul(y[0], z[0], n), n)
    cdef uint64_t rzz = _mul(r, _mul(z[0], z[0], n), n)
    cdef uint64_t xy = _mul(x[0], y[0], n)
    cdef uint64_t xz = _mul(x[0], z[0], n)
    cdef uint64_t nx = _add(_mul(x[0], x[0], n), _add(ryz, ryz, n), n)
    cdef uint64_t ny = _add(_add(xy, xy, n), rzz, n)
    cdef uint64_t nz = _add(_add(xz, xz, n), _mul(y[0], y[0], n), n)
    x[0] = nx
    y[0] = ny
    z[0] = nz


cdef inline void _mul_gen(uint64_t *x, uint64_t *y, uint64_t *z, uint64_t r, uint64_t n) nogil:
    cdef uint64_t nx = _add(x[0], _mul(r, z[0], n), n)
    cdef uint64_t ny = _add(x[0], y[0], n)
    cdef uint64_t nz = _add(y[0], z[0], n)
    x[0] = nx
    y[0] = ny
    z[0] = nz


cdef void _power_gen(uint64_t n, uint64_t r, uint64_t e,
                     uint64_t *x, uint64_t *y, uint64_t *z, uint64_t *count) nogil:
    cdef int i = _bitlen(e) - 2
    x[0] = 1 % n
    y[0] = 1 % n
    z[0] = 0
    while i >= 0:
        _square(x, y, z, r, n)
        count[0] += 8
        if (e >> i) & 1:
            _mul_gen(x, y, z, r, n)
            count[0] += 1
        i -= 1


cdef uint64_t _noncube(uint64_t n, uint64_t *count) nogil:
    cdef uint64_t e = (n - 1) // 3
    cdef uint64_t c
    cdef int i
    for i in range(N_SMALL):
        c = SMALL[i]
        if c >= n - 1:
            return 0
        if _pow(c, e, n, count) != 1:
            return c
    c = 998
    while c < n - 1:
        if _pow(c, e, n, count) != 1:
            return c
        c += 1
    return 0


cdef int _pell(uint64_t n, bint drop_quadratic, uint64_t *r_out, uint64_t *count) nogil:
    cdef uint64_t k, r, x, y, z, rk
    cdef int cls = n % 3
    r_out[0] = 0
    if cls == 0:
        return DIVISIBLE_BY_3
    k = n // 3
    if cls == 2:
        r = 2
    else:
        r = _noncube(n, count)
        if r == 0:
            return NO_NONCUBE_FOUND
    r_out[0] = r
    _power_gen(n, r, n, &x, &y, &z, count)
    if x != 1:
        return COND_X
    rk = _pow(r, k, n, count)
    if cls == 2:
        if y != 0:
            return COND_Y
        if z != rk:
            return COND_Z
        return PASSED
    if y != rk:
        return COND_Y
    if z != 0:
        return COND_Z
    if not drop_quadratic:
        count[0] += 1
        if _add(y, _mul(y, y, n), n) != n - 1:
            return COND_QUADRATIC
    return PASSED


cdef int _strong(uint64_t n, uint64_t *r_out, uint64_t *count) nogil:
    cdef int i
    cdef uint64_t p
    r_out[0] = 0
    for i in range(1, N_SMALL):
        p = SMALL[i]
        if n == p:
            return PASSED
        if n % p == 0:
            return SMALL_FACTOR
    if _pow(2, n - 1, n, count) != 1:
        return FERMAT_BASE2
    return _pell(n, False, r_out, count)


cdef bint _is_prime(uint64_t n) nogil:
    cdef uint64_t d, x, a, dummy = 0
    cdef int s, i, j
    cdef bint hit
    if n < 2:
        return False
    if n < 10000:
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
        d >>= 1
        s += 1
    for i in range(N_WITNESS):
        a = WITNESS[i]
        if n % a == 0:
            return False
        x = _pow(a, d, n, &dummy)
        if x == 1 or x == n - 1:
            continue
        hit = False
        for j in range(s - 1):
            x = _mul(x, x, n)
            if x == n - 1:
                hit = True
                break
        if not hit:
            return False
    return True


cdef inline int _run(uint64_t n, int mode, uint64_t *r, uint64_t *count) nogil:
    if mode == MODE_STRONG:
        return _strong(n, r, count)
    return _pell(n, mode == MODE_DROP_FOURTH, r, count)


# Python-facing wrappers. Argument conversion raises OverflowError for
# values outside [0, 2**64).

def mulmod(uint64_t a, uint64_t b, uint64_t n):
    return _mul(a, b, n)


def addmod(uint64_t a, uint64_t b, uint64_t n):
    return _add(a, b, n)


def submod(uint64_t a, uint64_t b, uint64_t n):
    return _sub(a, b, n)


def negmod(uint64_t a, uint64_t n):
    return n - a if a else 0


def powmod(uint64_t base, uint64_t e, uint64_t n):
    cdef uint64_t count = 0
    cdef uint64_t v = _pow(base, e, n, &count)
    return v, count


def square_step(uint64_t x, uint64_t y, uint64_t z, uint64_t r, uint64_t n):
    _square(&x, &y, &z, r, n)
    return x, y, z


def mul_generator_step(uint64_t x, uint64_t y, uint64_t z, uint64_t r, uint64_t n):
    _mul_gen(&x, &y, &z, r, n)
    return x, y, z


def power_of_generator(uint64_t n, uint64_t r, uint64_t e):
    cdef uint64_t x, y, z, count = 0
    _power_gen(n, r, e, &x, &y, &z, &count)
    return x, y, z, count


def smallest_noncube(uint64_t n):
    cdef uint64_t count = 0
    cdef uint64_t r = _noncube(n, &count)
    return r, count


def pell_test(uint64_t n, bint drop_quadratic=False):
    cdef uint64_t r = 0, count = 0
    cdef int reason = _pell(n, drop_quadratic, &r, &count)
    return reason, r, count


def strong_test(uint64_t n):
    cdef uint64_t r = 0, count = 0
    cdef int reason = _strong(n, &r, &count)
    return reason, r, count


def is_prime(uint64_t n):
    return _is_prime(n)


def run_test(uint64_t n, int mode):
    cdef uint64_t r = 0, count = 0
    cdef int reason = _run(n, mode, &r, &count)
    return reason, r, count


def scan_block(uint64_t lo, uint64_t hi, int mode):
    cdef uint64_t n, r, count, tested = 0, not_found = 0
    cdef int reason
    cdef bint says, truth
    records = []
    n = lo | 1
    if n % 3 == 0:
        n += 2
    while n <= hi and n >= lo:
        r = 0
        count = 0
        with nogil:
            reason = _run(n, mode, &r, &count)
            truth = _is_prime(n)
        tested += 1
        if reason == NO_NONCUBE_FOUND:
            not_found += 1
        says = reason == PASSED
        if says != truth:
            records.append((n, says, truth, reason, r))
        n += 4 if n % 6 == 1 else 2
    return tested, not_found, records


def rstats_block(uint64_t lo, uint64_t hi):
    cdef uint64_t n, r, count = 0, not_found = 0
    cdef uint64_t tally[1000]
    cdef int i
    for i in range(1000):
        tally[i] = 0
    counts = {}
    n = lo + (6 + 1 - lo % 6) % 6
    while n < hi:
        r = _noncube(n, &count)
        if r == 0:
            not_found += 1
        elif r < 1000:
            tally[r] += 1
        else:
            counts[r] = counts.get(r, 0) + 1
        n += 6
    for i in range(1000):
        if tally[i]:
            counts[i] = tally[i]
    return counts, not_found
