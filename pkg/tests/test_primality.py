import pytest

from pellcubic.modmath import MulCounter
from pellcubic.oracle import is_prime_oracle, sieve_upto
from pellcubic.primality import (
    Outcome,
    Reason,
    Verdict,
    pell_test,
    pell_test_variant,
    run,
    strong_test,
)
from pellcubic.sequences import matrix_power_vector

PSEUDOPRIMES_WITHOUT_FOURTH = (6189121, 12262321, 14469841)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(Outcome.PRIME, Reason.COND_X)
    with pytest.raises(ValueError):
        Verdict(Outcome.COMPOSITE, Reason.PASSED)


def test_small_primes(backend):
    # (X5, Y5, Z5) = (21, 15, 12) = (1, 0, 2) mod 5 and 2^1 = 2
    v = pell_test(5)
    assert v == Verdict(Outcome.PRIME, Reason.PASSED, 2)
    # (X7, Y7, Z7) = (99, 81, 63) = (1, 4, 0) mod 7, 4 = 2^2, 4 + 16 = -1 mod 7
    assert pell_test(7) == Verdict(Outcome.PRIME, Reason.PASSED, 2)


@pytest.mark.parametrize("n", PSEUDOPRIMES_WITHOUT_FOURTH)
def test_fourth_condition_is_what_rejects(backend, n):
    assert not is_prime_oracle(n)
    assert pell_test_variant(n, drop_quadratic_condition=True).is_prime
    v = pell_test(n)
    assert v.outcome is Outcome.COMPOSITE
    assert v.reason is Reason.COND_QUADRATIC


def test_dropping_a_condition_never_rejects_primes(backend, primes_below_10k):
    for p in primes_below_10k:
        assert pell_test_variant(p, True).is_prime, p


def test_divisible_by_three(backend):
    assert pell_test(21) == Verdict(Outcome.COMPOSITE, Reason.DIVISIBLE_BY_3, None)


@pytest.mark.parametrize("n", [4, 3, 1, -7, 2**64 + 1])
def test_usage_errors(n):
    with pytest.raises(ValueError):
        pell_test(n)


def test_strong_usage():
    assert strong_test(3).is_prime
    with pytest.raises(ValueError):
        strong_test(2)
    with pytest.raises(TypeError):
        strong_test(7.0)


def test_strong_examples(backend):
    assert strong_test(997) == Verdict(Outcome.PRIME, Reason.PASSED, None)
    assert strong_test(341) == Verdict(Outcome.COMPOSITE, Reason.SMALL_FACTOR, None)
    assert is_prime_oracle(65537)
    assert strong_test(65537).is_prime


def test_strong_fermat_stage(backend):
    # 1009 * 1013 has no factor below 1000 and is not a base-2 probable prime
    n = 1009 * 1013
    assert pow(2, n - 1, n) != 1
    assert strong_test(n).reason is Reason.FERMAT_BASE2


def test_strong_rejects_fermat_pseudoprimes(backend):
    # base-2 Fermat pseudoprimes with all factors above 1000
    found = []
    m = 1_000_001
    while len(found) < 5 and m < 50_000_000:
        if pow(2, m - 1, m) == 1 and not is_prime_oracle(m) and all(m % p for p in sieve_upto(997)[1:]):
            found.append(m)
        m += 2
    assert found
    for n in found:
        v = strong_test(n)
        assert v.outcome is Outcome.COMPOSITE
        assert v.reason not in (Reason.SMALL_FACTOR, Reason.FERMAT_BASE2)


def test_sound_on_primes_below_a_million(backend):
    limit = 10**6 if backend.NAME == "c" else 10**5
    for p in sieve_upto(limit)[2:]:
        assert pell_test(p).is_prime, p


def test_criterion_below_2_20(backend):
    bits = 20 if backend.NAME == "c" else 16
    tested, not_found, records = backend.scan_block(5, 1 << bits, 0)
    assert records == []
    assert not_found == 0


def test_strong_and_linear_agree(backend):
    hi = 1 << 22 if backend.NAME == "c" else 1 << 15
    for n in range(5, hi, 2):
        a = backend.run_test(n, 0)[0] == 0
        b = backend.run_test(n, 1)[0] == 0
        assert a == b, n


def test_composite_reasons_are_genuine():
    """Recompute each named failure with the matrix oracle."""
    for n in range(5, 30_000, 2):
        if n % 3 == 0 or is_prime_oracle(n):
            continue
        v = pell_test(n)
        assert v.outcome is Outcome.COMPOSITE
        if v.reason is Reason.NO_NONCUBE_FOUND:
            e = (n - 1) // 3
            assert all(pow(c, e, n) == 1 for c in range(2, n - 1))
            continue
        r, k = v.r_used, n // 3
        x, y, z = matrix_power_vector(r, n, n)
        rk = pow(r, k, n)
        if n % 3 == 2:
            conds = [(Reason.COND_X, x == 1), (Reason.COND_Y, y == 0), (Reason.COND_Z, z == rk)]
        else:
            conds = [
                (Reason.COND_X, x == 1),
                (Reason.COND_Y, y == rk),
                (Reason.COND_Z, z == 0),
                (Reason.COND_QUADRATIC, (y + y * y) % n == n - 1),
            ]
        first_failure = next(reason for reason, ok in conds if not ok)
        assert v.reason is first_failure, n


def test_counter_and_modes(backend):
    c = MulCounter()
    run(7, "linear", c)
    # candidate 2^2 (1), power 7 = 0b111 (2 squarings, 2 steps), r^2 (1), y^2 (1)
    assert c.count == 1 + 2 * 8 + 2 + 1 + 1
    assert run(6189121, "drop-fourth").is_prime
    assert not run(6189121, "strong").is_prime
    with pytest.raises(ValueError):
        run(7, "fast")
