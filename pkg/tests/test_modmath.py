import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pellcubic.modmath import (
    MAX_MODULUS,
    ModulusMismatch,
    MulCounter,
    OddModulus,
    Residue,
    addmod,
    mulmod,
    negmod,
    powmod,
    submod,
)

# odd, prime to 3, within [2**63, 2**64)
big_moduli = st.builds(
    lambda j, s: 6 * j + s,
    st.integers(min_value=2**63 // 6 + 1, max_value=MAX_MODULUS // 6 - 1),
    st.sampled_from([1, 5]),
)


def test_odd_modulus_fields():
    m = OddModulus(13)
    assert (m.k, m.residue_class) == (4, 1)
    m = OddModulus(17)
    assert (m.k, m.residue_class) == (5, 2)
    assert 17 == 3 * m.k + m.residue_class


@pytest.mark.parametrize("n", [1, 3, 4, 9, 15, 2**64, 2**64 + 1])
def test_odd_modulus_rejects(n):
    with pytest.raises(ValueError):
        OddModulus(n)


def test_residue_must_be_reduced():
    with pytest.raises(ValueError):
        Residue(13, OddModulus(13))
    assert OddModulus(13)(-1).value == 12


def test_trivial_examples(backend):
    m = OddModulus(1_000_003)
    x = m(123_456)
    assert mulmod(m(0), x).value == 0
    assert mulmod(m(1), x) == x
    assert powmod(x, 0).value == 1
    assert addmod(m(m.n - 1), m(1)).value == 0
    assert submod(m(0), m(1)).value == m.n - 1
    assert negmod(m(0)).value == 0
    assert negmod(m(5)).value == m.n - 5


def test_wide_product(backend):
    # reference value from exact integer arithmetic: (2^32+1)^2 mod (2^33+5)
    m = OddModulus(2**33 + 5)
    a = m(2**32 + 1)
    assert mulmod(a, a).value == 6442450950


def test_small_powers(backend):
    assert powmod(OddModulus(7)(2), 2).value == 4
    # 341 = 11 * 31 is a base-2 Fermat pseudoprime; 340 repeated doublings give 1
    assert powmod(OddModulus(341)(2), 340).value == 1


def test_mismatch():
    with pytest.raises(ModulusMismatch):
        mulmod(OddModulus(7)(1), OddModulus(11)(1))
    with pytest.raises(ModulusMismatch):
        addmod(OddModulus(7)(1), OddModulus(11)(1))


def test_counter_counts_only_products(backend):
    m = OddModulus(101)
    c = MulCounter()
    mulmod(m(3), m(4), c)
    mulmod(m(3), m(4), c)
    addmod(m(3), m(4))
    submod(m(3), m(4))
    negmod(m(3))
    assert c.count == 2


def test_powmod_counter_matches_binary_length(backend):
    m = OddModulus(1_000_003)
    c = MulCounter()
    e = 0b1011001
    powmod(m(2), e, c)
    assert c.count == (e.bit_length() - 1) + (bin(e).count("1") - 1)


def test_powmod_huge_exponent():
    m = OddModulus(1_000_003)
    e = 2**80 + 12345
    assert powmod(m(7), e).value == pow(7, e, m.n)


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(n=big_moduli, a=st.integers(min_value=0), b=st.integers(min_value=0), c=st.integers(min_value=0))
def test_ring_laws_near_bound(backend, n, a, b, c):
    m = OddModulus(n)
    a, b, c = m(a), m(b), m(c)
    assert mulmod(mulmod(a, b), c) == mulmod(a, mulmod(b, c))
    assert mulmod(a, b).value == a.value * b.value % n
    assert addmod(a, b) == addmod(b, a)
    assert addmod(a, b).value == (a.value + b.value) % n
    assert submod(a, b).value == (a.value - b.value) % n
    assert mulmod(a, addmod(b, c)) == addmod(mulmod(a, b), mulmod(a, c))


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(
    n=big_moduli,
    b=st.integers(min_value=0),
    e1=st.integers(min_value=0, max_value=2**64),
    e2=st.integers(min_value=0, max_value=2**64),
)
def test_power_law(backend, n, b, e1, e2):
    m = OddModulus(n)
    b = m(b)
    assert powmod(b, e1 + e2) == mulmod(powmod(b, e1), powmod(b, e2))
    assert powmod(b, e1).value == pow(b.value, e1, n)
