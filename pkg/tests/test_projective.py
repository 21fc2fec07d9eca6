import random

import pytest

from pellcubic.modmath import OddModulus
from pellcubic.oracle import sieve_upto
from pellcubic.paramsearch import find_smallest_noncube
from pellcubic.pellcore import PellTriple, power_of_generator, triple_mul
from pellcubic.projective import (
    InvalidPoint,
    ProjectivePoint,
    canonicalize,
    cube_root,
    enumerate_points,
    group_order,
    identity,
    norm,
    point,
    proj_inverse,
    proj_mul,
    proj_pow,
)

SMALL_PRIMES = [p for p in sieve_upto(200) if p > 3]


def param(p):
    return find_smallest_noncube(OddModulus(p)).value if p % 3 == 1 else 2


def test_norm_examples():
    assert norm(1, 0, 0, 2, 7) == 1
    assert norm(1, 1, 0, 2, 7) == 3
    # p = 5, r = 2: cube root s of 2 is 3 (27 = 2 mod 5); [s^2 : s : 1] has zero norm
    s = cube_root(2, 5)
    assert s == 3
    assert norm(s * s % 5, s, 1, 2, 5) == 0
    with pytest.raises(InvalidPoint):
        ProjectivePoint(s * s, s, 1, 2, 5)


def test_canonicalize_examples():
    assert canonicalize(ProjectivePoint(2, 4, 2, 3, 7)).key() == (1, 2, 1)
    pt = ProjectivePoint(3, 1, 0, 3, 7)
    assert canonicalize(pt).key() == (3, 1, 0)
    # N = r^2 * 5^3 != 0 mod 7 for r = 3
    assert norm(0, 0, 5, 3, 7) != 0
    assert canonicalize(ProjectivePoint(0, 0, 5, 3, 7)).key() == (0, 0, 1)
    c = canonicalize(pt)
    assert canonicalize(c) is c


def test_zero_triple_rejected():
    with pytest.raises(InvalidPoint):
        ProjectivePoint(0, 0, 0, 2, 7)


def test_false_canonical_flag_rejected():
    with pytest.raises(ValueError):
        ProjectivePoint(2, 4, 2, 3, 7, canonical=True)


def test_scalar_multiples_are_equal():
    assert ProjectivePoint(2, 4, 2, 3, 7) == ProjectivePoint(1, 2, 1, 3, 7)
    assert ProjectivePoint(3, 3, 0, 3, 7) == ProjectivePoint(1, 1, 0, 3, 7)
    assert ProjectivePoint(1, 1, 0, 3, 7) != ProjectivePoint(1, 1, 0, 2, 7)


def test_product_examples():
    p, r = 7, 3
    b = point(3, 5, 1, r, p)
    assert proj_mul(identity(r, p), b) == b
    # [x:1:0] times [x^2 : -x : 1] is the identity; x = 1
    assert proj_mul(point(1, 1, 0, r, p), point(1, -1, 1, r, p)) == identity(r, p)
    assert proj_inverse(point(1, 1, 0, r, p)).key() == (1, p - 1, 1)
    assert proj_inverse(identity(r, p)) == identity(r, p)
    with pytest.raises(ValueError):
        proj_mul(point(1, 1, 0, 2, 7), point(1, 1, 0, 3, 7))


def test_seventh_power_in_p7():
    g = point(1, 1, 0, 2, 7)
    assert proj_pow(g, 7) == point(1, 4, 0, 2, 7)
    assert proj_pow(g, 7).key() == (2, 1, 0)  # 4 * 2 = 1 mod 7
    assert power_of_generator(7, 2, 7).components() == (1, 4, 0)


@pytest.mark.parametrize("p, r, size", [(7, 2, 57), (5, 2, 24)])
def test_enumeration_examples(p, r, size):
    pts = enumerate_points(p, r)
    assert len(pts) == size
    assert all(pt.norm() != 0 for pt in pts)


def test_enumeration_contract():
    with pytest.raises(ValueError):
        enumerate_points(13, 1)  # 1 is a cube
    with pytest.raises(ValueError):
        enumerate_points(15, 2)
    with pytest.raises(ValueError):
        enumerate_points(5, 5)


@pytest.mark.parametrize("p", [p for p in SMALL_PRIMES if p < 50])
def test_enumeration_is_exactly_the_nonzero_norm_lines(p):
    r = param(p)
    pts = set(enumerate_points(p, r))
    lines = [(x, y, 1) for x in range(p) for y in range(p)] + [(x, 1, 0) for x in range(p)] + [(1, 0, 0)]
    nonzero = {ProjectivePoint(*t, r, p) for t in lines if norm(*t, r, p)}
    assert pts == nonzero
    assert len(pts) == group_order(p)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_group_laws_exhaustive(p):
    r = param(p)
    pts = enumerate_points(p, r)
    pset = set(pts)
    e = identity(r, p)
    rng = random.Random(p)
    for a in pts:
        assert proj_mul(a, e) == a
        assert proj_mul(a, proj_inverse(a)) == e
    for _ in range(300):
        a, b, c = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        ab = proj_mul(a, b)
        assert ab in pset
        assert ab == proj_mul(b, a)
        assert proj_mul(ab, c) == proj_mul(a, proj_mul(b, c))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_group_laws_random(p):
    r = param(p)
    pts = enumerate_points(p, r)
    pset = set(pts)
    rng = random.Random(1000 + p)
    for _ in range(50):
        a, b, c = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        assert proj_mul(a, b) in pset
        assert proj_mul(proj_mul(a, b), c) == proj_mul(a, proj_mul(b, c))
        assert proj_mul(a, proj_inverse(a)) == identity(r, p)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_generator_order_divides_group_order(p):
    r = param(p)
    assert proj_pow(point(1, 1, 0, r, p), group_order(p)) == identity(r, p)


def test_projective_product_matches_triples():
    rng = random.Random(5)
    checked = 0
    while checked < 10_000:
        p = rng.choice(SMALL_PRIMES)
        r = param(p)
        t1 = [rng.randrange(p) for _ in range(3)]
        t2 = [rng.randrange(p) for _ in range(3)]
        if not norm(*t1, r, p) or not norm(*t2, r, p):
            continue
        prod = triple_mul(PellTriple(*t1, r, p), PellTriple(*t2, r, p))
        want = canonicalize(ProjectivePoint(*prod.components(), r, p))
        assert proj_mul(ProjectivePoint(*t1, r, p), ProjectivePoint(*t2, r, p)).key() == want.key()
        checked += 1


def theorem_failures(p):
    """Names of the key-theorem identities that fail at prime p."""
    k = p // 3
    r = param(p)
    g = point(1, 1, 0, r, p)
    if p % 3 == 1:
        checks = {
            "A1": proj_pow(g, p) == point(1, pow(r, k, p), 0, r, p),
            "A2": proj_pow(g, p * p) == point(1, pow(r, 2 * k, p), 0, r, p),
            "A3": proj_pow(g, p * p + p) == point(1, -1, 1, r, p),
        }
    else:
        checks = {"B": proj_pow(g, p) == point(1, 0, pow(2, k, p), r, p)}
    return [name for name, ok in checks.items() if not ok]


def test_key_theorem_small(primes_below_10k):
    for p in primes_below_10k[:200]:
        assert theorem_failures(p) == [], p


def test_power_of_generator_reduces_to_projective_power():
    for p in SMALL_PRIMES:
        r = param(p)
        g = point(1, 1, 0, r, p)
        for e in (1, 2, 5, p, p + 3, p * p):
            t = power_of_generator(p, r, e).components()
            assert ProjectivePoint(*t, r, p) == proj_pow(g, e)
