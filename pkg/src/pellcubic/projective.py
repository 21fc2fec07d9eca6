"""Projective points [x:y:z] over F_p under the r-twisted product.

Validation layer only: small primes, exhaustive enumeration, and direct
checks of the group structure. Points always compare by canonical form,
so a scalar multiple of a point is the same point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import is_prime_oracle

ENUMERATION_LIMIT = 10_000


class InvalidPoint(ValueError):
    """Triple with zero norm (including the all-zero triple)."""


def norm(x: int, y: int, z: int, r: int, p: int) -> int:
    """x^3 - 3rxyz + r y^3 + r^2 z^3 mod p."""
    return (x**3 - 3 * r * x * y * z + r * y**3 + r * r * z**3) % p


def _canonical(x: int, y: int, z: int, p: int) -> tuple[int, int, int]:
    if z:
        s = pow(z, -1, p)
    elif y:
        s = pow(y, -1, p)
    elif x:
        s = pow(x, -1, p)
    else:
        raise InvalidPoint("the zero triple is not a projective point")
    return x * s % p, y * s % p, z * s % p


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    x: int
    y: int
    z: int
    r: int
    p: int
    canonical: bool = False

    def __post_init__(self):
        p = self.p
        object.__setattr__(self, "x", self.x % p)
        object.__setattr__(self, "y", self.y % p)
        object.__setattr__(self, "z", self.z % p)
        object.__setattr__(self, "r", self.r % p)
        if norm(self.x, self.y, self.z, self.r, p) == 0:
            raise InvalidPoint(f"[{self.x}:{self.y}:{self.z}] has zero norm for r={self.r}, p={p}")
        if self.canonical and not (
            self.z == 1 or (self.z == 0 and self.y == 1) or (self.x, self.y, self.z) == (1, 0, 0)
        ):
            raise ValueError(f"[{self.x}:{self.y}:{self.z}] is flagged canonical but is not")

    def key(self) -> tuple[int, int, int]:
        """Canonical coordinates."""
        if self.canonical:
            return self.x, self.y, self.z
        return _canonical(self.x, self.y, self.z, self.p)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return (self.p, self.r) == (other.p, other.r) and self.key() == other.key()

    def __hash__(self):
        return hash((self.p, self.r, self.key()))

    def __repr__(self):
        x, y, z = self.key()
        return f"[{x}:{y}:{z}] (r={self.r}, p={self.p})"

    def norm(self) -> int:
        return norm(self.x, self.y, self.z, self.r, self.p)

    def __mul__(self, other):
        return proj_mul(self, other)

    def __pow__(self, e):
        return proj_pow(self, e)


def point(x: int, y: int, z: int, r: int, p: int) -> ProjectivePoint:
    """Build a point and return it in canonical form."""
    return canonicalize(ProjectivePoint(x, y, z, r, p))


def canonicalize(pt: ProjectivePoint) -> ProjectivePoint:
    """Scale to [.:.:1], [.:1:0] or [1:0:0]."""
    if pt.canonical:
        return pt
    x, y, z = _canonical(pt.x, pt.y, pt.z, pt.p)
    return ProjectivePoint(x, y, z, pt.r, pt.p, canonical=True)


def identity(r: int, p: int) -> ProjectivePoint:
    return ProjectivePoint(1, 0, 0, r, p, canonical=True)


def proj_mul(a: ProjectivePoint, b: ProjectivePoint) -> ProjectivePoint:
    if (a.p, a.r) != (b.p, b.r):
        raise ValueError(f"cannot multiply points with (p, r) = {(a.p, a.r)} and {(b.p, b.r)}")
    p, r = a.p, a.r
    x1, y1, z1 = a.x, a.y, a.z
    x2, y2, z2 = b.x, b.y, b.z
    return point(
        x1 * x2 + r * (y1 * z2 + z1 * y2),
        x1 * y2 + y1 * x2 + r * z1 * z2,
        x1 * z2 + y1 * y2 + z1 * x2,
        r,
        p,
    )


def proj_inverse(a: ProjectivePoint) -> ProjectivePoint:
    x, y, z, r = a.x, a.y, a.z, a.r
    return point(x * x - r * y * z, r * z * z - x * y, y * y - x * z, r, a.p)


def proj_pow(a: ProjectivePoint, e: int) -> ProjectivePoint:
    if e < 0:
        return proj_pow(proj_inverse(a), -e)
    result = identity(a.r, a.p)
    base = canonicalize(a)
    while e:
        if e & 1:
            result = proj_mul(result, base)
        base = proj_mul(base, base)
        e >>= 1
    return result


def cube_root(r: int, p: int) -> int:
    """The unique cube root of r in F_p for p = 2 (mod 3), by brute force."""
    r %= p
    for s in range(p):
        if s * s * s % p == r:
            return s
    raise ValueError(f"{r} has no cube root mod {p}")


def group_order(p: int) -> int:
    return p * p + p + 1 if p % 3 == 1 else p * p - 1


def enumerate_points(p: int, r: int) -> list[ProjectivePoint]:
    """Every canonical point of the group for prime p > 3.

    For p = 1 (mod 3), r must be a non-cube; then every line
    representative is a point. For p = 2 (mod 3), the points whose norm
    vanishes (built from the cube root s of r) are left out.
    """
    if not 3 < p < ENUMERATION_LIMIT or not is_prime_oracle(p):
        raise ValueError(f"p must be a prime in (3, {ENUMERATION_LIMIT}), got {p}")
    r %= p
    if r == 0:
        raise ValueError("r must be nonzero mod p")
    if p % 3 == 1 and pow(r, (p - 1) // 3, p) == 1:
        raise ValueError(f"r={r} is a cube mod {p}; a non-cube is required")
    reps = [(x, y, 1) for x in range(p) for y in range(p)]
    reps += [(x, 1, 0) for x in range(p)]
    reps.append((1, 0, 0))
    if p % 3 == 2:
        s = cube_root(r, p)
        excluded = {(-(m + s) * s % p, m, 1) for m in range(p)}
        excluded.add((s * s % p, s, 1))
        excluded.add((-s % p, 1, 0))
        reps = [t for t in reps if t not in excluded]
    return [ProjectivePoint(x, y, z, r, p, canonical=True) for x, y, z in reps]
