"""Brahmagupta-product algebra on the conic x^2 - D*y^2 = Q over Z_n.

Points are (x, y) tuples of ints.  The Brahmagupta product

    (x1, y1) * (x2, y2) = (x1*x2 + D*y1*y2, x1*y2 + x2*y1)

multiplies norms (norm = x^2 - D*y^2), so norm-1 points form a group with
identity (1, 0) and inverse (x, -y).  General-norm points are allowed
everywhere; tests that need norm 1 enforce it themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .modarith import Factor

__all__ = [
    "ConicParams",
    "brahmagupta",
    "conic_norm",
    "conic_pow",
    "conic_to_lucas",
    "lucas_to_conic",
    "rational_point",
]

Point = tuple[int, int]


@dataclass(frozen=True)
class ConicParams:
    """A conic coefficient D together with a base point (x, y).

    D and the coordinates are stored as given (they may be negative or
    unreduced); everything is reduced per modulus when used.
    """

    D: int
    x: int
    y: int

    def point(self, n: int) -> Point:
        return (self.x % n, self.y % n)

    def norm_mod(self, n: int) -> int:
        """x^2 - D*y^2 mod n (the norm Q of the base point)."""
        return (self.x * self.x - self.D * self.y * self.y) % n


def brahmagupta(p1: Point, p2: Point, D: int, n: int) -> Point:
    """Brahmagupta product of two points, reduced mod n."""
    x1, y1 = p1
    x2, y2 = p2
    return ((x1 * x2 + D * y1 * y2) % n, (x1 * y2 + x2 * y1) % n)


def conic_pow(p: Point, k: int, D: int, n: int) -> Point:
    """k-fold Brahmagupta power of p mod n; k = 0 gives the identity (1, 0)."""
    if k < 0:
        raise ValueError("conic exponent must be non-negative")
    x, y = 1 % n, 0
    bx, by = p[0] % n, p[1] % n
    D %= n
    while k:
        if k & 1:
            x, y = (x * bx + D * y * by) % n, (x * by + y * bx) % n
        k >>= 1
        if k:
            bx, by = (bx * bx + D * by * by) % n, 2 * bx * by % n
    return (x, y)


def conic_norm(p: Point, D: int, n: int) -> int:
    """x^2 - D*y^2 mod n."""
    x, y = p
    return (x * x - D * y * y) % n


def rational_point(a: int, D: int, n: int) -> Point | Factor:
    """The norm-1 point ((a^2+D)/(a^2-D), 2a/(a^2-D)) mod n.

    Requires a^2 - D invertible mod n.  Returns Factor(g) with the
    nontrivial g = gcd(a^2 - D, n) otherwise; Factor(n) means the
    denominator vanishes mod n (the parametrization's point at infinity),
    which has no residue representative.
    """
    den = (a * a - D) % n
    g = gcd(den, n)
    if g != 1:
        return Factor(g if g else n)
    inv = pow(den, -1, n)
    return ((a * a + D) * inv % n, 2 * a * inv % n)


def lucas_to_conic(P: int, n: int) -> ConicParams:
    """Conic parameters equivalent to Lucas parameters (P, Q=1) mod n.

    D = P^2 - 4 with base point (P/2, 1/2); its norm is 1 mod any odd n
    since (P/2)^2 - (P^2-4)/4 = 1.
    """
    inv2 = (n + 1) // 2  # inverse of 2 for odd n
    return ConicParams(P * P - 4, P * inv2 % n, inv2)


def conic_to_lucas(params: ConicParams, n: int) -> tuple[int, int] | Factor:
    """Lucas parameters (P, Q) mod n equivalent to a conic base point.

    P = 2x and Q = x^2 - D*y^2 (the norm; 1 for norm-1 points).  The
    underlying change of basis needs y invertible, so a nontrivial
    gcd(y, n) is returned as Factor evidence instead.
    """
    g = gcd(params.y % n, n)
    if g != 1:
        return Factor(g)
    return (2 * params.x % n, params.norm_mod(n))
