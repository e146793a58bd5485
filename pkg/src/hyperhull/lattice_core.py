"""Exact integer primitives shared by every other module.

All inputs are Python ints, so arithmetic never overflows; the explicit
bound below exists to keep results reproducible against fixed-width
implementations and to reject inputs that the rest of the toolkit was
never validated for.
"""

from __future__ import annotations

import math
from typing import NamedTuple

MAX_N = 10**12
MAX_COORD = 2 * 10**12


class OverflowBoundError(ValueError):
    """Raised when an input exceeds the safe coordinate bound."""


class LatticePoint(NamedTuple):
    x: int
    y: int


class PrimitiveVector(NamedTuple):
    a: int
    b: int


def check_n(n: int, limit: int = MAX_N) -> int:
    if n < 1:
        raise ValueError(f"N must be a positive integer, got {n}")
    if n > limit:
        raise OverflowBoundError(f"N={n} exceeds the safe bound {limit}")
    return n


def check_coords(*points) -> None:
    for p in points:
        if abs(p[0]) > MAX_COORD or abs(p[1]) > MAX_COORD:
            raise OverflowBoundError(f"coordinate of {tuple(p)} exceeds {MAX_COORD}")


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ceil_div(n: int, d: int) -> int:
    """Return the ceiling of n/d without going through floats."""
    if d < 1:
        raise ValueError("divisor must be positive")
    return -(-n // d)


def icbrt(n: int) -> int:
    """Largest integer c with c**3 <= n, by binary search on exact cubes."""
    if n < 0:
        raise ValueError("icbrt of a negative number")
    lo, hi = 0, 1
    while hi**3 <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**3 <= n:
            lo = mid
        else:
            hi = mid
    return lo


def cross(o, p, q) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def orient(o, p, q) -> int:
    """Sign of (p - o) x (q - o): +1 counterclockwise, -1 clockwise, 0 collinear."""
    check_coords(o, p, q)
    c = cross(o, p, q)
    return (c > 0) - (c < 0)


def is_primitive(a: int, b: int) -> bool:
    if a < 1 or b < 1:
        raise ValueError("is_primitive expects positive entries")
    return math.gcd(a, b) == 1


def primitive_direction(p1, p2) -> PrimitiveVector:
    """Edge direction (a, -b) of p1 -> p2 reduced to lowest terms, stored as (a, b)."""
    a = p2[0] - p1[0]
    b = p1[1] - p2[1]
    if a <= 0 or b <= 0:
        raise ValueError(f"edge {tuple(p1)} -> {tuple(p2)} is not strictly decreasing")
    g = math.gcd(a, b)
    return PrimitiveVector(a // g, b // g)
