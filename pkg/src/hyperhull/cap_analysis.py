"""Geometry of the caps cut from xy >= N by the edges of its integer hull.

Line-hyperbola intersections, tangency, curvature, per-edge cap parameters,
lattice width of caps, tangent offsets and the symmetric lens used in the
Minkowski argument for the narrow-strip bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .lattice_core import PrimitiveVector, primitive_direction

HURKENS_BOUND = 1 + 2 * math.sqrt(3)
MAX_CAP_COLUMNS = 10**7
SLACK = 1e-6

# band for half-chord / rho, fixed once from the extremes at N = 10^4
# (1.0000576 and 1.0150518) halved and doubled; see scripts/calibrate_bands.py
CLAIM_RHO_BAND = (0.5, 2.031)


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class CapGeometry:
    p: PrimitiveVector
    k_edge: int
    k_tan: float
    h: float
    x_p: float
    r: float
    rho: float
    z1: Point
    z2: Point
    z0: Point

    @property
    def norm_p(self) -> float:
        return math.hypot(self.p.a, self.p.b)

    @property
    def half_chord(self) -> float:
        return math.hypot(self.z2.x - self.z0.x, self.z2.y - self.z0.y)


class WidthResult(NamedTuple):
    width: float
    direction: tuple[int, int]


class StripChord(NamedTuple):
    length: float
    ratio: float
    ratio_ok: bool


class TangentOffset(NamedTuple):
    kappa: float
    lam: float
    diff: float


def line_hyperbola_x(a: int, b: int, k: float, level: float) -> tuple[float, float]:
    """Abscissae x1 <= x2 where bx + ay = k meets xy = level."""
    if isinstance(k, int) and isinstance(level, int):
        disc = k * k - 4 * a * b * level
        scale = k * k
    else:
        disc = k * k - 4.0 * a * b * level
        scale = k * k
    if disc < 0:
        if disc < -1e-12 * scale:
            raise ValueError(f"line {b}x+{a}y={k} misses xy={level}")
        disc = 0
    big = k + math.sqrt(disc)
    # x1 * x2 = a*level/b; the product form avoids cancellation in x1
    x1, x2 = 2 * a * level / big, big / (2 * b)
    return (x1, x2) if x1 <= x2 else (x2, x1)


def tangent_x(a: int, b: int, level: float) -> float:
    return math.sqrt(level * a / b)


def strip_chord(a: int, b: int, N: int, Delta: float) -> StripChord:
    """Chord of the tangent to xy = N + Delta cut by xy = N, and the ratio check x2/x1 < 1 + 2N^(-1/3)."""
    length = 2 * math.sqrt(Delta * a / b)
    x1, x2 = line_hyperbola_x(a, b, math.sqrt(4 * a * b * (N + Delta)), N)
    ratio = x2 / x1
    return StripChord(length, ratio, ratio < 1 + 2 * N ** (-1 / 3))


def curvature_radius(x: float, N: int) -> float:
    if x <= 0:
        raise ValueError("x must be positive")
    return (x**4 + float(N) ** 2) ** 1.5 / (2 * N * x**3)


def curvature_band_ok(x: float, N: int) -> bool:
    """x^3/(2N) <= r <= sqrt(2) x^3/N, meaningful for x >= sqrt(N)."""
    r = curvature_radius(x, N)
    base = x**3 / N
    return base / 2 * (1 - 1e-12) <= r <= math.sqrt(2) * base * (1 + 1e-12)


def cap_from_edge(p1, p2, N: int) -> CapGeometry:
    p = primitive_direction(p1, p2)
    a, b = p
    k = b * p1[0] + a * p1[1]
    gap = k * k - 4 * a * b * N
    if gap < 0:
        raise ValueError(f"edge {tuple(p1)}-{tuple(p2)} lies below the tangent line")
    k_tan = math.sqrt(4 * a * b * N)
    norm = math.hypot(a, b)
    h = gap / ((k + k_tan) * norm)
    x_p = tangent_x(a, b, N)
    r = curvature_radius(x_p, N)
    rho = math.sqrt(h * (2 * r - h))
    x1, x2 = line_hyperbola_x(a, b, k, N)
    z1 = Point(x1, N / x1)
    z2 = Point(x2, N / x2)
    z0 = Point((x1 + x2) / 2, (z1.y + z2.y) / 2)
    return CapGeometry(p, k, k_tan, h, x_p, r, rho, z1, z2, z0)


def cap_support_values(cap: CapGeometry, N: int, q) -> list[float]:
    """Candidate extreme values of q.z over the cap: both chord ends and the arc's critical point."""
    u, v = q
    vals = [u * cap.z1.x + v * cap.z1.y, u * cap.z2.x + v * cap.z2.y]
    if u * v > 0:
        xs = math.sqrt(v * N / u)
        if cap.z1.x < xs < cap.z2.x:
            vals.append(u * xs + v * N / xs)
    return vals


def cap_width_along(cap: CapGeometry, N: int, q) -> float:
    vals = cap_support_values(cap, N, q)
    return max(vals) - min(vals)


def cap_sample_points(cap: CapGeometry, N: int, m: int = 65) -> list[Point]:
    xs = np.linspace(cap.z1.x, cap.z2.x, m + 2)[1:-1]
    return [cap.z1, cap.z2] + [Point(float(x), N / float(x)) for x in xs]


def _int_argmin(g, lo: int, hi: int) -> int:
    # integer ternary search for a convex function on [lo, hi]
    while hi - lo > 2:
        m1 = lo + (hi - lo) // 3
        m2 = hi - (hi - lo) // 3
        if g(m1) <= g(m2):
            hi = m2
        else:
            lo = m1
    return min(range(lo, hi + 1), key=g)


def reduce_width(norm, max_steps: int = 500) -> WidthResult:
    """Shortest nonzero integer vector for a planar norm, by generalized Gauss reduction.

    A basis with norm(b1) <= norm(b2) <= norm(b2 - mu*b1) for every integer mu
    has b1 as a shortest vector, for any norm on the plane.
    """
    b1, b2 = (1, 0), (0, 1)
    f1, f2 = norm(b1), norm(b2)
    if f1 > f2:
        b1, b2, f1, f2 = b2, b1, f2, f1
    for _ in range(max_steps):
        if f1 == 0:
            break
        bound = int(2 * f2 / f1) + 2
        g = lambda mu: norm((b2[0] - mu * b1[0], b2[1] - mu * b1[1]))  # noqa: E731
        mu = _int_argmin(g, -bound, bound)
        cand = (b2[0] - mu * b1[0], b2[1] - mu * b1[1])
        fc = g(mu)
        if fc < f1:
            b1, b2, f1, f2 = cand, b1, fc, f1
        else:
            b2, f2 = cand, fc
            break
    else:
        raise RuntimeError("lattice width reduction did not converge")
    q = b1 if (b1[0], b1[1]) > (0, 0) else (-b1[0], -b1[1])
    return WidthResult(f1, q)


def lattice_width(points) -> WidthResult:
    """min over primitive q of (max q.z - min q.z) over the point set."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 2:
        raise ValueError("need at least two points")

    def norm(q):
        proj = pts @ np.array(q, dtype=np.float64)
        return float(proj.max() - proj.min())

    return reduce_width(norm)


def cap_lattice_width(cap: CapGeometry, N: int) -> WidthResult:
    """Lattice width of the true cap (chord plus arc), using closed-form support values."""
    return reduce_width(lambda q: cap_width_along(cap, N, q))


def cap_is_empty(cap: CapGeometry, N: int) -> bool:
    """No lattice point with xy > N strictly below the edge line bx + ay = k."""
    a, b = cap.p
    k = cap.k_edge
    lo = max(1, math.floor(cap.z1.x))
    hi = math.ceil(cap.z2.x)
    if hi - lo > MAX_CAP_COLUMNS:
        raise ValueError(f"cap spans {hi - lo} columns, more than {MAX_CAP_COLUMNS}")
    for x in range(lo, hi + 1):
        if a * (N // x + 1) + b * x < k:
            return False
    return True


def tangent_offset(a: int, b: int, N: int) -> TangentOffset:
    """Offsets of the tangent line and of the line whose chord projects to length a."""
    kappa = math.sqrt(4 * a * b * N)
    lam = math.sqrt(4 * a * b * N + (a * b) ** 2)
    return TangentOffset(kappa, lam, (a * b) ** 2 / (lam + kappa))


def _atanh_minus_id(s: float) -> float:
    if s > 0.05:
        return math.atanh(s) - s
    total, term, j = 0.0, s**3, 3
    s2 = s * s
    while term > 1e-20 * s:
        total += term / j
        term *= s2
        j += 2
    return total


def minkowski_body_area(v, N: int) -> float:
    """Area of {uw >= N} intersected with its point reflection through v.

    Per column u the lens spans w in [N/u, 2v_y - N/(2v_x - u)]; integrating
    between the roots u = v_x (1 -+ s), s = sqrt(1 - N/(v_x v_y)), gives
    4 (P s - N artanh s) with P = v_x v_y.
    """
    vx, vy = v
    P = vx * vy
    if P <= N:
        return 0.0
    s = math.sqrt((P - N) / P)
    return 4 * (s * (P - N) - N * _atanh_minus_id(s))
