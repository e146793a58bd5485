"""Exact lattice polygon areas and cancellation-safe areas under chords.

The missed area A_N is of order N^(1/3) log N while Area(Q_N) is of order
N^(4/3), so the main path sums small per-edge caps in closed form and only
uses the global difference as a cross-check.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .hull_chain import chain_vertices, hull_params, q_polygon
from .lattice_core import ceil_div, check_coords

EPS = sys.float_info.epsilon
DUAL_PATH_MAX_N = 10**9
DUAL_PATH_RTOL = 1e-6
MAX_PICK_CELLS = 10**8


class SelfCheckError(RuntimeError):
    """Two independent evaluations of the same quantity disagree."""


@dataclass(frozen=True)
class AreaResult:
    value: float
    abs_error_bound: float

    def __add__(self, other: "AreaResult") -> "AreaResult":
        v = self.value + other.value
        return AreaResult(v, self.abs_error_bound + other.abs_error_bound + 2 * EPS * abs(v))


ZERO = AreaResult(0.0, 0.0)


def shoelace_area2(polygon) -> int:
    """Twice the signed-free area of a simple lattice polygon."""
    if len(polygon) < 3:
        raise ValueError("degenerate polygon (< 3 vertices)")
    check_coords(*polygon)
    s = 0
    n = len(polygon)
    for i in range(n):
        x1, y1 = polygon[i]
        x2, y2 = polygon[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return abs(s)


def boundary_count(polygon) -> int:
    n = len(polygon)
    return sum(
        math.gcd(polygon[(i + 1) % n][0] - polygon[i][0], polygon[(i + 1) % n][1] - polygon[i][1])
        for i in range(n)
    )


def _y_at(p, q, x: int, upper: bool) -> int:
    # floor (upper) or ceil (lower) of the segment's y at integer abscissa x
    (x1, y1), (x2, y2) = p, q
    num = y1 * (x2 - x1) + (y2 - y1) * (x - x1)
    den = x2 - x1
    return num // den if upper else -(-num // den)


def _column_total(polygon) -> int:
    """Lattice points in a closed convex polygon, counted column by column."""
    pts = list(polygon)
    if shoelace_signed(pts) < 0:
        pts = pts[::-1]
    n = len(pts)
    lb = min(range(n), key=lambda i: (pts[i][0], pts[i][1]))
    lt = min(range(n), key=lambda i: (pts[i][0], -pts[i][1]))
    rb = max(range(n), key=lambda i: (pts[i][0], -pts[i][1]))
    rt = max(range(n), key=lambda i: (pts[i][0], pts[i][1]))
    # counterclockwise: bottom-left -> bottom-right is the lower boundary
    lower = [pts[(lb + k) % n] for k in range((rb - lb) % n + 1)]
    upper = [pts[(rt + k) % n] for k in range((lt - rt) % n + 1)][::-1]
    x_min, x_max = pts[lb][0], pts[rb][0]
    total = (pts[lt][1] - pts[lb][1] + 1) + (pts[rt][1] - pts[rb][1] + 1)
    li = ui = 0
    for x in range(x_min + 1, x_max):
        while lower[li + 1][0] < x:
            li += 1
        while upper[ui + 1][0] < x:
            ui += 1
        lo = _y_at(lower[li], lower[li + 1], x, upper=False)
        hi = _y_at(upper[ui], upper[ui + 1], x, upper=True)
        if hi >= lo:
            total += hi - lo + 1
    return total


def shoelace_signed(polygon) -> int:
    n = len(polygon)
    return sum(
        polygon[i][0] * polygon[(i + 1) % n][1] - polygon[(i + 1) % n][0] * polygon[i][1]
        for i in range(n)
    )


def pick_counts(polygon, max_cells: int = MAX_PICK_CELLS) -> tuple[int, int]:
    """Interior and boundary lattice-point counts of a convex lattice polygon.

    The interior count comes from a column-by-column enumeration and is
    independent of the area; Pick's theorem then reads 2A = 2I + B - 2.
    """
    if len(polygon) < 3:
        raise ValueError("degenerate polygon (< 3 vertices)")
    xs = [p[0] for p in polygon]
    ys = [p[1] for p in polygon]
    cells = (max(xs) - min(xs) + 1) * (max(ys) - min(ys) + 1)
    if cells > max_cells:
        raise ValueError(f"bounding box of {cells} cells exceeds {max_cells}")
    b = boundary_count(polygon)
    return _column_total(polygon) - b, b


def edge_cap_area(p1, p2, N: int) -> AreaResult:
    """Area between the chord p1-p2 and the arc of xy = N below it."""
    (x1, y1), (x2, y2) = p1, p2
    if x2 <= x1:
        raise ValueError("edge must run left to right")
    dx = x2 - x1
    trap = dx * (y1 + y2) / 2
    log_term = N * math.log1p(dx / x1)
    value = trap - log_term
    bound = 2 * EPS * (abs(trap) + 3 * abs(log_term) + abs(value))
    if value < -bound:
        raise ValueError(f"chord {tuple(p1)}-{tuple(p2)} dips below xy={N}")
    return AreaResult(value, bound)


def _partial_cap(p1, p2, N: int, lo: float, hi: float) -> AreaResult:
    (x1, y1), (x2, y2) = p1, p2
    a, b = max(lo, x1), min(hi, x2)
    if b <= a:
        return ZERO
    if a == x1 and b == x2:
        return edge_cap_area(p1, p2, N)
    slope = (y2 - y1) / (x2 - x1)
    ya = y1 + slope * (a - x1)
    yb = y1 + slope * (b - x1)
    trap = (b - a) * (ya + yb) / 2
    log_term = N * math.log1p((b - a) / a)
    value = trap - log_term
    bound = 2 * EPS * (3 * abs(trap) + 3 * abs(log_term) + abs(value))
    return AreaResult(max(value, 0.0), bound)


def area_Q(N: int) -> AreaResult:
    """Area of H_N cut to the square [1, N2]^2."""
    if N < 8:
        raise ValueError(f"area_Q needs N >= 8, got {N}")
    n2 = hull_params(N).N2
    exact_part = n2 * n2 - N
    log_term = N * math.log(n2 * n2 / N)
    value = exact_part - log_term
    return AreaResult(value, 2 * EPS * (abs(exact_part) + 3 * abs(log_term) + abs(value)))


def corner_sliver(N: int) -> AreaResult:
    """Area of Q_N left of the polygon: x from N/N2 to ceil(N/N2), below y = N2."""
    n2 = hull_params(N).N2
    x0 = ceil_div(N, n2)
    gap = n2 * x0 - N
    if gap == 0:
        return ZERO
    log_term = N * math.log1p(gap / N)
    value = gap - log_term
    return AreaResult(value, 2 * EPS * (gap + 3 * log_term + abs(value)))


def missed_area_Q_caps(N: int) -> AreaResult:
    poly = q_polygon(N)
    total = corner_sliver(N)
    chain = poly.lower_chain()
    for p1, p2 in zip(chain, chain[1:]):
        total = total + edge_cap_area(p1, p2, N)
    return total


def missed_area_Q_difference(N: int) -> AreaResult:
    q = area_Q(N)
    poly_area = shoelace_area2(q_polygon(N).vertices) / 2
    value = q.value - poly_area
    return AreaResult(value, q.abs_error_bound + 2 * EPS * (poly_area + abs(value)))


def missed_area_Q(N: int, check: bool | None = None) -> AreaResult:
    """A_N = Area(Q_N minus I(Q_N)) as a sum of per-edge caps.

    With ``check`` (default: N <= 10^9) the global difference
    Area(Q_N) - Area(I(Q_N)) is evaluated too and a disagreement beyond
    10^-6 relative raises SelfCheckError.

    The right-hand sliver x >= N2, y in [N/N2, ceil(N/N2)] needs no separate
    term: it lies under the last chain edge and is already inside the caps.
    """
    caps = missed_area_Q_caps(N)
    if check is None:
        check = N <= DUAL_PATH_MAX_N
    if check:
        diff = missed_area_Q_difference(N)
        tol = max(caps.abs_error_bound + diff.abs_error_bound, DUAL_PATH_RTOL * max(1.0, caps.value))
        if abs(caps.value - diff.value) > tol:
            raise SelfCheckError(
                f"A_N paths disagree at N={N}: caps={caps.value!r} difference={diff.value!r}"
            )
    return caps


def missed_area_range(N: int, x_lo: float, x_hi: float, chain=None) -> AreaResult:
    """Area between the chain of I(H_N) and xy = N over x in [x_lo, x_hi]."""
    if not (1 <= x_lo <= x_hi <= N):
        raise ValueError(f"range [{x_lo}, {x_hi}] outside [1, {N}]")
    if x_lo == x_hi:
        return ZERO
    verts = (chain or chain_vertices(N)).vertices
    total = ZERO
    for p1, p2 in zip(verts, verts[1:]):
        if p2[0] <= x_lo or p1[0] >= x_hi:
            continue
        total = total + _partial_cap(p1, p2, N, x_lo, x_hi)
    return total
