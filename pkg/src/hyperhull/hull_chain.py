"""Vertex chain of the integer hull of {xy >= N} and of its trimmed square part."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .lattice_core import LatticePoint, ceil_div, check_n, icbrt


@dataclass(frozen=True)
class HullParams:
    N: int
    N1: int
    N2: int
    Delta: float


@dataclass(frozen=True)
class HullChain:
    N: int
    vertices: list[LatticePoint]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class QHullPolygon:
    """conv of the lattice points of H_N inside [1, N2]^2, counterclockwise.

    The first vertex is the top-left point (ceil(N/N2), N2); the last two are
    (N2, ceil(N/N2)) and the corner (N2, N2).
    """

    N: int
    vertices: list[LatticePoint]

    def __len__(self) -> int:
        return len(self.vertices)

    def lower_chain(self) -> list[LatticePoint]:
        return self.vertices[:-1]


@dataclass
class StripReport:
    N: int
    bound: float
    excess: list[int] = field(default_factory=list)
    passed: list[bool] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.passed)


def hull_params(N: int) -> HullParams:
    check_n(N)
    n1 = icbrt(N)
    return HullParams(N=N, N1=n1, N2=ceil_div(N, n1), Delta=0.5 * N ** (1 / 3))


def candidate_points(N: int) -> list[LatticePoint]:
    """Points (x, ceil(N/x)) for x <= sqrt(N) and their mirrors, sorted by x.

    Every vertex of the hull is among them: a lattice point with both
    coordinates above isqrt(N) is either dominated or lies on a segment
    between two candidates.
    """
    check_n(N)
    return [LatticePoint(x, y) for x, y in zip(*_candidate_columns(N))]


def _candidate_columns(N: int) -> tuple[list[int], list[int]]:
    s = math.isqrt(N)
    xs = list(range(1, s + 1))
    ys = [-(-N // x) for x in xs]
    ry = list(range(s, 0, -1))
    rx = [-(-N // y) for y in ry]
    if rx[0] == xs[-1] and ry[0] == ys[-1]:
        rx, ry = rx[1:], ry[1:]
    return xs + rx, ys + ry


def _lower_left_chain(xs: list[int], ys: list[int]) -> list[LatticePoint]:
    # points sorted by x ascending / y descending; keep strict right turns only
    hx: list[int] = []
    hy: list[int] = []
    m = 0
    for px, py in zip(xs, ys):
        while m >= 2:
            ox = hx[m - 2]
            oy = hy[m - 2]
            if (hx[m - 1] - ox) * (py - oy) <= (hy[m - 1] - oy) * (px - ox):
                hx.pop()
                hy.pop()
                m -= 1
            else:
                break
        hx.append(px)
        hy.append(py)
        m += 1
    return [LatticePoint(x, y) for x, y in zip(hx, hy)]


def chain_vertices(N: int) -> HullChain:
    check_n(N)
    return HullChain(N, _lower_left_chain(*_candidate_columns(N)))


def f0_H(N: int) -> int:
    return len(chain_vertices(N).vertices)


def _convex_hull(points: list[LatticePoint]) -> list[LatticePoint]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                o, q = out[-2], out[-1]
                if (q[0] - o[0]) * (p[1] - o[1]) - (q[1] - o[1]) * (p[0] - o[0]) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def q_polygon(N: int) -> QHullPolygon:
    if N < 8:
        raise ValueError(f"q_polygon needs N >= 8, got {N}")
    params = hull_params(N)
    n2 = params.N2
    x0 = ceil_div(N, n2)
    pts = [p for p in candidate_points(N) if p.x <= n2 and p.y <= n2]
    pts += [LatticePoint(x0, n2), LatticePoint(n2, x0), LatticePoint(n2, n2)]
    return QHullPolygon(N, _convex_hull(pts))


def f0_Q(N: int) -> int:
    return len(q_polygon(N).vertices)


def within_strip(excess: int, N: int) -> bool:
    """Exact test of 0 <= excess <= 2 N^(1/3), i.e. excess^3 <= 8N."""
    return 0 <= excess and excess**3 <= 8 * N


def validate_strip(chain: HullChain) -> StripReport:
    N = chain.N
    report = StripReport(N=N, bound=2 * N ** (1 / 3))
    for x, y in chain.vertices:
        e = x * y - N
        report.excess.append(e)
        report.passed.append(within_strip(e, N))
    return report


def prefix_vertices(N: int) -> list[tuple[LatticePoint, bool]]:
    """The explicit vertices (k, ceil(N/k)), k <= N^(1/3), with a flag per k.

    The flag records whether N/(k+1) > 2 ceil(N/k) - ceil(N/(k-1)); it is
    True by convention for k = 1 since (1, N) is always a vertex.
    """
    check_n(N)
    out = []
    for k in range(1, icbrt(N) + 1):
        c = ceil_div(N, k)
        if k == 1:
            flag = True
        else:
            flag = N > (k + 1) * (2 * c - ceil_div(N, k - 1))
        out.append((LatticePoint(k, c), flag))
    return out
