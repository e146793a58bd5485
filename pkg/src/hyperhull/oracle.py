"""Brute-force reference computations.

Nothing here imports the fast paths: orientation, hull construction and
lattice enumeration are written again from scratch (numba-compiled, int64)
so agreement between the two is evidence rather than tautology. Budgets keep
every int64 product exact; inputs above them are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _gcd

import numba
import numpy as np

from .hull_chain import HullChain
from .lattice_core import LatticePoint


class BudgetExceededError(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_N: int = 10**6
    max_cells: int = 10**8


DEFAULT_BUDGET = OracleBudget()


@numba.njit(cache=True)
def _lower_hull(xs, ys):
    # Andrew's lower hull over points sorted by (x, y); collinear points dropped
    n = xs.shape[0]
    hx = np.empty(n, dtype=np.int64)
    hy = np.empty(n, dtype=np.int64)
    m = 0
    for i in range(n):
        while m >= 2:
            c = (hx[m - 1] - hx[m - 2]) * (ys[i] - hy[m - 2]) - (hy[m - 1] - hy[m - 2]) * (
                xs[i] - hx[m - 2]
            )
            if c <= 0:
                m -= 1
            else:
                break
        hx[m] = xs[i]
        hy[m] = ys[i]
        m += 1
    return hx[:m], hy[:m]


@numba.njit(cache=True)
def _full_hull(xs, ys):
    lx, ly = _lower_hull(xs, ys)
    ux, uy = _lower_hull(xs[::-1].copy(), ys[::-1].copy())
    k = lx.shape[0] - 1 + ux.shape[0] - 1
    if xs.shape[0] == 1:
        return xs.copy(), ys.copy()
    ox = np.empty(k, dtype=np.int64)
    oy = np.empty(k, dtype=np.int64)
    ox[: lx.shape[0] - 1] = lx[:-1]
    oy[: lx.shape[0] - 1] = ly[:-1]
    ox[lx.shape[0] - 1 :] = ux[:-1]
    oy[lx.shape[0] - 1 :] = uy[:-1]
    return ox, oy


@numba.njit(cache=True)
def _chain_arrays(N):
    xs = np.arange(1, N + 1, dtype=np.int64)
    ys = (N + xs - 1) // xs
    return xs, ys


@numba.njit(cache=True)
def _q_points(N, n2):
    # row-major scan of [1, n2]^2, emitted in (x, y) lexicographic order
    cnt = 0
    for x in range(1, n2 + 1):
        for y in range(1, n2 + 1):
            if x * y >= N:
                cnt += 1
    xs = np.empty(cnt, dtype=np.int64)
    ys = np.empty(cnt, dtype=np.int64)
    i = 0
    for x in range(1, n2 + 1):
        for y in range(1, n2 + 1):
            if x * y >= N:
                xs[i] = x
                ys[i] = y
                i += 1
    return xs, ys


def _oracle_q_side(N: int) -> int:
    c = 1
    while (c + 1) ** 3 <= N:
        c += 1
    return -(-N // c)


def _check_n(N: int, budget: OracleBudget) -> None:
    if N < 1:
        raise ValueError("N must be positive")
    if N > budget.max_N:
        raise BudgetExceededError(f"N={N} exceeds oracle budget {budget.max_N}")


def brute_chain(N: int, budget: OracleBudget = DEFAULT_BUDGET) -> HullChain:
    """Lower-left hull of every (x, ceil(N/x)), 1 <= x <= N."""
    _check_n(N, budget)
    xs, ys = _chain_arrays(N)
    hx, hy = _lower_hull(xs, ys)
    # the lower hull also walks along y=1 rightwards; nothing beyond (N, 1) exists
    return HullChain(N, [LatticePoint(int(x), int(y)) for x, y in zip(hx, hy)])


def brute_q_lattice_points(N: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[LatticePoint]:
    xs, ys = brute_q_arrays(N, budget)
    return [LatticePoint(int(x), int(y)) for x, y in zip(xs, ys)]


def brute_q_arrays(N: int, budget: OracleBudget = DEFAULT_BUDGET):
    if N < 8:
        raise ValueError("Q_N needs N >= 8")
    n2 = _oracle_q_side(N)
    if n2 * n2 > budget.max_cells:
        raise BudgetExceededError(f"[1,{n2}]^2 exceeds {budget.max_cells} cells")
    return _q_points(N, n2)


def brute_q_hull(N: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[LatticePoint]:
    """Counterclockwise vertices of conv(brute_q_lattice_points(N))."""
    xs, ys = brute_q_arrays(N, budget)
    hx, hy = _full_hull(xs, ys)
    return [LatticePoint(int(x), int(y)) for x, y in zip(hx, hy)]


def brute_strip_count(N: int, n_hi: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """#{(x, y) : N <= xy <= n_hi}, summed column by column."""
    if n_hi > budget.max_N * 10:
        raise BudgetExceededError(f"n_hi={n_hi} exceeds oracle budget")
    if n_hi < N:
        return 0
    x = np.arange(1, n_hi + 1, dtype=np.int64)
    return int(np.sum(n_hi // x - (N - 1) // x))


@lru_cache(maxsize=4)
def _directions(max_norm: int) -> np.ndarray:
    # one representative of each +-pair of primitive vectors
    out = [(1, 0), (0, 1)]
    for u in range(1, max_norm + 1):
        for v in range(1, max_norm + 1):
            if _gcd(u, v) == 1:
                out.append((u, v))
                out.append((u, -v))
    return np.array(out, dtype=np.float64)


def brute_lattice_width(points, max_norm: int = 1000):
    """Exhaustive scan of primitive directions with max-norm <= max_norm.

    Returns (width, (u, v)).
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.shape[0] > 1000:
        raise BudgetExceededError("brute_lattice_width takes at most 1000 points")
    dirs = _directions(max_norm)
    best = np.inf
    best_q = (1, 0)
    for start in range(0, dirs.shape[0], 200_000):
        block = dirs[start : start + 200_000]
        proj = block @ pts.T
        spread = proj.max(axis=1) - proj.min(axis=1)
        i = int(np.argmin(spread))
        if spread[i] < best:
            best = float(spread[i])
            best_q = (int(block[i, 0]), int(block[i, 1]))
    return best, best_q


def grid_lens_area(vx: int, vy: int, N: int, samples: int = 1000) -> float:
    """Midpoint-grid estimate of the area of {uw >= N} cut by its reflection through v."""
    if vx * vy <= N:
        return 0.0
    # the lens lies in the box spanned by the two tangency-free roots of the boundary
    s = (1 - N / (vx * vy)) ** 0.5
    u_lo, u_hi = vx * (1 - s), vx * (1 + s)
    w_lo, w_hi = vy * (1 - s), vy * (1 + s)
    du = (u_hi - u_lo) / samples
    dw = (w_hi - w_lo) / samples
    u = u_lo + (np.arange(samples) + 0.5) * du
    w = w_lo + (np.arange(samples) + 0.5) * dw
    U, W = np.meshgrid(u, w, indexing="ij")
    inside = (U * W >= N) & ((2 * vx - U) * (2 * vy - W) >= N)
    return float(inside.sum()) * du * dw
