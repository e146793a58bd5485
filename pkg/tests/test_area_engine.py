import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from hyperhull.area_engine import (
    SelfCheckError,
    area_Q,
    corner_sliver,
    edge_cap_area,
    missed_area_Q,
    missed_area_Q_caps,
    missed_area_Q_difference,
    missed_area_range,
    pick_counts,
    shoelace_area2,
)
from hyperhull.hull_chain import chain_vertices, hull_params, q_polygon

# reference values from 40-digit quadrature of the integrands
CAP_10 = 1.337092681258449348
CAP_4 = 0.227411277760218762
CAP_2 = 0.113705638880109381
OUTER_CAP_10 = 0.568528194400546906
AREA_Q_10 = 5.837092681258449348
AREA_Q_8 = 2.454822555520437525
AREA_Q_1000 = 6697.414907005954316


@pytest.mark.parametrize(
    "poly, expected",
    [([(0, 0), (1, 0), (0, 1)], 1), ([(2, 5), (5, 5), (5, 2)], 9), ([(0, 0), (2, 0), (2, 2), (0, 2)], 8)],
)
def test_shoelace(poly, expected):
    assert shoelace_area2(poly) == expected
    assert shoelace_area2(poly[::-1]) == expected


def test_shoelace_degenerate():
    with pytest.raises(ValueError):
        shoelace_area2([(0, 0), (1, 1)])


@pytest.mark.parametrize(
    "poly, expected",
    [([(2, 5), (5, 5), (5, 2)], (1, 9)), ([(0, 0), (1, 0), (0, 1)], (0, 3)), ([(0, 0), (3, 0), (0, 3)], (1, 9))],
)
def test_pick_counts(poly, expected):
    assert pick_counts(poly) == expected


def _brute_interior(poly):
    # cell-by-cell test against every edge; polygon counterclockwise
    n = len(poly)
    xs, ys = [p[0] for p in poly], [p[1] for p in poly]
    count = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(
                (poly[(i + 1) % n][0] - poly[i][0]) * (y - poly[i][1])
                - (poly[(i + 1) % n][1] - poly[i][1]) * (x - poly[i][0]) > 0
                for i in range(n)
            ):
                count += 1
    return count


@pytest.mark.parametrize("N", [8, 9, 10, 30, 64, 100, 555, 1000])
def test_pick_interior_matches_cell_scan(N):
    poly = q_polygon(N).vertices
    assert pick_counts(poly)[0] == _brute_interior(poly)


def test_pick_counts_cell_cap():
    with pytest.raises(ValueError):
        pick_counts([(0, 0), (10**5, 0), (0, 10**5)], max_cells=10**8)


@pytest.mark.parametrize(
    "p1, p2, N, expected",
    [((2, 5), (5, 2), 10, CAP_10), ((1, 4), (2, 2), 4, CAP_4), ((1, 2), (2, 1), 2, CAP_2), ((1, 10), (2, 5), 10, OUTER_CAP_10)],
)
def test_edge_cap_area(p1, p2, N, expected):
    r = edge_cap_area(p1, p2, N)
    assert r.value == pytest.approx(expected, rel=1e-13)
    assert abs(r.value - expected) <= r.abs_error_bound + 1e-16


def test_edge_cap_area_rejects_chord_below_curve():
    with pytest.raises(ValueError):
        edge_cap_area((2, 4), (4, 2), 10)


@given(st.integers(2, 10**6))
def test_edge_caps_positive_and_match_quadrature(N):
    for p1, p2 in chain_vertices(N).edges()[:20]:
        r = edge_cap_area(p1, p2, N)
        assert r.value >= 0
        slope = (p2[1] - p1[1]) / (p2[0] - p1[0])
        ref, _ = quad(lambda x: p1[1] + slope * (x - p1[0]) - N / x, p1[0], p2[0], epsabs=1e-11, epsrel=1e-11)
        assert r.value == pytest.approx(ref, rel=1e-7, abs=1e-9)


@given(st.integers(1, 10**4), st.integers(1, 10**4), st.integers(1, 10**4))
def test_edge_cap_area_swap_symmetry(d1, d2, m):
    # a chord between two points of xy = N bounds the same region whether
    # integrated along x or along y
    if d1 == d2:
        return
    d1, d2 = sorted((d1, d2))
    N = d1 * d2 * m
    p1, p2 = (d1, N // d1), (d2, N // d2)
    a = edge_cap_area(p1, p2, N)
    b = edge_cap_area((p2[1], p2[0]), (p1[1], p1[0]), N)
    assert a.value == pytest.approx(b.value, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("N, expected", [(10, AREA_Q_10), (8, AREA_Q_8), (1000, AREA_Q_1000)])
def test_area_Q(N, expected):
    assert area_Q(N).value == pytest.approx(expected, rel=1e-13)
    n2 = hull_params(N).N2
    ref, _ = quad(lambda x: n2 - N / x, N / n2, n2, epsabs=1e-10, epsrel=1e-12)
    assert area_Q(N).value == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize(
    "N, expected",
    [(10, CAP_10), (8, AREA_Q_8 - 2.0)],
)
def test_missed_area_Q_examples(N, expected):
    assert missed_area_Q(N).value == pytest.approx(expected, rel=1e-12)


def test_corner_sliver_closed_form():
    for N in (9, 11, 100, 1001, 123457):
        n2 = hull_params(N).N2
        x0 = -(-N // n2)
        ref, _ = quad(lambda x: n2 - N / x, N / n2, x0, epsabs=1e-12, epsrel=1e-12)
        assert corner_sliver(N).value == pytest.approx(ref, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("N", [1000, 54321, 10**6, 10**8])
def test_missed_area_dual_path(N):
    a = missed_area_Q_caps(N).value
    b = missed_area_Q_difference(N).value
    assert abs(a - b) <= 1e-6 * max(1.0, a)


def test_missed_area_self_check_raises(monkeypatch):
    import hyperhull.area_engine as ae

    monkeypatch.setattr(ae, "missed_area_Q_difference", lambda N: ae.AreaResult(1e9, 0.0))
    with pytest.raises(SelfCheckError):
        ae.missed_area_Q(1000)


def test_missed_area_range_examples():
    assert missed_area_range(10, 1, 10).value == pytest.approx(2 * OUTER_CAP_10 + CAP_10, rel=1e-12)
    assert missed_area_range(10, 2, 5).value == pytest.approx(CAP_10, rel=1e-12)
    assert missed_area_range(10, 3, 3).value == 0.0
    with pytest.raises(ValueError):
        missed_area_range(10, 0.5, 3)


@given(st.integers(4, 10**5), st.floats(0, 1), st.floats(0, 1))
def test_missed_area_range_split_additivity(N, s, t):
    lo, hi = sorted((1 + s * (N - 1), 1 + t * (N - 1)))
    mid = (lo + hi) / 2
    whole = missed_area_range(N, lo, hi).value
    parts = missed_area_range(N, lo, mid).value + missed_area_range(N, mid, hi).value
    assert whole == pytest.approx(parts, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("N", [10, 777, 10**5])
def test_missed_area_range_partial_matches_quadrature(N):
    verts = chain_vertices(N).vertices
    lo, hi = 1.5, min(N, 2.5 * math.sqrt(N))

    def chord(x):
        for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
            if x1 <= x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)

    brk = [x for x, _ in verts if lo < x < hi]
    ref, _ = quad(lambda x: chord(x) - N / x, lo, hi, points=brk or None, limit=500, epsabs=1e-10)
    assert missed_area_range(N, lo, hi).value == pytest.approx(ref, rel=1e-7, abs=1e-8)
