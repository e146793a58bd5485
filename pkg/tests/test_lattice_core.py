import random
from decimal import Decimal, localcontext

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperhull.lattice_core import (
    MAX_COORD,
    LatticePoint,
    OverflowBoundError,
    ceil_div,
    check_n,
    gcd,
    icbrt,
    is_primitive,
    orient,
    primitive_direction,
)

coords = st.integers(min_value=-MAX_COORD, max_value=MAX_COORD)
points = st.tuples(coords, coords)


@pytest.mark.parametrize("a, b, expected", [(12, 18, 6), (0, 5, 5), (7, 11, 1)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_both_zero():
    with pytest.raises(ValueError):
        gcd(0, 0)


@pytest.mark.parametrize("n, d, expected", [(10, 3, 4), (10, 2, 5), (1, 7, 1)])
def test_ceil_div(n, d, expected):
    assert ceil_div(n, d) == expected


@given(st.integers(1, 10**15), st.integers(1, 10**12))
def test_ceil_div_bracket(n, d):
    c = ceil_div(n, d)
    assert c * d >= n
    assert (c - 1) * d < n


@pytest.mark.parametrize(
    "o, p, q, expected",
    [((0, 0), (1, 0), (0, 1), 1), ((2, 5), (3, 4), (4, 3), 0), ((0, 0), (0, 1), (1, 0), -1)],
)
def test_orient_examples(o, p, q, expected):
    assert orient(o, p, q) == expected


@given(points, points, points)
def test_orient_antisymmetric(o, p, q):
    assert orient(o, p, q) == -orient(o, q, p)


def test_orient_rejects_large_coordinates():
    with pytest.raises(OverflowBoundError):
        orient((0, 0), (MAX_COORD + 1, 0), (0, 1))


def _orient_decimal(o, p, q):
    with localcontext() as ctx:
        ctx.prec = 80
        ox, oy = Decimal(o[0]), Decimal(o[1])
        c = (Decimal(p[0]) - ox) * (Decimal(q[1]) - oy) - (Decimal(p[1]) - oy) * (Decimal(q[0]) - ox)
    return (c > 0) - (c < 0)


def test_orient_matches_wide_reference_near_bound():
    rng = random.Random(20261016)
    lo = MAX_COORD - 10**6
    for _ in range(10**6 // 4):
        o, p, q = [(rng.randint(lo, MAX_COORD), rng.randint(lo, MAX_COORD)) for _ in range(3)]
        assert orient(o, p, q) == _orient_decimal(o, p, q)
    # near-collinear triples on a line through huge coordinates
    for _ in range(10**6 // 4):
        dx, dy = rng.randint(1, 10**5), rng.randint(1, 10**5)
        t = rng.randint(1, 10)
        o = (rng.randint(lo, MAX_COORD - 10**6), rng.randint(lo, MAX_COORD - 10**6))
        p = (o[0] + dx, o[1] + dy)
        q = (o[0] + t * dx, o[1] + t * dy + rng.choice((-1, 0, 1)))
        assert orient(o, p, q) == _orient_decimal(o, p, q)


@pytest.mark.parametrize("a, b, expected", [(1, 1, True), (2, 4, False), (3, 5, True)])
def test_is_primitive(a, b, expected):
    assert is_primitive(a, b) is expected


@given(st.integers(0, 10**40))
def test_icbrt(n):
    c = icbrt(n)
    assert c**3 <= n < (c + 1) ** 3


def test_check_n_bounds():
    assert check_n(10**12) == 10**12
    with pytest.raises(OverflowBoundError):
        check_n(10**12 + 1)
    with pytest.raises(ValueError):
        check_n(0)
    with pytest.raises(OverflowBoundError):
        check_n(1000, limit=999)


def test_primitive_direction():
    assert primitive_direction(LatticePoint(2, 5), LatticePoint(5, 2)) == (1, 1)
    assert primitive_direction((1, 4), (2, 2)) == (1, 2)
    with pytest.raises(ValueError):
        primitive_direction((2, 2), (1, 4))
