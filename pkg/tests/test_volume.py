import warnings
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toric_brasselet import _hull
from toric_brasselet.errors import DimensionMismatch, NoAdmissibleComposition
from toric_brasselet.lattice import sublattice_basis
from toric_brasselet.volume import (
    LatticePolytope,
    VolumeConvention,
    compositions,
    k_coefficient,
    mixed_volume,
    normalized_volume,
)

Z2 = sublattice_basis([(1, 0), (0, 1)])
points = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=6)


def poly(pts):
    return LatticePolytope(tuple(pts), Z2)


def twice_area(pts):
    """Independent oracle: 2 * Euclidean area by gift wrapping and the shoelace sum."""
    pts = sorted(set(pts))
    if len(pts) < 3:
        return 0
    hull = []
    start = pts[0]
    cur = start
    while True:
        hull.append(cur)
        cand = pts[0] if pts[0] != cur else pts[1]
        for p in pts:
            cross = (cand[0] - cur[0]) * (p[1] - cur[1]) - (cand[1] - cur[1]) * (p[0] - cur[0])
            farther = (p[0] - cur[0]) ** 2 + (p[1] - cur[1]) ** 2 > (cand[0] - cur[0]) ** 2 + (cand[1] - cur[1]) ** 2
            if cross < 0 or (cross == 0 and farther):
                cand = p
        cur = cand
        if cur == start or len(hull) > len(pts):
            break
    return abs(sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(hull, hull[1:] + hull[:1])))


def msum(a, b):
    return [tuple(x + y for x, y in zip(p, q)) for p in a for q in b]


def test_unit_segments():
    assert mixed_volume([poly([(0, 0), (1, 0)]), poly([(0, 0), (0, 1)])], 2) == 1


def test_diagonal_triangle():
    t = poly([(0, 0), (3, 0), (2, 2)])
    assert mixed_volume([t, t], 2) == normalized_volume(t, 2) == 6


def test_one_dimensional_lattice_length():
    assert mixed_volume([poly([(1, 0), (2, 4)])], 1) == 1
    assert mixed_volume([poly([(0, 0), (3, 0)])], 1) == 3


def test_bernstein_dense_simplices():
    # generic dense polynomials of degrees a, b in two variables meet in a*b torus points
    for a, b in product(range(1, 4), repeat=2):
        pa = poly([(0, 0), (a, 0), (0, a)])
        pb = poly([(0, 0), (b, 0), (0, b)])
        assert mixed_volume([pa, pb], 2) == a * b


def test_point_in_positive_dimension():
    assert mixed_volume([poly([(1, 0)])], 1) == 0
    assert mixed_volume([], 0) == 1


def test_errors():
    with pytest.raises(DimensionMismatch):
        mixed_volume([poly([(0, 0)])], 2)
    with pytest.raises(DimensionMismatch):
        mixed_volume([poly([(0, 0), (1, 0), (0, 1)])], 1)
    with pytest.raises(ValueError):
        VolumeConvention.parse("loose")


@given(points, points)
def test_mixed_volume_symmetric_and_polarized(a, b):
    pa, pb = poly(a), poly(b)
    mv = mixed_volume([pa, pb], 2)
    assert mv == mixed_volume([pb, pa], 2)
    assert mv >= 0
    # oracle: 2 MV = Vol(A+B) - Vol(A) - Vol(B) with Vol = 2 * area
    assert 2 * mv == twice_area(msum(a, b)) - twice_area(a) - twice_area(b)


@given(points)
def test_mixed_volume_diagonal(a):
    assert mixed_volume([poly(a), poly(a)], 2) == twice_area(a)


@given(points, points, points)
def test_mixed_volume_multilinear(a1, a2, b):
    lhs = mixed_volume([poly(msum(a1, a2)), poly(b)], 2)
    assert lhs == mixed_volume([poly(a1), poly(b)], 2) + mixed_volume([poly(a2), poly(b)], 2)


@given(points, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_translation_invariance(a, shift):
    moved = [(x + shift[0], y + shift[1]) for x, y in a]
    assert normalized_volume(poly(a), 2) == normalized_volume(poly(moved), 2)


def test_compositions():
    assert list(compositions(1, 2)) == [(1, 0)]
    assert list(compositions(2, 2)) == [(1, 1), (2, 0)]
    assert list(compositions(3, 1)) == [(3,)]
    assert list(compositions(1, 3)) == []


def test_k_coefficient_modes():
    point = poly([(1, 0)])
    edge = poly([(2, 2), (3, 0)])
    assert k_coefficient(2, 2, [point, edge], "paper-example") == 1
    assert k_coefficient(2, 2, [point, edge], "strict") == 0
    seg = poly([(1, 0), (2, 4)])
    assert k_coefficient(2, 2, [seg, poly([(2, 2)])], "strict") == 1
    assert k_coefficient(1, 2, [point, edge]) == 1
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert k_coefficient(2, 3, [point, point, edge]) == 0
    assert any(issubclass(w.category, NoAdmissibleComposition) for w in caught)


def test_lower_dimensional_reference_lattice():
    # a segment on the line x = y measured in the lattice it generates
    diag = sublattice_basis([(1, 1)])
    assert normalized_volume(LatticePolytope(((0, 0), (3, 3)), diag), 1) == 3
    assert Fraction(_hull.normalized_volume([(0, 0), (3, 3)], 1)) == 3
