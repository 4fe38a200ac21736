#!/usr/bin/env python3
"""
Tests for moduli dimensions, the bound U(g, d), truncations, crystals and witness polygons
"""

import math
import os
import sys
from fractions import Fraction

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest

from src.errors import FalsificationError, PreconditionError
from src.geometry import (
    apply_map,
    area_doubled,
    boundary_points,
    canonical_form,
    convex_hull,
    expected_gonality,
    genus,
    is_maximal,
    lattice_width,
    rectangle,
    simplex,
    upsilon,
)
from src.moduli import (
    ab_bound_holds,
    boundary_row_counts,
    check_dim_bound,
    chrangledim,
    cut_penalty,
    find_crystal,
    gap_check,
    hyperelliptic_locus_dim,
    long_strip_family,
    moduli_dim,
    shear_to_crystal,
    strip_normalize,
    triangular_decomposition,
    trigonal_locus_dim,
    truncate,
    two_row_relaxation,
    upper_bound_U,
    verify_U_properties,
    witness_d4,
    witness_d5,
    witness_truncated_rectangle,
)
from src.moduli.dimension import sqrt_width_bound_holds
from src.moduli.witnesses import _require_maximal, triangular
from src.utils.corpus_cache import get_corpus_cache


@pytest.mark.parametrize("g,d,value", [
    (3, 3, Fraction(9)),
    (5, 3, Fraction(13)),
    (4, 3, Fraction(11)),
    (8, 4, Fraction(55, 3)),
    (12, 5, Fraction(25)),
])
def test_upper_bound_values(g, d, value):
    assert upper_bound_U(g, d) == value


def test_upper_bound_rejects_small_arguments():
    with pytest.raises(PreconditionError):
        upper_bound_U(5, 1)
    with pytest.raises(PreconditionError):
        upper_bound_U(0, 3)


def test_moduli_dim_small_polygons():
    assert moduli_dim(simplex(4)) == 6
    assert moduli_dim(upsilon(2)) == 7
    with pytest.raises(PreconditionError):
        moduli_dim(rectangle(4, 2))
    with pytest.raises(PreconditionError):
        moduli_dim(convex_hull([(1, 0), (4, 0), (0, 4), (0, 1)]))


def test_check_dim_bound_on_four_sigma():
    report = check_dim_bound(simplex(4))
    assert report.dim == 6
    assert report.egon == 3
    assert report.upper_bound == 9
    assert report.to_dict()["upper_bound"] == {"num": 9, "den": 1}


def test_locus_dimensions():
    assert hyperelliptic_locus_dim(5) == 9
    assert trigonal_locus_dim(3) == 6
    assert trigonal_locus_dim(4) == 9
    assert trigonal_locus_dim(8) == 17
    with pytest.raises(PreconditionError):
        trigonal_locus_dim(2)


def test_cut_penalty():
    assert cut_penalty(2, 2, 5) == Fraction(-3, 2)
    assert cut_penalty(3, 3, 5) == Fraction(-3, 2)
    assert cut_penalty(1, 1, 3) == -1
    for d in range(2, 8):
        for x in range(1, 6):
            for y in range(1, d):
                assert cut_penalty(x, y, d) <= -1
    with pytest.raises(PreconditionError):
        cut_penalty(0, 2, 4)
    with pytest.raises(PreconditionError):
        cut_penalty(1, 1, 1)


def test_strip_normalize_prefers_shear():
    P = convex_hull([(0, 0), (8, 0), (16, 4), (8, 4)])
    Q, m = strip_normalize(P)
    assert Q == rectangle(8, 4)
    assert apply_map(P, m) == Q


def test_strip_normalize_keeps_width():
    for P in (simplex(4), upsilon(2), rectangle(5, 3)):
        Q, _ = strip_normalize(P)
        x0, _, y0, y1 = Q.bounding_box()
        assert (x0, y0) == (0, 0)
        assert y1 == lattice_width(P)[0]


def test_truncation_of_genus_twelve_witness():
    P = witness_d5(12)
    t = truncate(P)
    assert t.strip_height == 5
    assert sorted(t.cut_legs()) == [(2, 2), (3, 3)]
    assert t.a + t.b == 5
    assert t.polygon() == t.strip_polygon
    assert t.area_doubled() == area_doubled(P)
    assert t.boundary_points() == boundary_points(P)


def test_boundary_rows_and_ab_bound():
    assert boundary_row_counts(rectangle(4, 3)) == [5, 2, 2, 5]
    assert ab_bound_holds(rectangle(8, 4))
    assert ab_bound_holds(witness_d4(7))


def test_witness_d4():
    P = witness_d4(7)
    assert genus(P) == 7
    assert expected_gonality(P) == 4
    assert moduli_dim(P) == 16
    assert chrangledim(P, truncate(P)) == 16
    with pytest.raises(PreconditionError):
        witness_d4(8)


@pytest.mark.parametrize("g", [7, 10, 13, 16])
def test_witness_d4_meets_bound(g):
    assert moduli_dim(witness_d4(g)) == math.floor(upper_bound_U(g, 4))


@pytest.mark.parametrize("g", [12, 13, 14, 15])
def test_witness_d5_one_below_bound(g):
    P = witness_d5(g)
    assert genus(P) == g
    assert expected_gonality(P) == 5
    assert moduli_dim(P) == math.floor(upper_bound_U(g, 5)) - 1


def test_triangular_decomposition():
    assert triangular_decomposition(0) == (0, 0, 0, 0)
    assert triangular_decomposition(4) == (2, 1, 0, 0)
    for k in range(30):
        parts = triangular_decomposition(k)
        assert len(parts) == 4
        assert sum(triangular(t) for t in parts) == k
    with pytest.raises(PreconditionError):
        triangular_decomposition(-1)


@pytest.mark.parametrize("g,d", [(27, 3), (28, 3), (29, 3), (64, 4), (65, 4), (66, 4), (125, 5)])
def test_truncated_rectangle_witness(g, d):
    P = witness_truncated_rectangle(g, d)
    assert genus(P) == g
    assert is_maximal(P)
    assert upper_bound_U(g, d) - moduli_dim(P) <= d + 4
    assert lattice_width(P)[0] == d


def test_truncated_rectangle_witness_relaxes_lone_cut():
    P = witness_truncated_rectangle(27, 3)
    assert canonical_form(P) == canonical_form(convex_hull([(0, 0), (16, 0), (13, 3), (0, 3)]))
    assert boundary_points(P) == 35
    assert moduli_dim(P) == 55
    assert upper_bound_U(27, 3) == 57


def test_witnesses_must_be_maximal():
    _require_maximal(simplex(4), "4 sigma")
    with pytest.raises(FalsificationError):
        _require_maximal(convex_hull([(0, 0), (15, 0), (15, 1), (13, 3), (0, 3)]), "lone cut")


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_boundary_count_bound(g):
    for P in get_corpus_cache().get(g).polygons:
        t = truncate(P)
        bound = t.a + t.b + 2 * t.strip_height
        r = boundary_points(P)
        assert r <= bound
        assert r != bound - 1
        middle = boundary_row_counts(t.strip_polygon)[1:-1]
        assert (r == bound) == all(count == 2 for count in middle)


@pytest.mark.parametrize("m,n", [(3, 2), (5, 3), (7, 4), (6, 6)])
def test_boundary_count_bound_is_sharp_on_rectangles(m, n):
    t = truncate(rectangle(m, n))
    assert boundary_points(rectangle(m, n)) == t.a + t.b + 2 * t.strip_height


def test_gap_check():
    assert gap_check(27, 3)
    assert gap_check(64, 4)
    with pytest.raises(PreconditionError):
        gap_check(20, 3)


def test_find_crystal():
    assert find_crystal(rectangle(4, 3), 3) is None
    assert find_crystal(rectangle(5, 3), 3) == range(1, 5)
    with pytest.raises(PreconditionError):
        find_crystal(rectangle(5, 3), 1)


def test_two_row_relaxation():
    P = two_row_relaxation(0, 8, -2, 15)
    assert P == convex_hull([(1, 0), (2, 0), (23, 3), (-5, 3)])
    assert genus(P) == 27
    assert is_maximal(P)


def test_long_strip_family_has_crystals():
    family = long_strip_family(27, 6)
    assert len(family) == 6
    for P in family:
        assert genus(P) >= 27
        assert is_maximal(P)
        Q = shear_to_crystal(P, 3)
        assert Q is not None
        assert find_crystal(Q, 3) is not None


def test_shear_to_crystal_needs_long_rows():
    assert shear_to_crystal(two_row_relaxation(0, 2, 0, 4), 3) is None


def test_sqrt_width_bound():
    for g in (32, 40, 100):
        assert sqrt_width_bound_holds(g, 3)
    assert sqrt_width_bound_holds(125, 5)


def test_verify_U_properties():
    report = verify_U_properties(3, range(27, 41), [simplex(4), upsilon(2), rectangle(5, 3)])
    assert report.passed
    names = {c.name for c in report.checks}
    assert names == {"sqrt-width", "convex-in-d", "width-bound"}
    with pytest.raises(PreconditionError):
        verify_U_properties(2, range(5))


if __name__ == "__main__":
    print("=" * 50)
    print("Moduli tests")
    print("=" * 50)
    sys.exit(pytest.main([__file__, "-v"]))
