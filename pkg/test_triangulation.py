#!/usr/bin/env python3
"""
Tests for regular subdivisions, beehive triangulations, dual graphs and skeletons
"""

import os
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest

from src.errors import InputFormatError, PreconditionError
from src.geometry import area_doubled, convex_hull, genus, rectangle, simplex, translate, upsilon
from src.graphs import MultiGraph
from src.triangulation import (
    HeightFunction,
    PointSet,
    Triangulation,
    beehive_lift,
    build_beehive,
    doubly_connected_count,
    dual_graph,
    initial_subdivisions,
    is_beehive,
    is_regular,
    is_unimodular,
    refines,
    regular_subdivision,
    regularity_heights,
    ring_cells,
    skeleton,
    staircase,
    to_dot,
    trivial_subdivision,
    unimodular_triangulation,
    zigzag,
    zigzag_counts,
)
from src.utils.corpus_cache import get_corpus_cache


def test_zero_heights_give_trivial_subdivision():
    ps = PointSet.from_polygon(simplex(4))
    s = regular_subdivision(ps, HeightFunction.constant(ps))
    assert s.is_trivial
    assert s.covers()
    assert s.cells == trivial_subdivision(ps).cells


def test_initial_subdivisions_of_four_sigma():
    s0, s1 = initial_subdivisions(simplex(4))
    assert len(s0.cells) == 4
    assert len(s1.cells) == 10
    assert s0.covers() and s1.covers()
    assert refines(s1, s0)


def test_initial_subdivisions_need_maximal_polygon():
    with pytest.raises(PreconditionError):
        initial_subdivisions(convex_hull([(1, 0), (4, 0), (0, 4), (0, 1)]))
    with pytest.raises(PreconditionError):
        initial_subdivisions(rectangle(4, 2))


@pytest.mark.parametrize("P", [simplex(3), rectangle(3, 2), upsilon(2), simplex(4)], ids=str)
def test_unimodular_triangulation(P):
    t = unimodular_triangulation(P)
    assert is_unimodular(t)
    assert t.covers()
    assert len(t.cells) == area_doubled(P)
    assert dual_graph(t).betti_number == genus(P)


def test_zigzag_counts_sum():
    for n in range(1, 8):
        for m in range(1, 8):
            counts = zigzag_counts(n, m)
            assert len(counts) == n
            assert sum(counts) == m - 1
            assert min(counts) >= 0
            if m >= 3:
                assert counts[0] >= 1 and counts[-1] >= 1
    with pytest.raises(PreconditionError):
        zigzag_counts(0, 3)


def test_zigzag_two_by_four():
    nu = [(0, 0), (1, 0)]
    mu = [(0, 1), (1, 1), (2, 1), (3, 1)]
    t = zigzag(nu, mu)
    assert len(t.cells) == 4
    assert doubly_connected_count(t, nu, mu) == 2
    assert t.has_edge((0, 0), (0, 1))
    assert t.has_edge((1, 0), (3, 1))


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("m", range(2, 7))
def test_zigzag_is_optimal(n, m):
    nu = [(i, 0) for i in range(n)]
    mu = [(j - 1, 1) for j in range(m)]
    t = zigzag(nu, mu)
    assert t.covers()
    assert len(t.cells) == n + m - 2
    assert doubly_connected_count(t, nu, mu) == min(n, m - 1)
    assert t.has_edge(nu[0], mu[0])
    assert t.has_edge(nu[-1], mu[-1])


def test_zigzag_rejects_bad_rows():
    with pytest.raises(PreconditionError):
        zigzag([(0, 0), (1, 0)], [(0, 2), (1, 2)])
    with pytest.raises(PreconditionError):
        zigzag([(0, 0), (1, 0)], [(0, 1), (1, 2)])


def test_staircase_rejects_bad_counts():
    with pytest.raises(PreconditionError):
        staircase([(0, 0), (1, 0)], [(0, 1), (1, 1)], [1, 1])


def test_ring_cells_of_four_sigma():
    cells = ring_cells(simplex(4))
    assert len(cells) == 3
    assert sorted((c.n, c.m) for c in cells) == [(2, 5), (2, 5), (2, 5)]
    assert all(c.max_doubly_connected == 2 for c in cells)


def test_beehive_of_four_sigma():
    P = simplex(4)
    t = build_beehive(P)
    assert len(t.point_set) == 15
    assert len(t.cells) == 16
    assert is_beehive(t, P)


def test_fan_is_not_a_beehive():
    P = simplex(4)
    fan = build_beehive(P, steps=lambda n, m: [m - 1] + [0] * (n - 1))
    assert is_unimodular(fan)
    assert not is_beehive(fan, P)


def test_trivial_subdivision_is_not_a_beehive():
    P = simplex(4)
    assert not is_beehive(trivial_subdivision(PointSet.from_polygon(P)), P)


@pytest.mark.parametrize("P", [
    simplex(4),
    upsilon(2),
    rectangle(4, 3),
    translate(rectangle(15, 3), -1, 0),
], ids=str)
def test_beehive_of_maximal_polygons(P):
    t = build_beehive(P)
    assert t.covers()
    assert is_beehive(t, P)


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_corpus_beehives(g):
    for P in get_corpus_cache().get(g).polygons:
        t = build_beehive(P)
        assert is_beehive(t, P)
        S = skeleton(dual_graph(t))
        assert S.betti_number == g
        assert S.n == 2 * g - 2
        assert all(S.degree(v) == 3 for v in range(S.n))
        assert is_regular(t)


def test_beehive_lift_of_four_sigma():
    P = simplex(4)
    t, heights = beehive_lift(P)
    induced = regular_subdivision(t.point_set, heights)
    assert {frozenset(c) for c in induced.cells} == {frozenset(c) for c in t.cells}
    assert all(h >= 0 and h.denominator == 1 for h in heights.values)


def test_regularity_needs_every_point_used():
    ps = PointSet.from_polygon(simplex(2))
    with pytest.raises(PreconditionError):
        regularity_heights(Triangulation(ps, []))


def test_skeleton_of_four_sigma():
    t = build_beehive(simplex(4))
    S = skeleton(dual_graph(t))
    assert S.betti_number == 3
    assert S.n == 4
    assert len(S.edges) == 6
    assert all(S.degree(v) == 3 for v in range(S.n))
    assert sum(S.lengths) <= len(dual_graph(t).edges)


def test_skeleton_of_genus_one_is_a_loop():
    S = skeleton(dual_graph(unimodular_triangulation(simplex(3))))
    assert S.n == 1
    assert S.edges == ((0, 0),)
    assert S.betti_number == 1


def test_skeleton_needs_connected_graph():
    with pytest.raises(PreconditionError):
        skeleton(MultiGraph(2, ()))


def test_to_dot():
    G = MultiGraph(2, ((0, 1), (0, 1)), (2, 3))
    assert to_dot(G) == (
        "graph skeleton {\n"
        "  0;\n"
        "  1;\n"
        '  0 -- 1 [label="2"];\n'
        '  0 -- 1 [label="3"];\n'
        "}\n"
    )


def test_triangulation_json_codec():
    t = build_beehive(simplex(4))
    again = Triangulation.from_dict(t.to_dict())
    assert {frozenset(c) for c in again.cells} == {frozenset(c) for c in t.cells}
    with pytest.raises(InputFormatError):
        Triangulation.from_dict({"points": [[0, 0], [2, 0], [0, 1]], "cells": [[0, 1, 2]]})
    with pytest.raises(InputFormatError):
        Triangulation.from_dict({"points": [[0, 0]], "cells": [[0, 1]]})
    for cells in (5, [5], [[0, 0, 1]], [[0, 1, "2"]], [[0, 1, 3]]):
        with pytest.raises(InputFormatError):
            Triangulation.from_dict({"points": [[0, 0], [1, 0], [0, 1]], "cells": cells})
    with pytest.raises(InputFormatError):
        Triangulation.from_dict({"points": [[0, 0], [1, 0], [2, 0]], "cells": [[0, 1, 2]]})
    with pytest.raises(InputFormatError):
        Triangulation.from_dict({"points": {"a": 1}, "cells": []})


if __name__ == "__main__":
    print("=" * 50)
    print("Triangulation tests")
    print("=" * 50)
    sys.exit(pytest.main([__file__, "-v"]))
