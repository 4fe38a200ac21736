#!/usr/bin/env python3
"""
Tests for chip-firing, divisorial gonality, scrambles and gonality certificates
"""

import math
import os
import random
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import networkx as nx
import pytest

from src.errors import CapExceededError, InputFormatError, PreconditionError
from src.geometry import rectangle, simplex, translate
from src.graphs import (
    Divisor,
    MultiGraph,
    Scramble,
    complete_graph,
    crystal_scramble,
    cube_graph,
    cycle_graph,
    egg_cut_bruteforce,
    egg_cut_number,
    fire_set,
    gonality,
    gonality_witness,
    has_positive_rank,
    hitting_number,
    path_graph,
    reduce_divisor,
    scramble_order,
    search_scramble,
)
from src.graphs.certificate import gonality_certificate
from src.moduli import find_crystal
from src.triangulation import build_beehive, dual_graph, skeleton, unimodular_triangulation
from src.utils.corpus_cache import get_corpus_cache


def _crystal_rectangle():
    return translate(rectangle(15, 3), -1, 0)


def test_multigraph_basics():
    G = MultiGraph(3, ((1, 0), (1, 2), (2, 2)))
    assert G.edges == ((0, 1), (1, 2), (2, 2))
    assert G.degree(2) == 3
    assert G.has_loops
    assert G.betti_number == 1
    L = G.loopless_model()
    assert L.n == 4
    assert not L.has_loops
    assert L.betti_number == 1
    with pytest.raises(PreconditionError):
        MultiGraph(2, ((0, 2),))


def test_multigraph_json_codec():
    G = MultiGraph.from_dict({"n": 3, "edges": [[0, 1], [1, 2]], "lengths": [2, 5]})
    assert G.lengths == (2, 5)
    assert G.to_dict() == {"n": 3, "edges": [[0, 1], [1, 2]], "lengths": [2, 5]}
    assert cycle_graph(3).to_dict() == {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
    with pytest.raises(InputFormatError):
        MultiGraph.from_dict({"n": 2, "edges": [[0, 3]]})
    with pytest.raises(InputFormatError):
        MultiGraph.from_dict({"edges": []})
    for lengths in (["x"], [0], [1.5], [True], 3, [1, 1]):
        with pytest.raises(InputFormatError):
            MultiGraph.from_dict({"n": 2, "edges": [[0, 1]], "lengths": lengths})


def test_fire_set_moves_chips():
    G = path_graph(3)
    D = fire_set(G, Divisor((1, 0, 0)), [0])
    assert D.chips == (0, 1, 0)
    assert D.degree == 1


@pytest.mark.parametrize("G,expected", [
    (path_graph(1), 1),
    (path_graph(5), 1),
    (cycle_graph(1), 2),
    (cycle_graph(2), 2),
    (cycle_graph(5), 2),
    (complete_graph(4), 3),
    (cube_graph(), 4),
])
def test_gonality(G, expected):
    assert gonality(G) == expected


def test_gonality_witness_has_positive_rank():
    k, D = gonality_witness(cube_graph())
    assert k == 4
    assert D.degree == 4
    assert D.is_effective
    assert has_positive_rank(cube_graph(), D)


def test_has_positive_rank_on_cycle():
    G = cycle_graph(4)
    assert has_positive_rank(G, Divisor.from_vertices(4, [0, 2]))
    assert not has_positive_rank(G, Divisor.from_vertices(4, [0]))
    assert not has_positive_rank(G, Divisor((-1, 0, 0, 0)))


def test_reduce_divisor_random():
    rng = random.Random(11)
    for G in (cube_graph(), cycle_graph(5), complete_graph(4), MultiGraph(3, ((0, 1), (0, 1), (1, 2)))):
        for _ in range(25):
            D = Divisor(tuple(rng.randint(-3, 3) for _ in range(G.n)))
            q = rng.randrange(G.n)
            R = reduce_divisor(G, D, q)
            assert R.degree == D.degree
            assert all(R[v] >= 0 for v in range(G.n) if v != q)
            assert reduce_divisor(G, R, q) == R


def test_reduce_divisor_checks_input():
    with pytest.raises(PreconditionError):
        reduce_divisor(cycle_graph(3), Divisor((1, 0)), 0)
    with pytest.raises(PreconditionError):
        reduce_divisor(cycle_graph(3), Divisor((1, 0, 0)), 5)
    with pytest.raises(PreconditionError):
        reduce_divisor(MultiGraph(2, ()), Divisor((1, 0)), 0)


def test_gonality_caps():
    with pytest.raises(CapExceededError):
        gonality(cube_graph(), vertex_cap=5)
    with pytest.raises(CapExceededError):
        gonality(cube_graph(), degree_cap=3)


def test_cube_spoke_scramble():
    G = cube_graph()
    s = Scramble(tuple(frozenset({v, v ^ 4}) for v in range(4)))
    assert s.pairwise_disjoint
    assert hitting_number(s) == 4
    assert egg_cut_number(G, s.eggs) == 4
    assert scramble_order(G, s) == 4


def test_single_egg_has_order_one():
    G = cube_graph()
    s = Scramble((frozenset(range(8)),))
    assert egg_cut_number(G, s.eggs) == math.inf
    assert scramble_order(G, s) == 1


def test_hitting_number_with_overlaps():
    s = Scramble((frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})))
    assert not s.pairwise_disjoint
    assert hitting_number(s) == 2


def test_scramble_eggs_must_be_connected():
    with pytest.raises(PreconditionError):
        scramble_order(path_graph(4), Scramble((frozenset({0, 2}), frozenset({3}))))
    with pytest.raises(InputFormatError):
        Scramble.from_dict({"eggs": [[0], []]})


def test_egg_cut_matches_bruteforce():
    rng = random.Random(5)
    graphs = [cube_graph(), cycle_graph(6), complete_graph(5), path_graph(6)]
    for _ in range(30):
        G = rng.choice(graphs)
        eggs = []
        for v in rng.sample(range(G.n), rng.randint(2, 3)):
            egg = {v}
            neighbours = sorted(G.adjacency()[v])
            if neighbours and rng.random() < 0.5:
                egg.add(rng.choice(neighbours))
            eggs.append(frozenset(egg))
        assert egg_cut_number(G, eggs) == egg_cut_bruteforce(G, eggs)


def test_search_scramble():
    assert search_scramble(path_graph(4), 2) is None
    s = search_scramble(cycle_graph(6), 2)
    assert s is not None
    assert scramble_order(cycle_graph(6), s) >= 2
    assert search_scramble(cube_graph(), 1).eggs == (frozenset(range(8)),)
    with pytest.raises(CapExceededError):
        search_scramble(complete_graph(5), 2, vertex_cap=3)


def test_crystal_scramble_of_long_rectangle():
    P = _crystal_rectangle()
    t = build_beehive(P)
    columns = find_crystal(P, 3)
    assert columns == range(0, 4)
    s = crystal_scramble(t, columns, 3)
    assert len(s) == 3
    assert s.pairwise_disjoint
    assert scramble_order(dual_graph(t), s) == 3
    with pytest.raises(PreconditionError):
        crystal_scramble(t, None, 3)
    with pytest.raises(PreconditionError):
        crystal_scramble(t, range(0, 3), 3)


def test_certificate_from_crystal():
    P = _crystal_rectangle()
    cert = gonality_certificate(P, build_beehive(P))
    assert cert.conclusion == 3
    assert cert.lower_witness == "crystal scramble"
    assert cert.describe() == "gon = 3"
    assert cert.to_dict()["conclusion"] == 3


def test_certificate_of_four_sigma():
    cert = gonality_certificate(simplex(4), build_beehive(simplex(4)))
    assert cert.lower == cert.upper == 3
    assert cert.conclusion == 3
    assert cert.lower_witness == "scramble search"


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_certificates_of_low_gonality_corpus(g):
    corpus = get_corpus_cache().get(g)
    for P, egon in zip(corpus.polygons, corpus.egons):
        if egon > 3:
            continue
        cert = gonality_certificate(P, build_beehive(P))
        assert cert.lower <= cert.upper <= egon
        assert cert.conclusion == egon


def test_genus_five_tetragonal_skeletons_are_cubes():
    corpus = get_corpus_cache().get(5)
    tetragonal = [P for P, egon in zip(corpus.polygons, corpus.egons) if egon == 4]
    assert len(tetragonal) == 3
    for P in tetragonal:
        t = build_beehive(P)
        S = skeleton(dual_graph(t))
        assert S.n == 8
        assert len(S.edges) == 12
        assert nx.is_isomorphic(nx.Graph(S.to_networkx()), nx.hypercube_graph(3))
        cert = gonality_certificate(P, t)
        assert cert.conclusion == 4


def test_certificate_of_top_genus_six_polygon():
    corpus = get_corpus_cache().get(6)
    top = [P for P, dim, egon in zip(corpus.polygons, corpus.dims, corpus.egons) if egon == 4 and dim == 13]
    assert len(top) == 1
    assert gonality_certificate(top[0], build_beehive(top[0])).conclusion == 4


def test_certificate_of_genus_one():
    P = simplex(3)
    cert = gonality_certificate(P, unimodular_triangulation(P))
    assert cert.conclusion == 2
    assert cert.lower == cert.upper == 2


if __name__ == "__main__":
    print("=" * 50)
    print("Graph tests")
    print("=" * 50)
    sys.exit(pytest.main([__file__, "-v"]))
