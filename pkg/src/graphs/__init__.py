"""
Multigraphs, chip-firing, scrambles and gonality certificates
"""
from .multigraph import Divisor, MultiGraph, complete_graph, cube_graph, cycle_graph, path_graph
from .divisors import fire_set, gonality, gonality_witness, has_positive_rank, reduce_divisor
from .scrambles import (
    Scramble,
    crystal_scramble,
    egg_cut_bruteforce,
    egg_cut_number,
    hitting_number,
    scramble_order,
    search_scramble,
)
