"""
Regular subdivisions, beehive triangulations and skeletons
"""
from .subdivision import (
    HeightFunction,
    PointSet,
    Subdivision,
    Triangulation,
    complete_to_unimodular,
    is_regular,
    is_unimodular,
    paraboloid,
    refine,
    refines,
    regular_subdivision,
    regularity_heights,
    staircase,
    trivial_subdivision,
    unimodular_triangulation,
    zigzag_counts,
)
from .beehive import (
    RingCell,
    beehive_lift,
    build_beehive,
    doubly_connected_count,
    initial_subdivisions,
    is_beehive,
    ring_cells,
    zigzag,
)
from .dual import dual_graph, skeleton, to_dot
