"""
Exact lattice polygon geometry
"""
from .polygon import (
    AffineMap,
    LatticePoint,
    LatticePolygon,
    apply_map,
    area_doubled,
    boundary_points,
    canonical_form,
    contains,
    convex_hull,
    genus,
    interior_points,
    interior_polygon,
    is_equivalent,
    lattice_points,
    rectangle,
    relax,
    relaxed_region_points,
    shear,
    simplex,
    translate,
    upsilon,
)
from .invariants import (
    PolygonInvariants,
    column_vectors,
    expected_gonality,
    is_hyperelliptic_polygon,
    is_maximal,
    is_maximal_by_extension,
    lattice_width,
    polygon_invariants,
)
