"""
Two-dimensional convex lattice polygons with a given number of lattice points
"""
import logging
from typing import List

from ..config import MAX_SUPPORTED_GENUS
from ..errors import CapExceededError, PreconditionError
from ..geometry.polygon import (
    LatticePolygon,
    canonical_form,
    contains,
    convex_hull,
    lattice_points,
    relaxed_region_points,
    simplex,
)

logger = logging.getLogger(__name__)


def _one_point_extensions(Q: LatticePolygon) -> List[LatticePolygon]:
    size = len(lattice_points(Q))
    grown = []
    for z in relaxed_region_points(Q):
        if contains(Q, z):
            continue
        R = convex_hull(Q.vertices + (z,))
        if len(lattice_points(R)) == size + 1:
            grown.append(R)
    return grown


def enumerate_interior_candidates(g: int, max_genus: int = MAX_SUPPORTED_GENUS) -> List[LatticePolygon]:
    """
    Every two-dimensional convex lattice polygon with exactly g lattice
    points, one canonical representative per unimodular class.

    Classes are grown one point at a time from the unit triangle: removing
    a suitable vertex from a convex lattice polygon with at least four
    lattice points leaves a two-dimensional one with one point fewer, and
    every point that can be added without dragging others along lies in
    the relaxed region.
    """
    if g < 1:
        raise PreconditionError(f"genus must be positive, got {g}")
    if g > max_genus:
        raise CapExceededError(f"cap exceeded: genus {g} > {max_genus}")
    if g < 3:
        return []
    level = {canonical_form(simplex(1))}
    for size in range(4, g + 1):
        level = {canonical_form(R) for Q in level for R in _one_point_extensions(Q)}
        logger.debug("%d classes with %d lattice points", len(level), size)
    return sorted(level, key=lambda P: P.vertices)
