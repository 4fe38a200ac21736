"""
Unimodular invariants of lattice polygons
"""
import math
from dataclasses import asdict, dataclass
from typing import List, Tuple

from ..errors import DegenerateInputError
from .polygon import (
    LatticePolygon,
    area_doubled,
    boundary_points,
    canonical_form,
    contains,
    convex_hull,
    genus,
    half_planes,
    interior_polygon,
    lattice_points,
    primitive,
    relax,
    relaxed_region_points,
    upsilon,
)


def is_hyperelliptic_polygon(P: LatticePolygon) -> bool:
    """True when the interior lattice points are collinear (or absent)."""
    inner = interior_polygon(P)
    return inner is None or inner.dimension < 2


def is_maximal_by_extension(P: LatticePolygon) -> bool:
    """
    Check maximality straight from the definition.

    A single extra lattice point suffices to witness non-maximality, and
    any such point can be chosen inside the relaxed region of P.
    """
    if P.dimension < 2:
        raise DegenerateInputError("maximality is only defined for two-dimensional polygons")
    g = genus(P)
    for z in relaxed_region_points(P):
        if contains(P, z):
            continue
        if genus(convex_hull(P.vertices + (z,))) == g:
            return False
    return True


def is_maximal(P: LatticePolygon) -> bool:
    if P.dimension < 2:
        raise DegenerateInputError("maximality is only defined for two-dimensional polygons")
    if is_hyperelliptic_polygon(P):
        return is_maximal_by_extension(P)
    return relax(interior_polygon(P)) == P


def _width_in(P: LatticePolygon, a: int, b: int) -> int:
    values = [a * p.x + b * p.y for p in P.vertices]
    return max(values) - min(values)


def lattice_width(P: LatticePolygon) -> Tuple[int, Tuple[int, int]]:
    """
    Lattice width of P and the lexicographically least direction attaining it.

    Returns:
        (width, (a, b)) where width = max - min of a*x + b*y over P
    """
    if P.dimension == 0:
        return 0, (0, 1)
    if P.dimension == 1:
        p, q = P.vertices
        u, v = primitive((q.x - p.x, q.y - p.y))
        a, b = -v, u
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return 0, (a, b)
    x0, x1, y0, y1 = P.bounding_box()
    bound = max(x1 - x0, y1 - y0)
    best = (_width_in(P, 0, 1), (0, 1))
    for a in range(1, bound + 1):
        for b in range(-bound, bound + 1):
            if math.gcd(a, abs(b)) != 1:
                continue
            w = _width_in(P, a, b)
            if w < best[0]:
                best = (w, (a, b))
    return best


def lattice_width_oracle(P: LatticePolygon, factor: int = 2) -> int:
    """Brute-force lattice width over a direction box `factor` times larger."""
    if P.dimension < 2:
        return 0
    x0, x1, y0, y1 = P.bounding_box()
    bound = factor * max(x1 - x0, y1 - y0)
    return min(_width_in(P, a, b)
               for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)
               if (a, b) != (0, 0))


def column_vectors(P: LatticePolygon) -> List[Tuple[int, int]]:
    """Nonzero v with v + (P minus some edge) inside P, sorted."""
    if P.dimension < 2:
        return []
    points = lattice_points(P)
    found = set()
    for alpha, beta, gamma in half_planes(P):
        rest = [z for z in points if alpha * z.x + beta * z.y < gamma]
        anchor = rest[0]
        # v must carry the anchor onto a lattice point of P
        for target in points:
            v = (target.x - anchor.x, target.y - anchor.y)
            if v == (0, 0) or v in found:
                continue
            if all(contains(P, (z.x + v[0], z.y + v[1])) for z in rest):
                found.add(v)
    return sorted(found)


_TWO_UPSILON = canonical_form(upsilon(2))


def expected_gonality(P: LatticePolygon) -> int:
    inner = interior_polygon(P)
    if inner is None:
        return 1
    if inner.dimension < 2:
        return 2
    if canonical_form(P) == _TWO_UPSILON:
        return 3
    return lattice_width(inner)[0] + 2


@dataclass(frozen=True)
class PolygonInvariants:
    genus: int
    boundary_points: int
    area_doubled: int
    lattice_width: int
    width_direction: Tuple[int, int]
    column_count: int
    expected_gonality: int
    hyperelliptic: bool
    maximal: bool

    def to_dict(self):
        data = asdict(self)
        data["width_direction"] = list(self.width_direction)
        return data


def polygon_invariants(P: LatticePolygon) -> PolygonInvariants:
    width, direction = lattice_width(P)
    return PolygonInvariants(
        genus=genus(P),
        boundary_points=boundary_points(P),
        area_doubled=area_doubled(P),
        lattice_width=width,
        width_direction=direction,
        column_count=len(column_vectors(P)),
        expected_gonality=expected_gonality(P),
        hyperelliptic=is_hyperelliptic_polygon(P),
        maximal=P.dimension == 2 and is_maximal(P),
    )
