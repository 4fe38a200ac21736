"""
Beehive triangulations of maximal non-hyperelliptic polygons.

The ring between the boundary of P and its interior polygon splits into
width-one cells, one per edge of the interior polygon. Each ring cell is
cut by a zig-zag that joins as many interior-edge points as possible to
two or more boundary points; the interior polygon is cut along the unit
grid by a convex quadratic lift.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from ..errors import FalsificationError, PreconditionError
from ..geometry.invariants import is_hyperelliptic_polygon, is_maximal
from ..geometry.polygon import (
    LatticePoint,
    LatticePolygon,
    boundary_lattice_points,
    half_planes,
    interior_points,
    interior_polygon,
    lattice_points,
    primitive,
)
from .subdivision import (
    HeightFunction,
    PointSet,
    Subdivision,
    Triangulation,
    _ccw,
    complete_to_unimodular,
    is_unimodular,
    refine,
    regular_subdivision,
    regularity_heights,
    staircase,
    zigzag_counts,
)

logger = logging.getLogger(__name__)

StepRule = Callable[[int, int], Sequence[int]]


@dataclass(frozen=True)
class RingCell:
    """
    The width-one cell between an edge of the interior polygon and its
    relaxed line. Both rows run in the direction of the interior edge.
    """

    nu: Tuple[LatticePoint, ...]
    mu: Tuple[LatticePoint, ...]

    @property
    def n(self) -> int:
        return len(self.nu)

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def max_doubly_connected(self) -> int:
        return min(self.n, self.m - 1)


def ring_cells(P: LatticePolygon) -> List[RingCell]:
    """One RingCell per counterclockwise edge of the interior polygon."""
    Q = interior_polygon(P)
    if Q is None or Q.dimension < 2:
        raise PreconditionError(f"{P} is hyperelliptic")
    points = lattice_points(P)
    inner = set(interior_points(P))
    cells = []
    for (va, vb), (alpha, beta, gamma) in zip(Q.edges, half_planes(Q)):
        u = primitive((vb.x - va.x, vb.y - va.y))

        def along(z):
            return u[0] * z.x + u[1] * z.y

        nu = sorted((z for z in inner if alpha * z.x + beta * z.y == gamma
                     and along(va) <= along(z) <= along(vb)), key=along)
        mu = sorted((z for z in points if alpha * z.x + beta * z.y == gamma + 1), key=along)
        if not mu:
            raise PreconditionError(f"relaxed line of edge {va}-{vb} misses {P}")
        cells.append(RingCell(tuple(nu), tuple(mu)))
    return cells


def boundary_height(ps: PointSet, P: LatticePolygon) -> HeightFunction:
    """1 on the boundary of P, 0 inside."""
    boundary = set(boundary_lattice_points(P))
    return HeightFunction.from_function(ps, lambda x, y: 1 if (x, y) in boundary else 0)


def vertex_height(ps: PointSet, P: LatticePolygon) -> HeightFunction:
    """1 on the vertices of P, 0 elsewhere."""
    corners = set(P.vertices)
    return HeightFunction.from_function(ps, lambda x, y: 1 if (x, y) in corners else 0)


def omega_height(ps: PointSet, Q: LatticePolygon) -> HeightFunction:
    """(x - xL)(x - xR) + (y - yL)(y - yR) over the bounding box of Q."""
    x_left, x_right, y_low, y_high = Q.bounding_box()
    return HeightFunction.from_function(
        ps, lambda x, y: (x - x_left) * (x - x_right) + (y - y_low) * (y - y_high))


def _require_beehive_input(P: LatticePolygon):
    if P.dimension < 2 or is_hyperelliptic_polygon(P):
        raise PreconditionError(f"beehive needs a non-hyperelliptic polygon, got {P}")
    if not is_maximal(P):
        raise PreconditionError(f"beehive needs a maximal polygon, got {P}")


def initial_subdivisions(P: LatticePolygon) -> Tuple[Subdivision, Subdivision]:
    """The subdivisions induced by boundary_height and then refined by vertex_height."""
    _require_beehive_input(P)
    ps = PointSet.from_polygon(P)
    s0 = regular_subdivision(ps, boundary_height(ps, P))
    return s0, refine(s0, vertex_height(ps, P))


def _check_rows(nu: Sequence, mu: Sequence) -> Tuple[int, int]:
    everything = list(nu) + list(mu)
    base = nu if len(nu) >= 2 else mu
    if len(base) < 2:
        raise PreconditionError("rows with a single point each do not span a trapezoid")
    u = primitive((base[-1][0] - base[0][0], base[-1][1] - base[0][1]))
    a, b = -u[1], u[0]
    levels = {a * p[0] + b * p[1] for p in nu}
    far = {a * p[0] + b * p[1] for p in mu}
    if len(levels) != 1 or len(far) != 1:
        raise PreconditionError("rows are not parallel")
    if abs(levels.pop() - far.pop()) != 1:
        raise PreconditionError("rows are not at lattice distance 1")
    if len(set(map(tuple, everything))) != len(everything):
        raise PreconditionError("rows share a point")
    return u


def _sorted_row(row: Sequence, u) -> List[LatticePoint]:
    return sorted((LatticePoint(p[0], p[1]) for p in row), key=lambda z: u[0] * z.x + u[1] * z.y)


def zigzag(nu: Sequence, mu: Sequence, steps: Optional[StepRule] = None) -> Triangulation:
    """
    Unimodular triangulation of the width-one trapezoid between two rows.

    Args:
        nu: the row whose points should be joined to several points of mu
        mu: the parallel row at lattice distance one
        steps: step rule (n, m) -> counts; zigzag_counts by default
    """
    u = _check_rows(nu, mu)
    nu, mu = _sorted_row(nu, u), _sorted_row(mu, u)
    rule = steps or zigzag_counts
    ps = PointSet(tuple(nu) + tuple(mu))
    cells = [_ccw(ps.points, [ps.index_of(p) for p in tri])
             for tri in staircase(nu, mu, rule(len(nu), len(mu)))]
    return Triangulation(ps, cells)


def doubly_connected_count(t: Triangulation, nu: Sequence, mu: Sequence) -> int:
    """Points of nu joined by an edge of t to at least two points of mu."""
    edges = t.edge_map()
    index = t.point_set.index_of
    mu_idx = [index(p) for p in mu]
    count = 0
    for p in nu:
        i = index(p)
        joined = sum(1 for j in mu_idx if (min(i, j), max(i, j)) in edges)
        if joined >= 2:
            count += 1
    return count


def build_beehive(P: LatticePolygon, steps: Optional[StepRule] = None) -> Triangulation:
    """
    Regular beehive triangulation of a maximal non-hyperelliptic polygon.

    The interior polygon is subdivided by omega_height (unit squares and
    unimodular triangles) and completed; each ring cell gets a zig-zag.

    Args:
        P: maximal non-hyperelliptic polygon
        steps: step rule used in the ring cells, zigzag_counts by default
    """
    _require_beehive_input(P)
    ps = PointSet.from_polygon(P)
    Q = interior_polygon(P)
    core = Subdivision(ps, [tuple(ps.index_of(v) for v in Q.vertices)])
    core = complete_to_unimodular(refine(core, omega_height(ps, Q)))
    cells = list(core.cells)

    rule = steps or zigzag_counts
    for ring in ring_cells(P):
        for tri in staircase(ring.nu, ring.mu, rule(ring.n, ring.m)):
            cells.append(_ccw(ps.points, [ps.index_of(p) for p in tri]))

    t = Triangulation(ps, cells)
    if not t.covers():
        raise FalsificationError(f"beehive cells do not cover {P}", witness=P)
    logger.debug("beehive of %s has %d triangles", P, len(t.cells))
    return t


def beehive_lift(P: LatticePolygon, steps: Optional[StepRule] = None) -> Tuple[Triangulation, HeightFunction]:
    """The beehive of P together with integer heights inducing it."""
    t = build_beehive(P, steps)
    heights = regularity_heights(t)
    if heights is None:
        raise FalsificationError(f"beehive of {P} is not regular", witness=P)
    return t, heights


def is_beehive(t: Subdivision, P: LatticePolygon) -> bool:
    """
    Check the three beehive conditions on a triangulation of P: the unit
    segments of the interior boundary are edges, every ring cell joins its
    end points, and every ring cell reaches min(n, m - 1) doubly-connected
    points.
    """
    if not is_unimodular(t) or not t.covers():
        return False
    if set(t.point_set.points) != set(lattice_points(P)):
        return False
    if P.dimension < 2 or is_hyperelliptic_polygon(P) or not is_maximal(P):
        return False
    if not isinstance(t, Triangulation):
        t = Triangulation(t.point_set, t.cells)

    for ring in ring_cells(P):
        for a, b in zip(ring.nu, ring.nu[1:]):
            if not t.has_edge(a, b):
                logger.debug("interior edge %s-%s missing", a, b)
                return False
        if not t.has_edge(ring.nu[0], ring.mu[0]) or not t.has_edge(ring.nu[-1], ring.mu[-1]):
            logger.debug("ring cell %s is not joined at its ends", ring)
            return False
        found = doubly_connected_count(t, ring.nu, ring.mu)
        if found != ring.max_doubly_connected:
            logger.debug("ring cell %s has %d doubly-connected points, want %d",
                         ring, found, ring.max_doubly_connected)
            return False
    return True
