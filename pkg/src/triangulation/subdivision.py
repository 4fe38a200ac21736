"""
Regular subdivisions of lattice point sets.

A height function lifts every lattice point of a polygon to 3-space; the
cells of the induced subdivision are the projections of the lower faces of
the lifted point set. Everything is computed with integer orientation
determinants after clearing denominators.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from scipy.optimize import linprog

from ..errors import DegenerateInputError, InputFormatError, PreconditionError
from ..geometry.invariants import lattice_width
from ..geometry.polygon import (
    LatticePoint,
    LatticePolygon,
    area_doubled,
    contains,
    convex_hull,
    lattice_points,
)
from ..utils.helpers import int_pair, is_int, json_list

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]


@dataclass(frozen=True)
class PointSet:
    points: Tuple[LatticePoint, ...]
    _index: Dict[LatticePoint, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pts = tuple(LatticePoint(int(p[0]), int(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        index = {p: i for i, p in enumerate(pts)}
        if len(index) != len(pts):
            raise PreconditionError("point set has repeated points")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_polygon(cls, P: LatticePolygon) -> "PointSet":
        return cls(lattice_points(P))

    def __len__(self):
        return len(self.points)

    def index_of(self, p) -> int:
        return self._index[LatticePoint(p[0], p[1])]

    def __contains__(self, p) -> bool:
        return LatticePoint(p[0], p[1]) in self._index

    def hull(self) -> LatticePolygon:
        return convex_hull(self.points)


@dataclass(frozen=True)
class HeightFunction:
    values: Tuple[Fraction, ...]

    @classmethod
    def from_function(cls, ps: PointSet, f: Callable[[int, int], object]) -> "HeightFunction":
        return cls(tuple(Fraction(f(p.x, p.y)) for p in ps.points))

    @classmethod
    def constant(cls, ps: PointSet, value=0) -> "HeightFunction":
        return cls((Fraction(value),) * len(ps))

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def plus_affine(self, ps: PointSet, a, b, c) -> "HeightFunction":
        return HeightFunction(tuple(v + a * p.x + b * p.y + c for v, p in zip(self.values, ps.points)))


def paraboloid(ps: PointSet) -> HeightFunction:
    return HeightFunction.from_function(ps, lambda x, y: x * x + y * y)


@dataclass(frozen=True)
class Subdivision:
    """Cells are counterclockwise corner-index tuples into point_set."""

    point_set: PointSet
    cells: Tuple[Cell, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(tuple(c) for c in self.cells)))

    def cell_polygon(self, cell: Cell) -> LatticePolygon:
        return LatticePolygon(tuple(self.point_set.points[i] for i in cell))

    def cell_point_indices(self, cell: Cell) -> List[int]:
        """All lattice points of a cell, corners or not."""
        return [self.point_set.index_of(p) for p in lattice_points(self.cell_polygon(cell))]

    def covers(self) -> bool:
        """Cells partition the hull of the point set (area test)."""
        total = sum(area_doubled(self.cell_polygon(c)) for c in self.cells)
        return total == area_doubled(self.point_set.hull())

    @property
    def is_trivial(self) -> bool:
        return len(self.cells) == 1

    def to_dict(self):
        return {
            "points": [[p.x, p.y] for p in self.point_set.points],
            "cells": [list(c) for c in self.cells],
        }


class Triangulation(Subdivision):
    """A subdivision into triangles of doubled area 1."""

    def __post_init__(self):
        super().__post_init__()
        for cell in self.cells:
            if len(cell) != 3 or area_doubled(self.cell_polygon(cell)) != 1:
                raise PreconditionError(f"cell {cell} is not a unimodular triangle")

    def edge_map(self) -> Dict[Tuple[int, int], List[int]]:
        """Edge (i, j) with i < j -> indices of the triangles containing it."""
        edges: Dict[Tuple[int, int], List[int]] = {}
        for t, cell in enumerate(self.cells):
            for k in range(3):
                i, j = cell[k], cell[(k + 1) % 3]
                edges.setdefault((min(i, j), max(i, j)), []).append(t)
        return edges

    def has_edge(self, p, q) -> bool:
        i, j = self.point_set.index_of(p), self.point_set.index_of(q)
        return (min(i, j), max(i, j)) in self.edge_map()

    def neighbors(self, p) -> List[LatticePoint]:
        i = self.point_set.index_of(p)
        out = set()
        for a, b in self.edge_map():
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return sorted(self.point_set.points[k] for k in out)

    @classmethod
    def from_dict(cls, data, where="triangulation") -> "Triangulation":
        if not isinstance(data, dict) or "points" not in data or "cells" not in data:
            raise InputFormatError(f"{where}: expected an object with 'points' and 'cells'")
        raw_points = json_list(data["points"], f"{where}.points")
        points = [int_pair(p, f"{where}.points[{i}]") for i, p in enumerate(raw_points)]
        n = len(points)
        cells = []
        for i, cell in enumerate(json_list(data["cells"], f"{where}.cells")):
            if (not isinstance(cell, list) or len(cell) != 3
                    or not all(is_int(k) and 0 <= k < n for k in cell) or len(set(cell)) != 3):
                raise InputFormatError(f"{where}.cells[{i}]: expected three distinct point indices")
            corners = _ccw(points, cell)
            if len(corners) != 3:
                raise InputFormatError(f"{where}.cells[{i}]: corners are collinear")
            cells.append(corners)
        try:
            return cls(PointSet(points), cells)
        except PreconditionError as e:
            raise InputFormatError(f"{where}: {e}") from e


def _ccw(points: Sequence, corner_indices: Iterable[int]) -> Cell:
    """Corner indices reordered counterclockwise from the lexicographically least point."""
    idx = list(corner_indices)
    hull = convex_hull(points[i] for i in idx)
    lookup = {tuple(points[i]): i for i in idx}
    return tuple(lookup[tuple(v)] for v in hull.vertices)


def _scaled_heights(h: HeightFunction, indices: Sequence[int]) -> Dict[int, int]:
    scale = 1
    for i in indices:
        scale = scale * h[i].denominator // math.gcd(scale, h[i].denominator)
    return {i: int(h[i] * scale) for i in indices}


def _lower_faces(ps: PointSet, h: HeightFunction, indices: Sequence[int]) -> List[Cell]:
    pts = ps.points
    z = _scaled_heights(h, indices)
    idx = sorted(indices)
    faces: List[frozenset] = []
    cells: List[Cell] = []
    for a in range(len(idx)):
        i = idx[a]
        for b in range(a + 1, len(idx)):
            j = idx[b]
            for c in range(b + 1, len(idx)):
                k = idx[c]
                if any(i in f and j in f and k in f for f in faces):
                    continue
                ux, uy, uz = pts[j].x - pts[i].x, pts[j].y - pts[i].y, z[j] - z[i]
                vx, vy, vz = pts[k].x - pts[i].x, pts[k].y - pts[i].y, z[k] - z[i]
                nz = ux * vy - uy * vx
                if nz == 0:
                    continue
                nx = uy * vz - uz * vy
                ny = uz * vx - ux * vz
                if nz < 0:
                    nx, ny, nz = -nx, -ny, -nz
                on_plane = []
                lower = True
                for q in idx:
                    s = nx * (pts[q].x - pts[i].x) + ny * (pts[q].y - pts[i].y) + nz * (z[q] - z[i])
                    if s < 0:
                        lower = False
                        break
                    if s == 0:
                        on_plane.append(q)
                if not lower:
                    continue
                face = frozenset(on_plane)
                faces.append(face)
                hull = convex_hull(pts[q] for q in face)
                cells.append(tuple(ps.index_of(v) for v in hull.vertices))
    return cells


def _span_dimension(ps: PointSet, indices: Sequence[int]) -> int:
    return convex_hull(ps.points[i] for i in indices).dimension


def regular_subdivision(ps: PointSet, h: HeightFunction) -> Subdivision:
    """Project the lower faces of the lifted points {(x, y, h(x, y))}."""
    if len(ps) == 0 or _span_dimension(ps, range(len(ps))) < 2:
        raise DegenerateInputError("point set does not span dimension 2")
    return Subdivision(ps, _lower_faces(ps, h, range(len(ps))))


def refine(s: Subdivision, h: HeightFunction) -> Subdivision:
    """Subdivide every cell of s by the lower faces of h restricted to that cell."""
    cells: List[Cell] = []
    for cell in s.cells:
        cells.extend(_lower_faces(s.point_set, h, s.cell_point_indices(cell)))
    return Subdivision(s.point_set, cells)


def refines(fine: Subdivision, coarse: Subdivision) -> bool:
    """Every cell of fine lies inside a cell of coarse."""
    coarse_polys = [coarse.cell_polygon(c) for c in coarse.cells]
    for cell in fine.cells:
        corners = fine.cell_polygon(cell).vertices
        if not any(all(contains(C, v) for v in corners) for C in coarse_polys):
            return False
    return True


def trivial_subdivision(ps: PointSet) -> Subdivision:
    hull = ps.hull()
    if hull.dimension < 2:
        raise DegenerateInputError("point set does not span dimension 2")
    return Subdivision(ps, [tuple(ps.index_of(v) for v in hull.vertices)])


def is_unimodular(s: Subdivision) -> bool:
    return all(len(c) == 3 and area_doubled(s.cell_polygon(c)) == 1 for c in s.cells)


def staircase(nu: Sequence, mu: Sequence, counts: Sequence[int]) -> List[Tuple]:
    """
    Triangles of a width-one trapezoid between the point rows nu and mu.

    Both rows run in the same direction. counts[i] is the number of mu
    steps taken while standing on nu[i]; they must sum to len(mu) - 1.
    """
    if len(counts) != len(nu) or sum(counts) != len(mu) - 1 or min(counts) < 0:
        raise PreconditionError(f"step counts {list(counts)} do not fit rows of {len(nu)} and {len(mu)} points")
    triangles = []
    j = 0
    for i, steps in enumerate(counts):
        for _ in range(steps):
            triangles.append((nu[i], mu[j], mu[j + 1]))
            j += 1
        if i + 1 < len(nu):
            triangles.append((nu[i], nu[i + 1], mu[j]))
    return triangles


def zigzag_counts(n: int, m: int) -> List[int]:
    """
    Step counts for staircase() that join as many of the n points as
    possible to two or more of the m points, namely min(n, m - 1).

    The first and last of the n points each take a step whenever m >= 3.
    """
    if n < 1 or m < 1:
        raise PreconditionError(f"zig-zag needs non-empty rows, got n={n}, m={m}")
    if m == 1:
        return [0] * n
    if m - 1 >= n:
        return [m - n] + [1] * (n - 1)
    counts = [0] * n
    if m == 2:
        counts[0] = 1
        return counts
    for i in range(m - 2):
        counts[i] = 1
    counts[n - 1] = 1
    return counts


def split_rows(points: Sequence[LatticePoint]) -> Tuple[List[LatticePoint], List[LatticePoint]]:
    """
    Split the points of a width-one cell into its two rows.

    The row holding the lexicographically least point comes first; both
    rows are sorted lexicographically, which orders them the same way.
    """
    hull = convex_hull(points)
    width, (a, b) = lattice_width(hull)
    if width != 1:
        raise PreconditionError(f"{hull} has lattice width {width}, not 1")
    first = min(points)
    level = a * first.x + b * first.y
    near = sorted(p for p in points if a * p.x + b * p.y == level)
    far = sorted(p for p in points if a * p.x + b * p.y != level)
    return near, far


def _complete_cell(ps: PointSet, polygon: LatticePolygon, out: List[Cell]):
    pts = lattice_points(polygon)
    corners = polygon.vertices
    if len(corners) == 3 and area_doubled(polygon) == 1:
        out.append(tuple(ps.index_of(v) for v in corners))
        return
    if len(pts) == 4 and len(corners) == 4:
        c0, c1, c2, c3 = corners
        out.append(_ccw(ps.points, [ps.index_of(c) for c in (c0, c1, c2)]))
        out.append(_ccw(ps.points, [ps.index_of(c) for c in (c0, c2, c3)]))
        return
    if lattice_width(polygon)[0] == 1:
        nu, mu = split_rows(pts)
        for tri in staircase(nu, mu, zigzag_counts(len(nu), len(mu))):
            out.append(_ccw(ps.points, [ps.index_of(p) for p in tri]))
        return
    indices = [ps.index_of(p) for p in pts]
    pieces = _lower_faces(ps, paraboloid(ps), indices)
    if len(pieces) == 1:
        raise PreconditionError(f"paraboloid failed to subdivide {polygon}")
    for piece in sorted(pieces):
        _complete_cell(ps, LatticePolygon(tuple(ps.points[i] for i in piece)), out)


def complete_to_unimodular(s: Subdivision) -> Triangulation:
    """
    Refine every cell until all cells are unimodular triangles.

    Width-one cells are cut by the zig-zag staircase, unit parallelograms by
    the diagonal through their lexicographically least corner, and any
    other cell is refined by the paraboloid x^2 + y^2 first.
    """
    out: List[Cell] = []
    for cell in sorted(s.cells, key=lambda c: sorted(s.point_set.points[i] for i in c)):
        _complete_cell(s.point_set, s.cell_polygon(cell), out)
    return Triangulation(s.point_set, out)


def unimodular_triangulation(P: LatticePolygon) -> Triangulation:
    return complete_to_unimodular(trivial_subdivision(PointSet.from_polygon(P)))


def _barycentric(points: Sequence[LatticePoint], corners: Sequence[int], q: int) -> Tuple[Fraction, ...]:
    """Coordinates of points[q] in the affine frame of a triangle, summing to 1."""
    pi, pj, pk = (points[c] for c in corners)
    ux, uy = pi.x - pk.x, pi.y - pk.y
    vx, vy = pj.x - pk.x, pj.y - pk.y
    wx, wy = points[q].x - pk.x, points[q].y - pk.y
    det = ux * vy - uy * vx
    a = Fraction(wx * vy - wy * vx, det)
    b = Fraction(ux * wy - uy * wx, det)
    return a, b, 1 - a - b


def regularity_heights(t: Triangulation) -> Optional[HeightFunction]:
    """
    Integer heights whose lower faces are exactly the triangles of t.

    Every interior edge must fold upward: across the edge, the far corner
    of one triangle lies strictly above the plane of the other. The folds
    are linear in the heights, so a linear program settles feasibility;
    the rounded heights are then checked exactly with regular_subdivision.

    Returns:
        The heights, or None when t is not regular
    Raises:
        PreconditionError: some point of the point set is not a corner of t
    """
    ps = t.point_set
    n = len(ps)
    if {i for cell in t.cells for i in cell} != set(range(n)):
        raise PreconditionError("regularity test needs every point to be a corner of the triangulation")
    rows = []
    for (i, j), triangles in t.edge_map().items():
        if len(triangles) != 2:
            continue
        first, second = (t.cells[k] for k in triangles)
        k = next(c for c in first if c not in (i, j))
        far = next(c for c in second if c not in (i, j))
        row = [0.0] * n
        # h[far] - sum(lambda * h[corner]) >= 1, written as <= -1
        row[far] = -1.0
        for corner, weight in zip((i, j, k), _barycentric(ps.points, (i, j, k), far)):
            row[corner] += float(weight)
        rows.append(row)
    if not rows:
        return HeightFunction.constant(ps)

    result = linprog(c=[1.0] * n, A_ub=rows, b_ub=[-1.0] * len(rows), bounds=[(0, None)] * n, method="highs")
    if result.status != 0:
        logger.debug("no folding heights: %s", result.message)
        return None
    scale = max(sum(abs(x) for x in row) for row in rows)
    heights = HeightFunction(tuple(Fraction(round(x * scale)) for x in result.x))
    induced = {frozenset(c) for c in regular_subdivision(ps, heights).cells}
    if induced != {frozenset(c) for c in t.cells}:
        logger.warning("rounded heights do not reproduce the triangulation")
        return None
    return heights


def is_regular(t: Triangulation) -> bool:
    return regularity_heights(t) is not None
