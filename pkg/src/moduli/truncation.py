"""
Strip normalization and truncations of lattice polygons.

A polygon of lattice width d is moved into the strip R x [0, d]; its
truncation is the hull of the points lying on the four sides of the
smallest enclosing rectangle. The truncation is recorded as the top and
bottom edge lengths plus four corner cuts.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from ..errors import PreconditionError
from ..geometry.invariants import lattice_width
from ..geometry.polygon import (
    AffineMap,
    LatticePolygon,
    apply_map,
    boundary_lattice_points,
    convex_hull,
    ext_gcd,
    genus,
    lattice_points,
)

logger = logging.getLogger(__name__)

CORNERS = ("NW", "NE", "SE", "SW")


class Cut(NamedTuple):
    corner: str
    x: int
    y: int

    @property
    def is_cut(self) -> bool:
        return self.x > 0


def _row_min_x(P: LatticePolygon, y: int) -> int:
    return min(p.x for p in P.vertices if p.y == y)


def _extent(P: LatticePolygon) -> int:
    x0, x1, _, _ = P.bounding_box()
    return x1 - x0


def strip_normalize(P: LatticePolygon) -> Tuple[LatticePolygon, AffineMap]:
    """
    Move P into R x [0, lw(P)] with x_min = 0.

    The width direction is the one reported by lattice_width. Among the
    shears keeping the strip, the one with the smallest horizontal extent
    wins; ties prefer x_min(row 0) <= x_min(row d), then the smallest |l|.

    Returns:
        (normalized polygon, unimodular map taking P onto it)
    """
    if P.dimension < 2:
        raise PreconditionError("strip normalization needs a two-dimensional polygon")
    width, (a, b) = lattice_width(P)
    _, s, t = ext_gcd(a, b)
    rotate = AffineMap(((t, -s), (a, b)))
    image = apply_map(P, rotate)
    y_min = min(p.y for p in image.vertices)
    base = AffineMap.translation_by(0, -y_min).compose(rotate)
    Q = apply_map(P, base)

    span = _extent(Q)
    best = None
    for magnitude in range(0, 2 * span + 2):
        for ell in ((0,) if magnitude == 0 else (-magnitude, magnitude)):
            S = apply_map(Q, AffineMap(((1, ell), (0, 1))))
            ordered = _row_min_x(S, 0) <= _row_min_x(S, width)
            key = (_extent(S), not ordered, abs(ell))
            if best is None or key < best[0]:
                best = (key, ell)
    ell = best[1]
    sheared = AffineMap(((1, ell), (0, 1))).compose(base)
    S = apply_map(P, sheared)
    x_min = S.bounding_box()[0]
    m = AffineMap.translation_by(-x_min, 0).compose(sheared)
    return apply_map(P, m), m


def row_points(P: LatticePolygon, y: int) -> List[int]:
    """x-coordinates of the lattice points of P on the row y."""
    return [p.x for p in lattice_points(P) if p.y == y]


def boundary_row_counts(Q: LatticePolygon) -> List[int]:
    """Number of boundary lattice points on each row y = 0..d of a strip-normalized polygon."""
    d = Q.bounding_box()[3]
    counts = [0] * (d + 1)
    for p in boundary_lattice_points(Q):
        counts[p.y] += 1
    return counts


@dataclass(frozen=True)
class Truncation:
    strip_height: int
    rect_left: int
    rect_right: int
    a: int
    b: int
    cuts: Tuple[Cut, Cut, Cut, Cut]
    strip_polygon: LatticePolygon

    def cut_legs(self) -> List[Tuple[int, int]]:
        return [(c.x, c.y) for c in self.cuts if c.is_cut]

    def polygon(self) -> LatticePolygon:
        """P_trunc, as a subset of the strip-normalized polygon."""
        d, left, right = self.strip_height, self.rect_left, self.rect_right
        nw, ne, se, sw = self.cuts
        return convex_hull([
            (left + nw.x, d), (right - ne.x, d),
            (right, d - ne.y), (right, se.y),
            (right - se.x, 0), (left + sw.x, 0),
            (left, sw.y), (left, d - nw.y),
        ])

    def area_doubled(self) -> int:
        total_x = sum(c.x for c in self.cuts)
        return (total_x + self.a + self.b) * self.strip_height - sum(c.x * c.y for c in self.cuts)

    def boundary_points(self) -> int:
        return (self.a + self.b + 2 * self.strip_height
                - sum(c.y - math.gcd(c.x, c.y) for c in self.cuts))

    def penalties(self) -> List[Fraction]:
        return [cut_penalty(c.x, c.y, self.strip_height) for c in self.cuts if c.is_cut]

    def to_dict(self):
        return {
            "strip_height": self.strip_height,
            "rect_left": self.rect_left,
            "rect_right": self.rect_right,
            "a": self.a,
            "b": self.b,
            "cuts": [{"corner": c.corner, "x": c.x, "y": c.y} for c in self.cuts],
        }


def truncate(P: LatticePolygon) -> Truncation:
    Q, _ = strip_normalize(P)
    _, right, _, d = Q.bounding_box()
    top = sorted(p.x for p in Q.vertices if p.y == d)
    bottom = sorted(p.x for p in Q.vertices if p.y == 0)
    left = sorted(p.y for p in Q.vertices if p.x == 0)
    east = sorted(p.y for p in Q.vertices if p.x == right)
    cuts = (
        Cut("NW", top[0], d - left[-1]),
        Cut("NE", right - top[-1], d - east[-1]),
        Cut("SE", right - bottom[-1], east[0]),
        Cut("SW", bottom[0], left[0]),
    )
    for c in cuts:
        if (c.x == 0) != (c.y == 0):
            raise PreconditionError(f"inconsistent corner {c} in strip image {Q}")
    return Truncation(d, 0, right, top[-1] - top[0], bottom[-1] - bottom[0], cuts, Q)


def cut_penalty(x: int, y: int, d: int) -> Fraction:
    """X = (x(y - d) - (y - gcd(x, y))) / (d - 1) for a corner cut with legs (x, y)."""
    if d < 2:
        raise PreconditionError(f"strip height {d} must be at least 2")
    if x < 1 or y < 1:
        raise PreconditionError(f"({x}, {y}) is not a cut")
    return Fraction(x * (y - d) - (y - math.gcd(x, y)), d - 1)


def ab_bound_holds(P: LatticePolygon) -> bool:
    """a + b <= 2g/(d-1) + 2 + sum of cut penalties, in exact arithmetic."""
    t = truncate(P)
    d = t.strip_height
    if d < 2:
        raise PreconditionError("the a+b bound needs lattice width at least 2")
    bound = Fraction(2 * genus(P), d - 1) + 2 + sum(t.penalties(), Fraction(0))
    logger.debug("a+b = %d, bound %s for %s", t.a + t.b, bound, P)
    return t.a + t.b <= bound
