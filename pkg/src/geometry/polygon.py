"""
Lattice points, lattice polygons and unimodular affine maps.

Everything here works in exact integer arithmetic. Polygons are immutable
values: their vertex list is counterclockwise, strictly convex and starts
at the lexicographically least vertex, so two polygons with the same
vertex set compare equal.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, NamedTuple, Optional, Tuple

from ..errors import DegenerateInputError, InputFormatError, PreconditionError
from ..utils.helpers import int_pair


class LatticePoint(NamedTuple):
    x: int
    y: int


def cross(o, a, b) -> int:
    """Twice the signed area of the triangle o, a, b."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def primitive(v) -> Tuple[int, int]:
    """Divide an integer vector by the gcd of its entries."""
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise DegenerateInputError("zero vector has no primitive direction")
    return v[0] // g, v[1] // g


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points, stored by its corners."""

    vertices: Tuple[LatticePoint, ...]

    def __post_init__(self):
        verts = tuple(LatticePoint(int(p[0]), int(p[1])) for p in self.vertices)
        if not verts:
            raise DegenerateInputError("no points")
        n = len(verts)
        if n == 2 and verts[0] == verts[1]:
            raise PreconditionError("segment endpoints coincide")
        if n >= 3:
            for i in range(n):
                if cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) <= 0:
                    raise PreconditionError(
                        f"vertices are not strictly convex counterclockwise at {verts[(i + 1) % n]}")
        start = verts.index(min(verts))
        object.__setattr__(self, "vertices", verts[start:] + verts[:start])

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def edges(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        """Counterclockwise directed edges (empty below dimension 2)."""
        if self.dimension < 2:
            return []
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def bounding_box(self) -> Tuple[int, int, int, int]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def to_dict(self):
        return {"vertices": [[p.x, p.y] for p in self.vertices]}

    @classmethod
    def from_dict(cls, data, where="polygon"):
        """Read {"vertices": [[x, y], ...]} in any order and re-normalize."""
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputFormatError(f"{where}: expected an object with a 'vertices' list")
        raw = data["vertices"]
        if not isinstance(raw, list) or not raw:
            raise InputFormatError(f"{where}.vertices: expected a non-empty list")
        points = [int_pair(v, f"{where}.vertices[{i}]") for i, v in enumerate(raw)]
        return convex_hull(points)

    def __str__(self):
        return "conv{" + ", ".join(f"({p.x},{p.y})" for p in self.vertices) + "}"


@dataclass(frozen=True)
class AffineMap:
    """The unimodular map z -> matrix * z + translation."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    translation: LatticePoint = field(default=LatticePoint(0, 0))

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        object.__setattr__(self, "matrix", ((int(a), int(b)), (int(c), int(d))))
        object.__setattr__(self, "translation", LatticePoint(*self.translation))
        if abs(a * d - b * c) != 1:
            raise PreconditionError(f"matrix {self.matrix} is not unimodular (det {a * d - b * c})")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def translation_by(cls, dx: int, dy: int) -> "AffineMap":
        return cls(((1, 0), (0, 1)), LatticePoint(dx, dy))

    @classmethod
    def random(cls, rng, bound: int = 5, shift: int = 5) -> "AffineMap":
        """A uniformly drawn unimodular map with matrix entries in [-bound, bound]."""
        while True:
            a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
            if abs(a * d - b * c) == 1:
                return cls(((a, b), (c, d)), LatticePoint(rng.randint(-shift, shift), rng.randint(-shift, shift)))

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p) -> LatticePoint:
        (a, b), (c, d) = self.matrix
        return LatticePoint(a * p[0] + b * p[1] + self.translation.x,
                            c * p[0] + d * p[1] + self.translation.y)

    def compose(self, first: "AffineMap") -> "AffineMap":
        """The map self after first."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = first.matrix
        matrix = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return AffineMap(matrix, self(first.translation))

    def inverse(self) -> "AffineMap":
        (a, b), (c, d) = self.matrix
        det = self.determinant
        matrix = ((d * det, -b * det), (-c * det, a * det))
        linear = AffineMap(matrix)
        t = linear(self.translation)
        return AffineMap(matrix, LatticePoint(-t.x, -t.y))


def convex_hull(points: Iterable) -> LatticePolygon:
    """Minimal counterclockwise hull of a non-empty point collection."""
    pts = sorted({LatticePoint(int(p[0]), int(p[1])) for p in points})
    if not pts:
        raise DegenerateInputError("no points")
    if len(pts) == 1:
        return LatticePolygon((pts[0],))

    lower: List[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return LatticePolygon(tuple(lower[:-1] + upper[:-1]))


@lru_cache(maxsize=None)
def half_planes(P: LatticePolygon) -> Tuple[Tuple[int, int, int], ...]:
    """Primitive edge inequalities (alpha, beta, gamma) meaning alpha*x + beta*y <= gamma."""
    result = []
    for p, q in P.edges:
        dx, dy = q.x - p.x, q.y - p.y
        g = math.gcd(dx, dy)
        alpha, beta = dy // g, -dx // g
        result.append((alpha, beta, alpha * p.x + beta * p.y))
    return tuple(result)


def contains(P: LatticePolygon, z) -> bool:
    """Closed containment test."""
    if P.dimension == 2:
        return all(a * z[0] + b * z[1] <= c for a, b, c in half_planes(P))
    if P.dimension == 0:
        return tuple(z) == tuple(P.vertices[0])
    p, q = P.vertices
    if cross(p, q, z) != 0:
        return False
    return min(p.x, q.x) <= z[0] <= max(p.x, q.x) and min(p.y, q.y) <= z[1] <= max(p.y, q.y)


@lru_cache(maxsize=None)
def lattice_points(P: LatticePolygon) -> Tuple[LatticePoint, ...]:
    """All lattice points of P in lexicographic order."""
    if P.dimension == 0:
        return P.vertices
    if P.dimension == 1:
        p, q = P.vertices
        g = math.gcd(q.x - p.x, q.y - p.y)
        step = ((q.x - p.x) // g, (q.y - p.y) // g)
        return tuple(sorted(LatticePoint(p.x + k * step[0], p.y + k * step[1]) for k in range(g + 1)))
    x0, x1, y0, y1 = P.bounding_box()
    planes = half_planes(P)
    return tuple(LatticePoint(x, y)
                 for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
                 if all(a * x + b * y <= c for a, b, c in planes))


@lru_cache(maxsize=None)
def interior_points(P: LatticePolygon) -> Tuple[LatticePoint, ...]:
    """Lattice points in the topological interior of P (none below dimension 2)."""
    if P.dimension < 2:
        return ()
    planes = half_planes(P)
    return tuple(z for z in lattice_points(P)
                 if all(a * z.x + b * z.y < c for a, b, c in planes))


def boundary_lattice_points(P: LatticePolygon) -> Tuple[LatticePoint, ...]:
    inner = set(interior_points(P))
    return tuple(z for z in lattice_points(P) if z not in inner)


def genus(P: LatticePolygon) -> int:
    return len(interior_points(P))


def boundary_points(P: LatticePolygon) -> int:
    """Number of lattice points on the boundary of P."""
    if P.dimension == 0:
        return 1
    if P.dimension == 1:
        p, q = P.vertices
        return math.gcd(q.x - p.x, q.y - p.y) + 1
    return sum(math.gcd(q.x - p.x, q.y - p.y) for p, q in P.edges)


def area_doubled(P: LatticePolygon) -> int:
    if P.dimension < 2:
        return 0
    return sum(p.x * q.y - q.x * p.y for p, q in P.edges)


def interior_polygon(P: LatticePolygon) -> Optional[LatticePolygon]:
    """Hull of the interior lattice points, or None when there are none."""
    pts = interior_points(P)
    if not pts:
        return None
    return convex_hull(pts)


def relaxed_planes(P: LatticePolygon) -> Tuple[Tuple[int, int, int], ...]:
    if P.dimension < 2:
        raise DegenerateInputError("relaxation undefined for a polygon of dimension < 2")
    return tuple((a, b, c + 1) for a, b, c in half_planes(P))


def relaxed_vertices(P: LatticePolygon) -> List[Tuple[Fraction, Fraction]]:
    """Exact vertices of the rational polygon obtained by pushing every edge out by one."""
    planes = relaxed_planes(P)
    found = set()
    for i, (a1, b1, c1) in enumerate(planes):
        for a2, b2, c2 in planes[i + 1:]:
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(c1 * b2 - c2 * b1, det)
            y = Fraction(a1 * c2 - a2 * c1, det)
            if all(a * x + b * y <= c for a, b, c in planes):
                found.add((x, y))
    return sorted(found)


@lru_cache(maxsize=None)
def relax(P: LatticePolygon) -> Optional[LatticePolygon]:
    """
    Relaxed polygon of P.

    Returns:
        The lattice polygon bounded by the outward-shifted edge lines, or
        None when one of its vertices is not a lattice point.
    """
    verts = relaxed_vertices(P)
    if any(x.denominator != 1 or y.denominator != 1 for x, y in verts):
        return None
    return convex_hull((int(x), int(y)) for x, y in verts)


def relaxed_region_points(P: LatticePolygon) -> List[LatticePoint]:
    """Lattice points of the (possibly non-lattice) relaxed region of P."""
    planes = relaxed_planes(P)
    verts = relaxed_vertices(P)
    x0 = math.floor(min(v[0] for v in verts))
    x1 = math.ceil(max(v[0] for v in verts))
    y0 = math.floor(min(v[1] for v in verts))
    y1 = math.ceil(max(v[1] for v in verts))
    return [LatticePoint(x, y)
            for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
            if all(a * x + b * y <= c for a, b, c in planes)]


def apply_map(P: LatticePolygon, m: AffineMap) -> LatticePolygon:
    return convex_hull(m(p) for p in P.vertices)


def shear(P: LatticePolygon, ell: int) -> LatticePolygon:
    """Image of P under (x, y) -> (x + ell*y, y)."""
    return apply_map(P, AffineMap(((1, ell), (0, 1))))


def translate(P: LatticePolygon, dx: int, dy: int) -> LatticePolygon:
    return apply_map(P, AffineMap.translation_by(dx, dy))


REFLECTION = AffineMap(((-1, 0), (0, 1)))


def _edge_normalizations(P: LatticePolygon):
    """Maps sending an edge of P onto the positive x-axis with P above it."""
    for p, q in P.edges:
        u, v = primitive((q.x - p.x, q.y - p.y))
        _, s, t = ext_gcd(u, v)
        rotate = AffineMap(((s, t), (-v, u)))
        start = rotate(p)
        moved = AffineMap.translation_by(-start.x, -start.y).compose(rotate)
        image = [moved(z) for z in P.vertices]
        height = max(z.y for z in image)
        top_x = min(z.x for z in image if z.y == height)
        k = (top_x % height - top_x) // height
        yield AffineMap(((1, k), (0, 1))).compose(moved)


@lru_cache(maxsize=None)
def canonical_form(P: LatticePolygon) -> LatticePolygon:
    """Lexicographically least representative of the unimodular class of P."""
    if P.dimension == 0:
        return LatticePolygon((LatticePoint(0, 0),))
    if P.dimension == 1:
        return LatticePolygon((LatticePoint(0, 0), LatticePoint(boundary_points(P) - 1, 0)))
    best = None
    for Q in (P, apply_map(P, REFLECTION)):
        for m in _edge_normalizations(Q):
            image = apply_map(Q, m)
            if best is None or image.vertices < best.vertices:
                best = image
    return best


def is_equivalent(P: LatticePolygon, Q: LatticePolygon) -> bool:
    return canonical_form(P) == canonical_form(Q)


def simplex(d: int) -> LatticePolygon:
    """The standard triangle d*Sigma = conv{(0,0), (d,0), (0,d)}."""
    return convex_hull([(0, 0), (d, 0), (0, d)])


def upsilon(d: int = 1) -> LatticePolygon:
    """d*Upsilon = conv{(-d,-d), (d,0), (0,d)}."""
    return convex_hull([(-d, -d), (d, 0), (0, d)])


def rectangle(m: int, n: int) -> LatticePolygon:
    return convex_hull([(0, 0), (m, 0), (m, n), (0, n)])
