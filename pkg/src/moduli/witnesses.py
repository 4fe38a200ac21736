"""
Explicit polygons attaining (or nearly attaining) the bound U(g, d).

All families are truncated rectangles [0, m] x [0, d] with isosceles
corner cuts. Each constructor checks its own postconditions and raises
FalsificationError if the constructed polygon does not behave.
"""
import itertools
import logging
import math
from fractions import Fraction
from typing import Dict, List, Tuple

from ..errors import FalsificationError, PreconditionError
from ..geometry.invariants import column_vectors, expected_gonality, is_maximal, lattice_width
from ..geometry.polygon import LatticePolygon, convex_hull, genus, interior_polygon, relax
from .dimension import moduli_dim, upper_bound_U
from .truncation import Truncation

logger = logging.getLogger(__name__)


def truncated_rectangle(m: int, d: int, cuts: Dict[str, int]) -> LatticePolygon:
    """
    The rectangle [0, m] x [0, d] minus isosceles corner triangles.

    Args:
        m: rectangle width
        d: rectangle height
        cuts: corner tag (NW, NE, SE, SW) -> leg length
    """
    nw, ne = cuts.get("NW", 0), cuts.get("NE", 0)
    se, sw = cuts.get("SE", 0), cuts.get("SW", 0)
    return convex_hull([
        (nw, d), (m - ne, d), (m, d - ne), (m, se),
        (m - se, 0), (sw, 0), (0, sw), (0, d - nw),
    ])


def _require_maximal(P: LatticePolygon, label: str):
    if P.dimension < 2 or not is_maximal(P):
        raise FalsificationError(f"{label}: {P} is not maximal", witness=P)


def _check(P: LatticePolygon, expect_genus: int, expect_egon: int, expect_dim: int, label: str):
    _require_maximal(P, label)
    actual = (genus(P), expected_gonality(P), moduli_dim(P))
    if actual != (expect_genus, expect_egon, expect_dim):
        raise FalsificationError(
            f"{label}: expected (genus, egon, dim) = {(expect_genus, expect_egon, expect_dim)}, got {actual} for {P}",
            witness=P,
        )


def witness_d4(g: int) -> LatticePolygon:
    """Gonality-4 polygon of genus g with dim(M_P) = floor(U(g, 4))."""
    if g < 7 or g % 3 != 1:
        raise PreconditionError(f"witness_d4 needs g >= 7 with g = 1 mod 3, got {g}")
    m = (g - 1) // 3 + 2
    P = truncated_rectangle(m, 4, {"NE": 2, "SW": 2})
    _check(P, g, 4, math.floor(upper_bound_U(g, 4)), f"witness_d4({g})")
    return P


_D5_CASES = {
    0: (8, {"NE": 3, "SW": 2}),
    1: (7, {"NE": 3}),
    2: (6, {"NE": 2, "SW": 2}),
    3: (5, {"NE": 2}),
}


def witness_d5(g: int) -> LatticePolygon:
    """Gonality-5 polygon of genus g with dim(M_P) = floor(U(g, 5)) - 1."""
    if g < 12:
        raise PreconditionError(f"witness_d5 needs g >= 12, got {g}")
    shift, cuts = _D5_CASES[g % 4]
    P = truncated_rectangle((g + shift) // 4, 5, cuts)
    _check(P, g, 5, math.floor(upper_bound_U(g, 5)) - 1, f"witness_d5({g})")
    return P


def chrangledim(P: LatticePolygon, truncation: Truncation) -> Fraction:
    """
    Closed form U + 2 + sum x(x - d)/(d - 1) - c(P) for a truncated rectangle.

    Valid when P equals its own truncation and every cut is isosceles.
    """
    d = truncation.strip_height
    legs = truncation.cut_legs()
    if any(x != y for x, y in legs):
        raise PreconditionError(f"cuts {legs} are not isosceles")
    if truncation.polygon() != truncation.strip_polygon:
        raise PreconditionError(f"{P} is not a truncated rectangle")
    total = sum((Fraction(x * (x - d), d - 1) for x, _ in legs), Fraction(0))
    return upper_bound_U(genus(P), d) + 2 + total - len(column_vectors(P))


def triangular(n: int) -> int:
    return n * (n + 1) // 2


def triangular_decomposition(k: int, parts: int = 4) -> Tuple[int, ...]:
    """Indices t_1 >= ... >= t_parts with sum of triangular numbers T_{t_i} equal to k."""
    if k < 0:
        raise PreconditionError(f"cannot decompose {k}")
    top = 0
    while triangular(top + 1) <= k:
        top += 1
    for combo in itertools.combinations_with_replacement(range(top, -1, -1), parts):
        if sum(triangular(t) for t in combo) == k:
            return combo
    raise FalsificationError(f"{k} is not a sum of {parts} triangular numbers")


def witness_truncated_rectangle(g: int, d: int) -> LatticePolygon:
    """
    Maximal polygon of genus g in a strip of height d with U(g, d) - dim <= d + 4.

    The (m-1) x (d-1) block of interior points overshoots g by k < d - 1;
    the surplus is removed by isosceles corner cuts, a cut with legs t+1
    removing T_t interior points. When a cut leaves the polygon
    non-maximal, the relaxation of its interior polygon is returned instead.
    """
    if d < 3:
        raise PreconditionError(f"strip height {d} must be at least 3")
    if g < d ** 3:
        raise PreconditionError(f"witness needs g >= d^3 = {d ** 3}, got {g}")
    columns = -(-g // (d - 1))
    m = columns + 1
    k = columns * (d - 1) - g
    cuts = {}
    for corner, t in zip(("NE", "SW", "NW", "SE"), triangular_decomposition(k)):
        if t > 0:
            cuts[corner] = t + 1
    for a, b in (("NW", "SW"), ("NE", "SE")):
        if cuts.get(a, 0) + cuts.get(b, 0) >= d:
            raise FalsificationError(f"cuts {cuts} do not fit in height {d}")
    P = truncated_rectangle(m, d, cuts)
    if not is_maximal(P):
        # a lone cut can swallow the last interior point of its side
        P = relax(interior_polygon(P))
        if P is None:
            raise FalsificationError(f"cuts {cuts} on the {m} x {d} rectangle leave no lattice relaxation")
    _require_maximal(P, f"witness for g={g}, d={d}")
    if lattice_width(P)[0] != d:
        raise FalsificationError(f"witness for g={g}, d={d} has lattice width {lattice_width(P)[0]}", witness=P)
    if genus(P) != g:
        raise FalsificationError(f"witness for g={g}, d={d} has genus {genus(P)}", witness=P)
    gap = upper_bound_U(g, d) - moduli_dim(P)
    if gap > d + 4:
        raise FalsificationError(f"witness for g={g}, d={d} misses U by {gap}", witness=P)
    logger.debug("truncated rectangle m=%d, d=%d, cuts %s misses U by %s", m, d, cuts, gap)
    return P


def gap_check(g: int, d: int) -> bool:
    """U(g, d+1) <= U(g, d) - (d + 4) for g >= d^3."""
    if d < 3 or g < d ** 3:
        raise PreconditionError(f"gap_check needs d >= 3 and g >= d^3, got g={g}, d={d}")
    return upper_bound_U(g, d + 1) <= upper_bound_U(g, d) - (d + 4)


def witness_family(kind: str, genera) -> List[LatticePolygon]:
    builder = {"d4": witness_d4, "d5": witness_d5}[kind]
    return [builder(g) for g in genera]
