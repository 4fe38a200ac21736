"""
Crystals: blocks of d+1 consecutive full interior columns in a strip of height d
"""
import logging
from typing import Iterator, List, Optional

from ..errors import PreconditionError
from ..geometry.invariants import is_maximal
from ..geometry.polygon import LatticePolygon, convex_hull, interior_points, relax, shear

logger = logging.getLogger(__name__)


def _full_columns(P: LatticePolygon, d: int) -> List[int]:
    inner = set(interior_points(P))
    xs = sorted({p.x for p in inner})
    return [x for x in xs if all((x, j) in inner for j in range(1, d))]


def find_crystal(P: LatticePolygon, d: int) -> Optional[range]:
    """
    Leftmost crystal of P, which must lie in the strip R x [0, d].

    Returns:
        range(x0, x0 + d + 1) of the crystal columns, or None
    """
    if d < 2:
        raise PreconditionError(f"crystal height {d} must be at least 2")
    full = _full_columns(P, d)
    full_set = set(full)
    for x0 in full:
        if all(x0 + i in full_set for i in range(d + 1)):
            return range(x0, x0 + d + 1)
    return None


def _shear_order(limit: int) -> Iterator[int]:
    yield 0
    for k in range(1, limit + 1):
        yield -k
        yield k


def shear_to_crystal(P: LatticePolygon, d: int) -> Optional[LatticePolygon]:
    """Shear P until it contains a crystal; None if the row condition fails or no shear works."""
    inner = interior_points(P)
    first = sum(1 for p in inner if p.y == 1)
    last = sum(1 for p in inner if p.y == d - 1)
    if first < 2 * d - 2 or last < 2 * d - 2:
        logger.debug("rows 1 and %d carry %d and %d interior points, need %d", d - 1, first, last, 2 * d - 2)
        return None
    x0, x1, _, _ = P.bounding_box()
    for ell in _shear_order(x1 - x0):
        Q = shear(P, ell)
        if find_crystal(Q, d) is not None:
            if ell:
                logger.debug("crystal found after shear %d", ell)
            return Q
    return None


def two_row_relaxation(a1: int, b1: int, a2: int, b2: int) -> LatticePolygon:
    """Relaxation of the interior strip conv{(a1,1), (b1,1), (b2,2), (a2,2)}."""
    interior = convex_hull([(a1, 1), (b1, 1), (b2, 2), (a2, 2)])
    P = relax(interior)
    if P is None:
        raise PreconditionError(f"two-row strip {interior} has no lattice relaxation")
    return P


def long_strip_family(min_genus: int, count: int) -> List[LatticePolygon]:
    """
    Maximal polygons of lattice width 3 and genus >= min_genus.

    Every such polygon is the relaxation of a two-row interior whose row
    lengths L1 <= L2 satisfy L2 <= 2*L1 + 1, so each genus is covered
    exhaustively before moving to the next. Rows get staggered offsets so
    that most members need a shear before a crystal shows up.
    """
    family = []
    genus = max(min_genus, 2)
    while len(family) < count:
        for lower in range(1, genus // 2 + 1):
            upper = genus - lower
            if upper > 2 * lower + 1:
                continue
            offset = (len(family) % 5) - 2
            P = two_row_relaxation(0, lower - 1, offset, offset + upper - 1)
            if not is_maximal(P):
                raise PreconditionError(f"{P} is not maximal")
            family.append(P)
            if len(family) == count:
                break
        genus += 1
    return family
