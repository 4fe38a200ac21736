"""
Moduli dimensions of tropical plane curves and the bound U(g, d)
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, NamedTuple

from ..errors import FalsificationError, PreconditionError
from ..geometry.invariants import (
    column_vectors,
    expected_gonality,
    is_hyperelliptic_polygon,
    is_maximal,
    lattice_width,
)
from ..geometry.polygon import LatticePolygon, boundary_points, canonical_form, genus
from ..utils.helpers import rational_to_dict
from .truncation import cut_penalty, truncate

logger = logging.getLogger(__name__)


def moduli_dim(P: LatticePolygon) -> int:
    """g + r - 3 - c for a maximal non-hyperelliptic polygon."""
    if P.dimension < 2 or is_hyperelliptic_polygon(P):
        raise PreconditionError(f"moduli_dim needs a non-hyperelliptic polygon, got {P}")
    if not is_maximal(P):
        raise PreconditionError(f"moduli_dim needs a maximal polygon, got {P}")
    return genus(P) + boundary_points(P) - 3 - len(column_vectors(P))


def upper_bound_U(g: int, d: int) -> Fraction:
    """U(g, d) = g + 2g/(d-1) + 2d - 3."""
    if d <= 1:
        raise PreconditionError(f"U(g, d) needs d >= 2, got d = {d}")
    if g < 1:
        raise PreconditionError(f"U(g, d) needs g >= 1, got g = {g}")
    return g + Fraction(2 * g, d - 1) + 2 * d - 3


@dataclass(frozen=True)
class DimReport:
    genus: int
    boundary: int
    columns: int
    dim: int
    upper_bound: Fraction
    egon: int
    witnesses: List[str] = field(default_factory=list)

    def to_dict(self):
        return {
            "genus": self.genus,
            "boundary": self.boundary,
            "columns": self.columns,
            "dim": self.dim,
            "upper_bound": rational_to_dict(self.upper_bound),
            "egon": self.egon,
            "witnesses": list(self.witnesses),
        }


def check_dim_bound(P: LatticePolygon) -> DimReport:
    """Compare dim(M_P) with floor(U(g, egon)); raises FalsificationError if it is exceeded."""
    egon = expected_gonality(P)
    if egon <= 1:
        raise PreconditionError(f"expected gonality of {P} is {egon}, need at least 2")
    dim = moduli_dim(P)
    g, r, c = genus(P), boundary_points(P), len(column_vectors(P))
    bound = upper_bound_U(g, egon)

    witnesses = []
    t = truncate(P)
    witnesses.append(f"strip height {t.strip_height}, a = {t.a}, b = {t.b}")
    for cut in t.cuts:
        if cut.is_cut:
            penalty = cut_penalty(cut.x, cut.y, t.strip_height)
            witnesses.append(f"cut {cut.corner} ({cut.x},{cut.y}) X = {penalty}")

    report = DimReport(g, r, c, dim, bound, egon, witnesses)
    if dim > math.floor(bound):
        raise FalsificationError(
            f"dim {dim} exceeds floor(U({g},{egon})) = {math.floor(bound)} for {canonical_form(P)}",
            witness=canonical_form(P),
        )
    return report


def hyperelliptic_locus_dim(g: int) -> int:
    if g < 2:
        raise PreconditionError(f"hyperelliptic locus needs g >= 2, got {g}")
    return 2 * g - 1


def trigonal_locus_dim(g: int) -> int:
    """2g + 1, capped by dim M_g = 3g - 3 (so 6 in genus 3)."""
    if g < 3:
        raise PreconditionError(f"trigonal locus needs g >= 3, got {g}")
    return min(2 * g + 1, 3 * g - 3)


class PropertyCheck(NamedTuple):
    name: str
    subject: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return self._asdict()


@dataclass
class PropertyReport:
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[PropertyCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, name, subject, passed, detail=""):
        self.checks.append(PropertyCheck(name, str(subject), bool(passed), detail))

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def sqrt_width_bound_holds(g: int, d: int) -> bool:
    """U(g, 2*sqrt(g+2)) <= U(g, d+1), decided by squaring."""
    K = Fraction(2 * g, d) + 2 * d + 2
    A = 10 * g + 16 + K
    B = 2 * K + 4
    return A * A <= B * B * (g + 2)


def verify_U_properties(d: int, g_range: Iterable[int], polygons: Iterable[LatticePolygon] = ()) -> PropertyReport:
    """
    Exact checks of the facts about U used to pin down the largest moduli dimension.

    Args:
        d: gonality, at least 3
        g_range: genera to test; the square-root bound is only claimed for g >= max(d^3, 32)
        polygons: maximal polygons on which lw^2 <= 4(g+2) is checked

    Returns:
        PropertyReport with one entry per (property, subject)
    """
    if d < 3:
        raise PreconditionError(f"verify_U_properties needs d >= 3, got {d}")
    report = PropertyReport()
    threshold = max(d ** 3, 32)
    for g in g_range:
        if g >= threshold:
            report.add("sqrt-width", f"g={g}, d={d}", sqrt_width_bound_holds(g, d))
        second = upper_bound_U(g, d - 1) - 2 * upper_bound_U(g, d) + upper_bound_U(g, d + 1)
        report.add("convex-in-d", f"g={g}, d={d}", second > 0, str(second))
    for P in polygons:
        g = genus(P)
        lw = lattice_width(P)[0]
        report.add("width-bound", canonical_form(P), lw * lw <= 4 * (g + 2), f"lw={lw}, g={g}")
    for failure in report.failures:
        logger.warning("property %s failed for %s %s", failure.name, failure.subject, failure.detail)
    return report
