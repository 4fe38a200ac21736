"""
Sandwich certificates sn <= gon <= egon for the skeleton of a triangulation
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ..config import (
    DEFAULT_JOBS,
    GONALITY_DEGREE_CAP,
    GONALITY_VERTEX_CAP,
    SCRAMBLE_MAX_EGG_SIZE,
)
from ..errors import CapExceededError, FalsificationError, PreconditionError
from ..geometry.invariants import expected_gonality
from ..geometry.polygon import LatticePolygon, canonical_form, genus
from ..moduli.crystal import find_crystal
from ..triangulation.dual import dual_graph, skeleton
from ..triangulation.subdivision import Triangulation
from .divisors import gonality_witness
from .multigraph import Divisor
from .scrambles import Scramble, crystal_scramble, scramble_order, search_scramble

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GonalityCertificate:
    lower: int
    lower_witness: str
    upper: int
    upper_witness: str
    scramble: Optional[Scramble] = None
    divisor: Optional[Divisor] = None

    @property
    def conclusion(self) -> Optional[int]:
        return self.lower if self.lower == self.upper else None

    def describe(self) -> str:
        if self.conclusion is not None:
            return f"gon = {self.conclusion}"
        return f"{self.lower} <= gon <= {self.upper}"

    def to_dict(self):
        return {
            "lower": self.lower,
            "lower_witness": self.lower_witness,
            "upper": self.upper,
            "upper_witness": self.upper_witness,
            "conclusion": self.conclusion,
            "scramble": self.scramble.to_dict() if self.scramble else None,
            "divisor": self.divisor.to_dict() if self.divisor else None,
        }


def _crystal_lower_bound(P: LatticePolygon, t: Triangulation, egon: int) -> Optional[Scramble]:
    _, _, y0, y1 = P.bounding_box()
    if egon < 2 or (y0, y1) != (0, egon):
        return None
    columns = find_crystal(P, egon)
    if columns is None:
        return None
    try:
        return crystal_scramble(t, columns, egon)
    except PreconditionError as e:
        logger.debug("crystal present but unusable: %s", e)
        return None


def gonality_certificate(P: LatticePolygon, t: Triangulation,
                         vertex_cap: int = GONALITY_VERTEX_CAP,
                         degree_cap: int = GONALITY_DEGREE_CAP,
                         max_egg_size: int = SCRAMBLE_MAX_EGG_SIZE,
                         jobs: int = DEFAULT_JOBS) -> GonalityCertificate:
    """
    Bound the gonality of the skeleton of t between a scramble order and egon(P).

    The lower bound comes from the crystal scramble when P sits in the strip
    R x [0, egon] with a crystal, and otherwise from search_scramble on the
    loopless skeleton, then on the dual graph. When the bounds differ, an
    exhaustive divisor search on the skeleton is attempted within the caps.
    """
    egon = expected_gonality(P)
    upper, upper_witness = egon, "expected gonality"
    lower, lower_witness = 1, "trivial"
    found_scramble, divisor = None, None

    dual = dual_graph(t)
    crystal = _crystal_lower_bound(P, t, egon)
    if crystal is not None:
        lower, lower_witness, found_scramble = scramble_order(dual, crystal), "crystal scramble", crystal
    else:
        searches = ((skeleton(dual).loopless_model(), "scramble search"),
                    (dual, "scramble search on the dual graph"))
        for graph, label in searches:
            try:
                s = search_scramble(graph, egon, max_egg_size)
            except CapExceededError as e:
                logger.info("%s skipped: %s", label, e)
                continue
            if s is not None:
                lower, lower_witness, found_scramble = scramble_order(graph, s), label, s
                break

    if lower > upper:
        raise FalsificationError(
            f"scramble order {lower} exceeds egon {upper} for {canonical_form(P)}", witness=canonical_form(P))

    if lower < upper:
        try:
            exact, divisor = gonality_witness(skeleton(dual), vertex_cap, degree_cap, jobs)
        except CapExceededError as e:
            logger.warning("exact gonality skipped for genus %d: %s", genus(P), e)
        else:
            if exact < lower:
                raise FalsificationError(
                    f"gonality {exact} below scramble order {lower} for {canonical_form(P)}",
                    witness=canonical_form(P))
            if exact <= upper:
                lower = upper = exact
                lower_witness = upper_witness = "exhaustive divisor search"
            else:
                divisor = None

    cert = GonalityCertificate(lower, lower_witness, upper, upper_witness, found_scramble, divisor)
    logger.info("certificate for genus %d: %s", genus(P), cert.describe())
    return cert
