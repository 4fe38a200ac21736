"""
Maximal non-hyperelliptic polygons of small genus and the small-genus table
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..config import DEFAULT_JOBS, MAX_SUPPORTED_GENUS, TABLE_DEGREES, TABLE_GENERA
from ..errors import InputFormatError, PreconditionError
from ..geometry.invariants import expected_gonality, polygon_invariants
from ..geometry.polygon import LatticePolygon, canonical_form, interior_points, lattice_points, relax
from ..moduli.dimension import hyperelliptic_locus_dim, moduli_dim
from ..utils.helpers import json_int
from .candidates import enumerate_interior_candidates

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Corpus:
    genus: int
    polygons: Tuple[LatticePolygon, ...]
    dims: Tuple[int, ...]
    egons: Tuple[int, ...]

    def __len__(self):
        return len(self.polygons)

    @property
    def by_egon(self) -> Dict[int, List[LatticePolygon]]:
        groups: Dict[int, List[LatticePolygon]] = {}
        for P, d in zip(self.polygons, self.egons):
            groups.setdefault(d, []).append(P)
        return groups

    def to_dict(self):
        return {
            "genus": self.genus,
            "polygons": [
                {"polygon": P.to_dict(), "dim": dim, "invariants": polygon_invariants(P).to_dict()}
                for P, dim in zip(self.polygons, self.dims)
            ],
        }

    @classmethod
    def from_dict(cls, data, where="corpus") -> "Corpus":
        if not isinstance(data, dict) or "genus" not in data or "polygons" not in data:
            raise InputFormatError(f"{where}: expected an object with 'genus' and 'polygons'")
        records = data["polygons"]
        if not isinstance(records, list):
            raise InputFormatError(f"{where}.polygons: expected a list")
        polygons, dims, egons = [], [], []
        for i, record in enumerate(records):
            if not isinstance(record, dict) or "polygon" not in record or "dim" not in record:
                raise InputFormatError(f"{where}.polygons[{i}]: expected 'polygon' and 'dim'")
            P = LatticePolygon.from_dict(record["polygon"], f"{where}.polygons[{i}].polygon")
            polygons.append(P)
            dims.append(json_int(record["dim"], f"{where}.polygons[{i}].dim", minimum=0))
            egons.append(expected_gonality(P))
        genus = json_int(data["genus"], f"{where}.genus", minimum=1)
        return cls(genus, tuple(polygons), tuple(dims), tuple(egons))


def _dim_and_egon(P: LatticePolygon) -> Tuple[int, int]:
    return moduli_dim(P), expected_gonality(P)


def enumerate_maximal(g: int, max_genus: int = MAX_SUPPORTED_GENUS, jobs: int = DEFAULT_JOBS) -> Corpus:
    """
    Relax every interior candidate of genus g and keep the lattice results
    whose interior is exactly the candidate.
    """
    found = {}
    for Q in enumerate_interior_candidates(g, max_genus):
        P = relax(Q)
        if P is None:
            logger.debug("relaxation of %s is not a lattice polygon", Q)
            continue
        if set(interior_points(P)) != set(lattice_points(Q)):
            logger.debug("relaxation of %s picks up extra interior points", Q)
            continue
        C = canonical_form(P)
        found[C.vertices] = C
    polygons = tuple(found[key] for key in sorted(found))

    if jobs > 1 and len(polygons) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            stats = list(pool.map(_dim_and_egon, polygons))
    else:
        stats = [_dim_and_egon(P) for P in polygons]

    corpus = Corpus(g, polygons, tuple(s[0] for s in stats), tuple(s[1] for s in stats))
    logger.info("genus %d: %d maximal non-hyperelliptic polygons", g, len(corpus))
    return corpus


def table_row(g: int, corpus: Optional[Corpus] = None) -> Dict[int, int]:
    """
    Largest moduli dimension per gonality d in genus g.

    d = 2 comes from the hyperelliptic locus; larger d from the corpus,
    with no entry when no corpus polygon has that expected gonality.
    """
    if g not in TABLE_GENERA:
        raise PreconditionError(f"table rows exist for g in {TABLE_GENERA}, got {g}")
    if corpus is None:
        corpus = enumerate_maximal(g)
    elif corpus.genus != g:
        raise PreconditionError(f"corpus has genus {corpus.genus}, expected {g}")
    row = {}
    for d in TABLE_DEGREES:
        if d == 2:
            row[d] = hyperelliptic_locus_dim(g)
            continue
        dims = [dim for dim, egon in zip(corpus.dims, corpus.egons) if egon == d]
        if dims:
            row[d] = max(dims)
    return row
