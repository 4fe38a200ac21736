"""
Acceptance suite behind `tropgon verify`.

Every criterion appends named checks to a PropertyReport; a check that
raises a TropgonError is recorded as failed with the message as detail.
"""
import itertools
import logging
import math
import random
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from .config import (
    CRYSTAL_MIN_GENUS,
    CRYSTAL_SAMPLE_SIZE,
    DEFAULT_JOBS,
    DEFAULT_MAX_GENUS,
    GONALITY_DEGREE_CAP,
    GONALITY_VERTEX_CAP,
    WITNESS_D4_GENERA,
    WITNESS_D5_GENERA,
)
from .enumeration.corpus import table_row
from .errors import TropgonError
from .geometry.invariants import column_vectors, expected_gonality, is_hyperelliptic_polygon, is_maximal, lattice_width
from .geometry.polygon import (
    AffineMap,
    LatticePolygon,
    apply_map,
    area_doubled,
    boundary_points,
    canonical_form,
    genus,
    rectangle,
    translate,
)
from .graphs.certificate import gonality_certificate
from .graphs.divisors import gonality, reduce_divisor
from .graphs.multigraph import Divisor, MultiGraph, cube_graph, cycle_graph, path_graph
from .graphs.scrambles import Scramble, egg_cut_bruteforce, egg_cut_number, scramble_order
from .moduli.crystal import long_strip_family, shear_to_crystal
from .moduli.dimension import PropertyReport, check_dim_bound, moduli_dim, upper_bound_U, verify_U_properties
from .moduli.truncation import ab_bound_holds, cut_penalty, strip_normalize, truncate
from .moduli.witnesses import chrangledim, gap_check, witness_d4, witness_d5, witness_truncated_rectangle
from .triangulation.beehive import build_beehive, doubly_connected_count, zigzag
from .utils.corpus_cache import CorpusCache, get_corpus_cache

EXPECTED_COUNTS = {3: 1, 4: 3, 5: 4, 6: 5, 8: 11}
EXPECTED_TABLE = {
    2: {2: 3},
    3: {2: 5, 3: 6},
    4: {2: 7, 3: 9},
    5: {2: 9, 3: 11, 4: 10},
    6: {2: 11, 3: 13, 4: 13},
    8: {2: 15, 3: 17, 4: 17},
}
EXPECTED_DIMS = {
    5: [11, 10, 10, 9],
    6: [13, 12, 12, 13, 12],
    # includes conv{(0,0), (2,0), (8,3), (0,3)}: egon 3, dim 16
    8: [16, 15, 15, 17, 15, 11, 17, 14, 15, 14, 16],
}


def _guarded(report: PropertyReport, name: str, subject, check: Callable[[], object], detail=""):
    try:
        passed = bool(check())
    except TropgonError as e:
        report.add(name, subject, False, str(e))
        return
    report.add(name, subject, passed, detail)


class Verifier:
    """Runs the acceptance criteria against corpora from a CorpusCache."""

    def __init__(self, max_genus: int = DEFAULT_MAX_GENUS, jobs: int = DEFAULT_JOBS,
                 gonality_cap: int = GONALITY_VERTEX_CAP, cache: Optional[CorpusCache] = None, seed: int = 0):
        self.max_genus = max_genus
        self.jobs = jobs
        self.gonality_cap = gonality_cap
        self.cache = cache or get_corpus_cache()
        self.rng = random.Random(seed)
        self.report = PropertyReport()
        self.logger = logging.getLogger(__name__)

    def genera(self) -> List[int]:
        return [g for g in range(3, self.max_genus + 1)]

    def corpus_polygons(self) -> Iterable[LatticePolygon]:
        for g in self.genera():
            yield from self.cache.get(g, self.jobs).polygons

    # criteria

    def corpus_counts(self):
        for g, count in EXPECTED_COUNTS.items():
            if g <= self.max_genus:
                corpus = self.cache.get(g, self.jobs)
                self.report.add("corpus-count", f"g={g}", len(corpus) == count, f"{len(corpus)} (want {count})")
        if 7 <= self.max_genus:
            self.logger.info("genus 7 corpus has %d polygons", len(self.cache.get(7, self.jobs)))

    def table(self):
        for g, expected in EXPECTED_TABLE.items():
            if g > self.max_genus:
                continue
            row = table_row(g, self.cache.get(g, self.jobs))
            self.report.add("table-row", f"g={g}", row == expected, str(row))

    def dims(self):
        for g, expected in EXPECTED_DIMS.items():
            if g <= self.max_genus:
                dims = list(self.cache.get(g, self.jobs).dims)
                self.report.add("corpus-dims", f"g={g}", Counter(dims) == Counter(expected), str(sorted(dims)))

    def upper_bound(self):
        for P in self.corpus_polygons():
            _guarded(self.report, "dim-bound", canonical_form(P), lambda: check_dim_bound(P))
        for g in WITNESS_D4_GENERA:
            _guarded(self.report, "dim-bound", f"witness_d4({g})", lambda: check_dim_bound(witness_d4(g)))
        for g in WITNESS_D5_GENERA:
            _guarded(self.report, "dim-bound", f"witness_d5({g})", lambda: check_dim_bound(witness_d5(g)))

    def witnesses(self):
        for g in WITNESS_D4_GENERA:
            _guarded(self.report, "witness-d4", f"g={g}",
                     lambda: moduli_dim(witness_d4(g)) == math.floor(upper_bound_U(g, 4)))
            _guarded(self.report, "closed-form", f"witness_d4({g})", lambda: _closed_form_agrees(witness_d4(g)))
        for g in WITNESS_D5_GENERA:
            _guarded(self.report, "witness-d5", f"g={g}",
                     lambda: moduli_dim(witness_d5(g)) == math.floor(upper_bound_U(g, 5)) - 1)
            _guarded(self.report, "closed-form", f"witness_d5({g})", lambda: _closed_form_agrees(witness_d5(g)))
        for d in (3, 4):
            g = d ** 3
            _guarded(self.report, "truncated-rectangle", f"g={g}, d={d}",
                     lambda: witness_truncated_rectangle(g, d) is not None)
            _guarded(self.report, "gap", f"g={g}, d={d}", lambda: gap_check(g, d))

    def cut_penalties(self):
        bad = [(x, y, d) for d in range(3, 13) for x in range(1, 13) for y in range(1, d)
               if cut_penalty(x, y, d) > -1]
        self.report.add("cut-penalty", "1 <= x, y <= 12, 3 <= d <= 12", not bad, str(bad[:5]))
        for x, y, d in ((2, 2, 5), (3, 3, 5)):
            value = cut_penalty(x, y, d)
            self.report.add("cut-penalty", f"({x},{y},{d})", value == Fraction(-3, 2), str(value))

    def gonality_fixtures(self):
        cap = self.gonality_cap
        _guarded(self.report, "gonality", "path(5)", lambda: gonality(path_graph(5), cap, jobs=self.jobs) == 1)
        for n in range(1, 11):
            _guarded(self.report, "gonality", f"C_{n}", lambda: gonality(cycle_graph(n), cap, jobs=self.jobs) == 2)
        _guarded(self.report, "gonality", "cube", lambda: gonality(cube_graph(), cap, jobs=self.jobs) == 4)
        spokes = Scramble(tuple(frozenset((v, v ^ 4)) for v in range(4)))
        _guarded(self.report, "scramble-order", "cube spokes", lambda: scramble_order(cube_graph(), spokes) == 4)

    def certificates(self):
        for g in self.genera():
            corpus = self.cache.get(g, self.jobs)
            for P, egon in zip(corpus.polygons, corpus.egons):
                if egon <= 3:
                    _guarded(self.report, "certificate", canonical_form(P),
                             lambda: self._certify(P) == egon)
        for g in (5, 6, 8):
            if g > self.max_genus:
                continue
            corpus = self.cache.get(g, self.jobs)
            top = EXPECTED_TABLE[g][4]
            named = [P for P, dim, egon in zip(corpus.polygons, corpus.dims, corpus.egons)
                     if egon == 4 and dim == top]
            self.report.add("certificate", f"egon-4 polygons of dim {top}, g={g}", bool(named), str(len(named)))
            for P in named:
                _guarded(self.report, "certificate", canonical_form(P), lambda: self._certify(P) == 4)
        P = crystal_rectangle()
        _guarded(self.report, "certificate", f"crystal {P}", lambda: self._certify(P) == 3)

    def _certify(self, P: LatticePolygon):
        cert = gonality_certificate(P, build_beehive(P), self.gonality_cap, GONALITY_DEGREE_CAP, jobs=self.jobs)
        return cert.conclusion

    def crystals(self):
        for P in long_strip_family(CRYSTAL_MIN_GENUS, CRYSTAL_SAMPLE_SIZE):
            def check(P=P):
                Q, _ = strip_normalize(P)
                return lattice_width(P)[0] == 3 and shear_to_crystal(Q, 3) is not None
            _guarded(self.report, "crystal", canonical_form(P), check)

    def width_bound(self):
        for P in self.corpus_polygons():
            lw, g = lattice_width(P)[0], genus(P)
            self.report.add("width-bound", canonical_form(P), lw * lw <= 4 * (g + 2), f"lw={lw}")
        polygons = list(self.corpus_polygons())
        for d in (3, 4, 5):
            sub = verify_U_properties(d, range(max(d ** 3, 32), max(d ** 3, 32) + 20), polygons if d == 3 else ())
            self.report.checks.extend(sub.checks)
        for P in polygons:
            _guarded(self.report, "ab-bound", canonical_form(P), lambda: ab_bound_holds(P))

    def properties(self):
        for P in self.corpus_polygons():
            # Pick: 2A = 2g + r - 2
            self.report.add("pick", canonical_form(P),
                            area_doubled(P) == 2 * genus(P) + boundary_points(P) - 2)
        self._unimodular_invariance(100)
        self._reduction_cases(200)
        self._egg_cuts(30)
        for n, m in itertools.product(range(2, 7), repeat=2):
            nu = [(i, 1) for i in range(n)]
            mu = [(j, 0) for j in range(m)]
            t = zigzag(nu, mu)
            found = doubly_connected_count(t, nu, mu)
            self.report.add("zigzag", f"n={n}, m={m}", found == min(n, m - 1), str(found))

    def _random_map(self) -> AffineMap:
        return AffineMap.random(self.rng, bound=5, shift=5)

    def _unimodular_invariance(self, count: int):
        polygons = list(self.corpus_polygons())
        failures = []
        for i in range(count):
            P = polygons[i % len(polygons)]
            Q = apply_map(P, self._random_map())
            before = (genus(P), boundary_points(P), area_doubled(P), lattice_width(P)[0],
                      len(column_vectors(P)), expected_gonality(P), canonical_form(P),
                      is_hyperelliptic_polygon(P), is_maximal(P))
            after = (genus(Q), boundary_points(Q), area_doubled(Q), lattice_width(Q)[0],
                     len(column_vectors(Q)), expected_gonality(Q), canonical_form(Q),
                     is_hyperelliptic_polygon(Q), is_maximal(Q))
            if before != after:
                failures.append(str(P))
        self.report.add("unimodular-invariance", f"{count} random maps", not failures, ", ".join(failures[:3]))

    def _random_graph(self, n: int) -> MultiGraph:
        edges = [(self.rng.randrange(v), v) for v in range(1, n)]
        for _ in range(self.rng.randint(0, n)):
            edges.append((self.rng.randrange(n), self.rng.randrange(n)))
        return MultiGraph(n, tuple(edges))

    def _reduction_cases(self, count: int):
        failures = 0
        for _ in range(count):
            G = self._random_graph(self.rng.randint(1, 7))
            D = Divisor(tuple(self.rng.randint(-3, 3) for _ in range(G.n)))
            q = self.rng.randrange(G.n)
            R = reduce_divisor(G, D, q)
            ok = (R.degree == D.degree and reduce_divisor(G, R, q) == R
                  and all(R[v] >= 0 for v in range(G.n) if v != q))
            failures += not ok
        self.report.add("reduce-divisor", f"{count} random cases", failures == 0, f"{failures} failures")

    def _egg_cuts(self, count: int):
        failures = 0
        for _ in range(count):
            G = self._random_graph(self.rng.randint(3, 10))
            chosen = self.rng.sample(range(G.n), self.rng.randint(2, min(4, G.n)))
            eggs = [frozenset([v]) for v in chosen]
            failures += egg_cut_number(G, eggs) != egg_cut_bruteforce(G, eggs)
        self.report.add("egg-cut", f"{count} random graphs", failures == 0, f"{failures} mismatches")

    def run(self, criteria: Optional[Iterable[str]] = None) -> PropertyReport:
        names = list(criteria) if criteria else list(CRITERIA)
        for name in names:
            self.logger.info("criterion %s", name)
            getattr(self, CRITERIA[name])()
        return self.report


def _closed_form_agrees(P: LatticePolygon) -> bool:
    return chrangledim(P, truncate(P)) == moduli_dim(P)


def crystal_rectangle() -> LatticePolygon:
    """[-1, 14] x [0, 3]: genus 28, lattice width 3, crystal at x = 0."""
    return translate(rectangle(15, 3), -1, 0)


CRITERIA: Dict[str, str] = {
    "counts": "corpus_counts",
    "table": "table",
    "dims": "dims",
    "upper-bound": "upper_bound",
    "witnesses": "witnesses",
    "cut-penalty": "cut_penalties",
    "gonality": "gonality_fixtures",
    "certificates": "certificates",
    "crystals": "crystals",
    "width-bound": "width_bound",
    "properties": "properties",
}
