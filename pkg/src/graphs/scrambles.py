"""
Scrambles: hitting number, egg-cut number and order, the crystal scramble
of a strip triangulation, and a small exhaustive scramble search.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from ..config import SCRAMBLE_MAX_EGG_SIZE, SCRAMBLE_SEARCH_VERTEX_CAP
from ..errors import CapExceededError, InputFormatError, PreconditionError
from ..triangulation.subdivision import Triangulation
from ..utils.helpers import is_int
from .multigraph import MultiGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Scramble:
    eggs: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "eggs", tuple(frozenset(int(v) for v in egg) for egg in self.eggs))
        if any(not egg for egg in self.eggs):
            raise PreconditionError("scramble eggs must be non-empty")

    def __len__(self):
        return len(self.eggs)

    @property
    def pairwise_disjoint(self) -> bool:
        return all(not (a & b) for a, b in itertools.combinations(self.eggs, 2))

    def to_dict(self):
        return {"eggs": [sorted(egg) for egg in self.eggs]}

    @classmethod
    def from_dict(cls, data, where="scramble") -> "Scramble":
        eggs = data.get("eggs") if isinstance(data, dict) else None
        if not isinstance(eggs, list) or not eggs:
            raise InputFormatError(f"{where}: expected {{\"eggs\": [[v, ...], ...]}}")
        for i, egg in enumerate(eggs):
            if (not isinstance(egg, list) or not egg
                    or not all(is_int(v) for v in egg)):
                raise InputFormatError(f"{where}.eggs[{i}]: expected a non-empty list of vertices")
        return cls(tuple(frozenset(egg) for egg in eggs))


def _check_eggs(G: MultiGraph, s: Scramble):
    for egg in s.eggs:
        if min(egg) < 0 or max(egg) >= G.n:
            raise PreconditionError(f"egg {sorted(egg)} leaves the vertex range")
        if not G.induces_connected(egg):
            raise PreconditionError(f"egg {sorted(egg)} is not connected")


def hitting_number(s: Scramble) -> int:
    """Size of a smallest vertex set meeting every egg."""
    if s.pairwise_disjoint:
        return len(s.eggs)
    universe = sorted(set().union(*s.eggs))
    for k in range(1, len(s.eggs) + 1):
        for chosen in itertools.combinations(universe, k):
            hit = set(chosen)
            if all(egg & hit for egg in s.eggs):
                return k
    return len(s.eggs)


def _capacity_graph(G: MultiGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for u, v in G.edges:
        if u == v:
            continue
        if H.has_edge(u, v):
            H[u][v]["capacity"] += 1
        else:
            H.add_edge(u, v, capacity=1)
    return H


def _pair_cut(H: nx.Graph, a: FrozenSet[int], b: FrozenSet[int]) -> int:
    flow = H.copy()
    for v in a:
        flow.add_edge("source", v)
    for v in b:
        flow.add_edge(v, "sink")
    return int(nx.minimum_cut_value(flow, "source", "sink"))


def egg_cut_number(G: MultiGraph, eggs: Sequence[FrozenSet[int]]) -> float:
    """
    Fewest edges whose removal separates two eggs; math.inf when no two
    eggs can be separated.
    """
    H = _capacity_graph(G)
    best = math.inf
    for a, b in itertools.combinations(eggs, 2):
        if a & b:
            continue
        best = min(best, _pair_cut(H, a, b))
    return best


def egg_cut_bruteforce(G: MultiGraph, eggs: Sequence[FrozenSet[int]]) -> float:
    """Scan every vertex bipartition; only for small graphs."""
    best = math.inf
    for mask in range(1, (1 << G.n) - 1):
        side = {v for v in range(G.n) if mask >> v & 1}
        if not any(egg <= side for egg in eggs):
            continue
        if not any(not (egg & side) for egg in eggs):
            continue
        cut = sum(1 for u, v in G.edges if (u in side) != (v in side))
        best = min(best, cut)
    return best


def scramble_order(G: MultiGraph, s: Scramble) -> int:
    """min(hitting number, egg-cut number)."""
    _check_eggs(G, s)
    order = min(hitting_number(s), egg_cut_number(G, s.eggs))
    return int(order)


def _connected_subsets(G: MultiGraph, size: int) -> List[FrozenSet[int]]:
    adj = G.adjacency()
    layer = {frozenset([v]) for v in range(G.n)}
    found = set(layer)
    for _ in range(size - 1):
        grown = set()
        for subset in layer:
            for u in subset:
                for v in adj[u]:
                    if v not in subset:
                        grown.add(subset | {v})
        layer = grown
        found |= grown
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _outgoing(G: MultiGraph, egg: FrozenSet[int]) -> int:
    return sum(1 for u, v in G.edges if (u in egg) != (v in egg))


def search_scramble(G: MultiGraph, target: int, max_egg_size: int = SCRAMBLE_MAX_EGG_SIZE,
                    vertex_cap: int = SCRAMBLE_SEARCH_VERTEX_CAP) -> Optional[Scramble]:
    """
    Look for a scramble of order >= target made of pairwise disjoint
    connected eggs with at most max_egg_size vertices.

    Egg sizes are tried in increasing order. Two eggs are compatible when
    they are disjoint and at least `target` edges separate them; a clique
    of `target` compatible eggs is a scramble of the required order.

    Returns:
        The scramble, or None when the search is exhausted
    """
    if G.n > vertex_cap:
        raise CapExceededError(f"cap exceeded: {G.n} vertices > {vertex_cap}")
    if not G.is_connected():
        raise PreconditionError("scramble search needs a connected graph")
    if target <= 1:
        return Scramble((frozenset(range(G.n)),))
    H = _capacity_graph(G)
    for size in range(1, max_egg_size + 1):
        candidates = [egg for egg in _connected_subsets(G, size) if _outgoing(G, egg) >= target]
        compatible = nx.Graph()
        compatible.add_nodes_from(range(len(candidates)))
        for i, j in itertools.combinations(range(len(candidates)), 2):
            a, b = candidates[i], candidates[j]
            if not (a & b) and _pair_cut(H, a, b) >= target:
                compatible.add_edge(i, j)
        for clique in nx.find_cliques(compatible):
            if len(clique) >= target:
                chosen = sorted(clique)[:target]
                s = Scramble(tuple(candidates[i] for i in chosen))
                logger.debug("order-%d scramble with eggs of size <= %d: %s", target, size, s.to_dict())
                return s
        logger.debug("no order-%d scramble with eggs of size <= %d", target, size)
    return None


def crystal_scramble(t: Triangulation, columns: Optional[range], d: int) -> Scramble:
    """
    The d column eggs of a crystal spanning columns x_0..x_d of the strip R x [0, d].

    Egg i holds the triangles inside [x_{i-1}, x_i] x [1, d-1] together
    with the triangles just below the unit edge at height 1 and just above
    the one at height d - 1. Eggs are sets of triangle indices, which are
    the vertices of dual_graph(t).
    """
    if columns is None:
        raise PreconditionError("no crystal")
    xs = list(columns)
    if len(xs) != d + 1 or any(b - a != 1 for a, b in zip(xs, xs[1:])):
        raise PreconditionError(f"crystal needs {d + 1} consecutive columns, got {xs}")
    grid = [(x, y) for x in xs for y in range(1, d)]
    if any(p not in t.point_set for p in grid):
        raise PreconditionError("crystal points are missing from the triangulation")
    for x in xs[:-1]:
        for y in range(1, d):
            if not t.has_edge((x, y), (x + 1, y)):
                raise PreconditionError(f"triangulation does not refine the grid at ({x}, {y})")
    for x in xs:
        for y in range(1, d - 1):
            if not t.has_edge((x, y), (x, y + 1)):
                raise PreconditionError(f"triangulation does not refine the grid at ({x}, {y})")

    points = t.point_set.points
    eggs = []
    for left, right in zip(xs, xs[1:]):
        egg = set()
        for k, cell in enumerate(t.cells):
            sx = sum(points[i].x for i in cell)
            sy = sum(points[i].y for i in cell)
            if 3 < sy < 3 * (d - 1):
                if 3 * left < sx < 3 * right:
                    egg.add(k)
            elif sy < 3 and _has_corners(points, cell, (left, 1), (right, 1)):
                egg.add(k)
            elif sy > 3 * (d - 1) and _has_corners(points, cell, (left, d - 1), (right, d - 1)):
                egg.add(k)
        eggs.append(frozenset(egg))
    return Scramble(tuple(eggs))


def _has_corners(points, cell, p, q) -> bool:
    corners = {tuple(points[i]) for i in cell}
    return tuple(p) in corners and tuple(q) in corners
