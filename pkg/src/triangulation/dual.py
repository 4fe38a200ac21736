"""
Dual graphs and skeletons of unimodular triangulations
"""
import logging
from typing import Dict, List, Tuple

from ..errors import PreconditionError
from ..graphs.multigraph import MultiGraph
from .subdivision import Triangulation

logger = logging.getLogger(__name__)


def dual_graph(t: Triangulation) -> MultiGraph:
    """One vertex per triangle, one edge per edge shared by two triangles."""
    edges = []
    for _, owners in sorted(t.edge_map().items()):
        if len(owners) == 2:
            edges.append((owners[0], owners[1]))
        elif len(owners) > 2:
            raise PreconditionError(f"edge shared by {len(owners)} triangles")
    return MultiGraph(len(t.cells), tuple(edges))


def skeleton(G: MultiGraph) -> MultiGraph:
    """
    Prune leaves, then smooth over 2-valent vertices.

    Merged edges carry the sum of the lengths they replace; a smoothed
    vertex whose two edges run to the same neighbour leaves a loop there.
    """
    if not G.is_connected():
        raise PreconditionError("skeleton needs a connected graph")
    live: Dict[int, Tuple[int, int, int]] = {i: (u, v, length)
                                             for i, ((u, v), length) in enumerate(zip(G.edges, G.lengths))}
    alive = set(range(G.n))
    next_id = len(live)

    def incident(v) -> List[int]:
        return [e for e, (a, b, _) in live.items() if a == v or b == v]

    def degree(v) -> int:
        return sum((a == v) + (b == v) for a, b, _ in live.values())

    changed = True
    while changed and len(alive) > 1:
        changed = False
        for v in sorted(alive):
            if degree(v) <= 1 and len(alive) > 1:
                for e in incident(v):
                    del live[e]
                alive.discard(v)
                changed = True

    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            ends = incident(v)
            if degree(v) != 2 or len(ends) != 2:
                continue
            (a1, b1, l1), (a2, b2, l2) = live[ends[0]], live[ends[1]]
            x = b1 if a1 == v else a1
            y = b2 if a2 == v else a2
            del live[ends[0]], live[ends[1]]
            live[next_id] = (min(x, y), max(x, y), l1 + l2)
            next_id += 1
            alive.discard(v)
            changed = True

    label = {v: i for i, v in enumerate(sorted(alive))}
    merged = sorted((label[a], label[b], length) for a, b, length in live.values())
    S = MultiGraph(len(label), tuple((a, b) for a, b, _ in merged), tuple(length for _, _, length in merged))
    logger.debug("skeleton: %d vertices, %d edges from %d triangles", S.n, len(S.edges), G.n)
    return S


def to_dot(G: MultiGraph, name: str = "skeleton") -> str:
    """Undirected DOT text with edge lengths as labels."""
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for (u, v), length in zip(G.edges, G.lengths):
        lines.append(f'  {u} -- {v} [label="{length}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
