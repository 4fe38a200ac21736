"""
Chip-firing on multigraphs: q-reduced divisors, the rank-one test and
divisorial gonality by exhaustive search.
"""
import itertools
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Tuple

from ..config import DEFAULT_JOBS, GONALITY_DEGREE_CAP, GONALITY_VERTEX_CAP
from ..errors import CapExceededError, PreconditionError
from .multigraph import Divisor, MultiGraph

logger = logging.getLogger(__name__)


def _fire(adj, chips: List[int], fired: Iterable[int]):
    fired = set(fired)
    for u in fired:
        for v, mult in adj[u].items():
            if v not in fired:
                chips[u] -= mult
                chips[v] += mult


def fire_set(G: MultiGraph, D: Divisor, fired: Iterable[int]) -> Divisor:
    """Every vertex of `fired` sends one chip along each edge leaving the set."""
    chips = list(D.chips)
    _fire(G.adjacency(), chips, fired)
    return Divisor(tuple(chips))


def _distances(adj, q: int) -> List[int]:
    dist = [-1] * len(adj)
    dist[q] = 0
    queue = deque([q])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def reduce_divisor(G: MultiGraph, D: Divisor, q: int) -> Divisor:
    """
    The q-reduced divisor equivalent to D.

    Debt away from q is pushed towards q layer by layer (firing every
    vertex closer to q than the indebted layer), then Dhar's burning
    algorithm fires the unburnt set until the fire from q spreads everywhere.
    """
    if len(D) != G.n:
        raise PreconditionError(f"divisor has {len(D)} entries for {G.n} vertices")
    if not 0 <= q < G.n:
        raise PreconditionError(f"vertex {q} out of range")
    adj = G.adjacency()
    dist = _distances(adj, q)
    if min(dist) < 0:
        raise PreconditionError("reduction needs a connected graph")
    chips = list(D.chips)

    for layer in range(max(dist), 0, -1):
        closer = [v for v in range(G.n) if dist[v] < layer]
        while any(chips[v] < 0 for v in range(G.n) if dist[v] == layer):
            _fire(adj, chips, closer)

    while True:
        burnt = {q}
        spreading = True
        while spreading:
            spreading = False
            for v in range(G.n):
                if v in burnt:
                    continue
                if sum(m for u, m in adj[v].items() if u in burnt) > chips[v]:
                    burnt.add(v)
                    spreading = True
        if len(burnt) == G.n:
            return Divisor(tuple(chips))
        _fire(adj, chips, (v for v in range(G.n) if v not in burnt))


def has_positive_rank(G: MultiGraph, D: Divisor) -> bool:
    """True iff D is equivalent to an effective divisor with a chip on every vertex in turn."""
    if D.degree < 0:
        return False
    targets = range(G.n)
    if D.is_effective:
        targets = [q for q in targets if D[q] == 0]
    for q in targets:
        if reduce_divisor(G, D, q)[q] < 1:
            return False
    return True


def _search_from(args) -> Optional[Tuple[int, ...]]:
    """First positive-rank multiset of size k whose smallest vertex is `first`."""
    G, k, first = args
    for rest in itertools.combinations_with_replacement(range(first, G.n), k - 1):
        D = Divisor.from_vertices(G.n, (first,) + rest)
        if has_positive_rank(G, D):
            return (first,) + rest
    return None


def gonality_witness(G: MultiGraph, vertex_cap: int = GONALITY_VERTEX_CAP,
                     degree_cap: int = GONALITY_DEGREE_CAP, jobs: int = DEFAULT_JOBS) -> Tuple[int, Divisor]:
    """
    Divisorial gonality of G together with a divisor attaining it.

    The caps apply to G as given; the search itself runs on the loopless
    model, so the returned divisor lives on that model's vertices.

    Raises:
        CapExceededError: G is larger than vertex_cap, or no divisor of
            degree <= degree_cap has positive rank
    """
    if G.n > vertex_cap:
        raise CapExceededError(f"cap exceeded: {G.n} vertices > {vertex_cap}")
    if not G.is_connected():
        raise PreconditionError("gonality needs a connected graph")
    L = G.loopless_model()
    for k in range(1, degree_cap + 1):
        tasks = [(L, k, first) for first in range(L.n)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                found = list(pool.map(_search_from, tasks))
        else:
            found = []
            for task in tasks:
                found.append(_search_from(task))
                if found[-1] is not None:
                    break
        hits = [f for f in found if f is not None]
        if hits:
            logger.debug("gonality %d on %d vertices, witness %s", k, L.n, hits[0])
            return k, Divisor.from_vertices(L.n, hits[0])
        logger.debug("no positive-rank divisor of degree %d", k)
    raise CapExceededError(f"cap exceeded: no positive-rank divisor of degree <= {degree_cap}")


def gonality(G: MultiGraph, vertex_cap: int = GONALITY_VERTEX_CAP,
             degree_cap: int = GONALITY_DEGREE_CAP, jobs: int = DEFAULT_JOBS) -> int:
    return gonality_witness(G, vertex_cap, degree_cap, jobs)[0]
