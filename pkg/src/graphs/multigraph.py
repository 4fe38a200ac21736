"""
Finite multigraphs with loops, and chip configurations on them.

Vertices are 0..n-1. Every edge is stored once as (u, v) with u <= v; a
loop is (v, v). Parallel edges are repeated entries.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..errors import InputFormatError, PreconditionError
from ..utils.helpers import is_int, json_int, json_list


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: Tuple[Tuple[int, int], ...]
    lengths: Optional[Tuple[int, ...]] = field(default=None)

    def __post_init__(self):
        edges = tuple((min(int(u), int(v)), max(int(u), int(v))) for u, v in self.edges)
        for u, v in edges:
            if u < 0 or v >= self.n:
                raise PreconditionError(f"edge ({u}, {v}) leaves the vertex range 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)
        lengths = self.lengths if self.lengths is not None else (1,) * len(edges)
        if len(lengths) != len(edges):
            raise PreconditionError("one length per edge expected")
        object.__setattr__(self, "lengths", tuple(int(x) for x in lengths))

    def degree(self, v: int) -> int:
        """Loops count twice."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def adjacency(self) -> List[Dict[int, int]]:
        """Neighbour -> multiplicity for every vertex, loops left out."""
        adj: List[Dict[int, int]] = [{} for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u][v] = adj[u].get(v, 0) + 1
                adj[v][u] = adj[v].get(u, 0) + 1
        return adj

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        for (u, v), length in zip(self.edges, self.lengths):
            G.add_edge(u, v, length=length)
        return G

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def induces_connected(self, vertices: Iterable[int]) -> bool:
        vertices = list(vertices)
        if not vertices:
            return False
        return nx.is_connected(self.to_networkx().subgraph(vertices))

    @property
    def betti_number(self) -> int:
        """E - V + number of components."""
        if self.n == 0:
            return 0
        return len(self.edges) - self.n + nx.number_connected_components(self.to_networkx())

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def loopless_model(self) -> "MultiGraph":
        """Subdivide every loop once: the loop at v becomes a double edge v - w."""
        if not self.has_loops:
            return self
        n = self.n
        edges, lengths = [], []
        for (u, v), length in zip(self.edges, self.lengths):
            if u == v:
                edges += [(u, n), (u, n)]
                lengths += [1, 1]
                n += 1
            else:
                edges.append((u, v))
                lengths.append(length)
        return MultiGraph(n, tuple(edges), tuple(lengths))

    def to_dict(self):
        data = {"n": self.n, "edges": [[u, v] for u, v in self.edges]}
        if any(x != 1 for x in self.lengths):
            data["lengths"] = list(self.lengths)
        return data

    @classmethod
    def from_dict(cls, data, where="graph") -> "MultiGraph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise InputFormatError(f"{where}: expected an object with 'n' and 'edges'")
        n = json_int(data["n"], f"{where}.n", minimum=1)
        edges = []
        for i, e in enumerate(json_list(data["edges"], f"{where}.edges")):
            if (not isinstance(e, list) or len(e) != 2
                    or not all(is_int(k) and 0 <= k < n for k in e)):
                raise InputFormatError(f"{where}.edges[{i}]: expected [u, v] with 0 <= u, v < {n}")
            edges.append((e[0], e[1]))
        lengths = data.get("lengths")
        if lengths is not None:
            if len(json_list(lengths, f"{where}.lengths")) != len(edges):
                raise InputFormatError(f"{where}.lengths: expected one length per edge")
            for i, x in enumerate(lengths):
                json_int(x, f"{where}.lengths[{i}]", minimum=1)
        return cls(n, tuple(edges), tuple(lengths) if lengths is not None else None)


@dataclass(frozen=True)
class Divisor:
    """Integer chip counts indexed by vertex."""

    chips: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chips", tuple(int(c) for c in self.chips))

    @classmethod
    def zero(cls, n: int) -> "Divisor":
        return cls((0,) * n)

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "Divisor":
        """One chip per occurrence of a vertex."""
        chips = [0] * n
        for v in vertices:
            chips[v] += 1
        return cls(tuple(chips))

    def __getitem__(self, v: int) -> int:
        return self.chips[v]

    def __len__(self):
        return len(self.chips)

    @property
    def degree(self) -> int:
        return sum(self.chips)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(v for v, c in enumerate(self.chips) if c != 0)

    def to_dict(self):
        return {"chips": list(self.chips)}

    @classmethod
    def from_dict(cls, data, where="divisor") -> "Divisor":
        chips = data.get("chips") if isinstance(data, dict) else None
        if not isinstance(chips, list) or not all(is_int(c) for c in chips):
            raise InputFormatError(f"{where}: expected {{\"chips\": [int, ...]}}")
        return cls(tuple(chips))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> MultiGraph:
    """C_n; n = 1 is a loop and n = 2 a double edge."""
    if n < 1:
        raise PreconditionError(f"cycle needs at least one vertex, got {n}")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def cube_graph() -> MultiGraph:
    """The 3-cube on bit strings 0..7; v and v ^ 4 lie on the same spoke."""
    return MultiGraph(8, tuple((v, v ^ bit) for v in range(8) for bit in (1, 2, 4) if v < v ^ bit))


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
