"""Immutable simple undirected graphs over integer vertex ids."""

from __future__ import annotations

from typing import Iterable, Mapping


class Graph:
    """Adjacency-set graph. Vertex ids need not be contiguous.

    Instances are never mutated; the ``without_*`` methods return new graphs.
    """

    __slots__ = ("_adj",)

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj = {v: frozenset(nbrs) for v, nbrs in adjacency.items()}
        for v, nbrs in adj.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for w in nbrs:
                if v not in adj.get(w, ()):
                    raise ValueError(f"adjacency not symmetric at {v}-{w}")
        self._adj = adj

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj)

    def __repr__(self) -> str:
        return f"Graph(n={len(self._adj)}, m={self.n_edges})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self._adj.items()))

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n_vertices(self) -> int:
        return len(self._adj)

    @property
    def n_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def incident_edges(self, v: int) -> list[tuple[int, int]]:
        return sorted((min(v, w), max(v, w)) for w in self._adj[v])

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(n) for n in self._adj.values()), default=0)

    def degree_sequence(self) -> list[int]:
        return sorted((len(n) for n in self._adj.values()), reverse=True)

    def elements(self) -> list:
        """All vertices then all edges, each group in canonical order."""
        return [*self.vertices, *self.edges()]

    def without_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return Graph({v: n - gone for v, n in self._adj.items() if v not in gone})

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        adj = {v: set(n) for v, n in self._adj.items()}
        for u, v in removed:
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph(adj)

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return Graph({v: n & keep for v, n in self._adj.items() if v in keep})
