"""Reducible local patterns in pseudo-outerplanar graphs.

Every pseudo-outerplanar graph of minimum degree at least two contains one
of seven local patterns, tagged A to G. This module finds them by direct
enumeration and re-checks them independently.

Role names per tag (binding tuples follow this order):

    A  u v                   2-vertex u next to a vertex v of degree <= 4
    B  v1 u1 v2 u2 v3 u3 v4  path through three 2-vertices between 5-vertices v2, v3
    C  u1 u2 u3 u4           4-cycle whose u2 and u4 have degree 2
    D  u1 u2 u3 u4           4-cycle, chord u2u4, d(u2)=d(u4)=3, d(u3) <= 4
    E  u1 u2 u3 u4 v         D's cycle and chord, u3 next to a 2-vertex v
    F  u1 u2 u3 u4 v x       D's cycle and chord, u3 next to a 3-vertex v and to x, vx an edge
    G  u1 u2 u3 u4 v         both chords u1u3, u2u4, u3 next to v with u1v an edge
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from pototal.diagram import Diagram, EdgeKey, chords_cross, edge_key
from pototal.graph import Graph

ROLES: dict[str, tuple[str, ...]] = {
    "A": ("u", "v"),
    "B": ("v1", "u1", "v2", "u2", "v3", "u3", "v4"),
    "C": ("u1", "u2", "u3", "u4"),
    "D": ("u1", "u2", "u3", "u4"),
    "E": ("u1", "u2", "u3", "u4", "v"),
    "F": ("u1", "u2", "u3", "u4", "v", "x"),
    "G": ("u1", "u2", "u3", "u4", "v"),
}
TAGS = tuple(ROLES)


@dataclass(frozen=True, order=True)
class Configuration:
    tag: str
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in ROLES:
            raise ValueError(f"unknown configuration tag {self.tag!r}")
        if len(self.vertices) != len(ROLES[self.tag]):
            raise ValueError(f"tag {self.tag} binds {len(ROLES[self.tag])} vertices")

    @classmethod
    def from_bindings(cls, tag: str, bindings: dict[str, int]) -> "Configuration":
        return cls(tag, tuple(bindings[r] for r in ROLES[tag]))

    @property
    def bindings(self) -> dict[str, int]:
        return dict(zip(ROLES[self.tag], self.vertices))

    def __getitem__(self, role: str) -> int:
        return self.vertices[ROLES[self.tag].index(role)]


def _chordal_cores(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    """4-cycles u1u2u3u4 with chord u2u4 and d(u2) = d(u4) = 3."""
    for p, q in g.edges():
        if g.degree(p) != 3 or g.degree(q) != 3:
            continue
        for u2, u4 in ((p, q), (q, p)):
            common = sorted(g.neighbors(u2) & g.neighbors(u4))
            for u1, u3 in itertools.permutations(common, 2):
                yield u1, u2, u3, u4


def _candidates_a(g: Graph):
    for u in g.vertices:
        if g.degree(u) == 2:
            for v in sorted(g.neighbors(u)):
                if g.degree(v) <= 4:
                    yield (u, v)


def _candidates_b(g: Graph):
    for p, q in g.edges():
        if g.degree(p) != 5 or g.degree(q) != 5:
            continue
        for v2, v3 in ((p, q), (q, p)):
            common = sorted(g.neighbors(v2) & g.neighbors(v3))
            for u2 in common:
                if g.degree(u2) != 2:
                    continue
                for v1, v4 in itertools.permutations(common, 2):
                    if u2 in (v1, v4) or not g.has_edge(v2, v4):
                        continue
                    for u1 in sorted(g.neighbors(v1) & g.neighbors(v2)):
                        if g.degree(u1) != 2:
                            continue
                        for u3 in sorted(g.neighbors(v3) & g.neighbors(v4)):
                            if g.degree(u3) != 2:
                                continue
                            t = (v1, u1, v2, u2, v3, u3, v4)
                            if len(set(t)) == 7:
                                yield t


def _candidates_c(g: Graph):
    for u2 in g.vertices:
        if g.degree(u2) != 2:
            continue
        for u1, u3 in itertools.permutations(sorted(g.neighbors(u2)), 2):
            for u4 in sorted(g.neighbors(u1) & g.neighbors(u3)):
                if u4 != u2 and g.degree(u4) == 2:
                    yield (u1, u2, u3, u4)


def _candidates_d(g: Graph):
    for u1, u2, u3, u4 in _chordal_cores(g):
        if g.degree(u3) <= 4:
            yield (u1, u2, u3, u4)


def _candidates_e(g: Graph):
    for u1, u2, u3, u4 in _chordal_cores(g):
        for v in sorted(g.neighbors(u3)):
            if g.degree(v) == 2 and v not in (u1, u2, u4):
                yield (u1, u2, u3, u4, v)


def _candidates_f(g: Graph):
    for u1, u2, u3, u4 in _chordal_cores(g):
        for v in sorted(g.neighbors(u3)):
            if g.degree(v) != 3 or v in (u1, u2, u4):
                continue
            for x in sorted(g.neighbors(u3) & g.neighbors(v)):
                if x not in (u1, u2, u4):
                    yield (u1, u2, u3, u4, v, x)


def _candidates_g(g: Graph):
    for u1, u2, u3, u4 in _chordal_cores(g):
        if not g.has_edge(u1, u3):
            continue
        for v in sorted(g.neighbors(u1) & g.neighbors(u3)):
            if v not in (u2, u4):
                yield (u1, u2, u3, u4, v)


_FINDERS = {
    "A": _candidates_a,
    "B": _candidates_b,
    "C": _candidates_c,
    "D": _candidates_d,
    "E": _candidates_e,
    "F": _candidates_f,
    "G": _candidates_g,
}


def iter_configurations(g: Graph, tags=TAGS) -> Iterator[Configuration]:
    """Every occurrence of the requested tags, sorted within each tag."""
    for tag in tags:
        for t in sorted(set(_FINDERS[tag](g))):
            yield Configuration(tag, t)


def find_configuration(g: Graph) -> Configuration | None:
    """The lexicographically least configuration (tag first, then bindings).

    Returns ``None`` when the graph contains none of the seven patterns,
    which for minimum degree >= 2 means the graph is not pseudo-outerplanar.
    """
    for tag in TAGS:
        best = min(_FINDERS[tag](g), default=None)
        if best is not None:
            return Configuration(tag, best)
    return None


def verify_configuration(g: Graph, c: Configuration) -> bool:
    """Re-check every degree and adjacency requirement of ``c`` in ``g``."""
    vs = c.vertices
    if len(set(vs)) != len(vs) or any(v not in g for v in vs):
        return False
    b = c.bindings
    d = g.degree

    def e(x: str, y: str) -> bool:
        return g.has_edge(b[x], b[y])

    if c.tag == "A":
        return d(b["u"]) == 2 and d(b["v"]) <= 4 and e("u", "v")
    if c.tag == "B":
        path = ["v1", "u1", "v2", "u2", "v3", "u3", "v4"]
        return (
            all(e(x, y) for x, y in zip(path, path[1:]))
            and all(e(x, y) for x, y in [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v4")])
            and d(b["u1"]) == d(b["u2"]) == d(b["u3"]) == 2
            and d(b["v2"]) == d(b["v3"]) == 5
        )
    cycle = e("u1", "u2") and e("u2", "u3") and e("u3", "u4") and e("u4", "u1")
    if not cycle:
        return False
    if c.tag == "C":
        return d(b["u2"]) == 2 and d(b["u4"]) == 2
    core = e("u2", "u4") and d(b["u2"]) == 3 and d(b["u4"]) == 3
    if not core:
        return False
    if c.tag == "D":
        return d(b["u3"]) <= 4
    if c.tag == "E":
        return e("u3", "v") and d(b["v"]) == 2
    if c.tag == "F":
        return e("u3", "v") and d(b["v"]) == 3 and e("u3", "x") and e("v", "x")
    if c.tag == "G":
        return e("u1", "u3") and e("u3", "v") and e("u1", "v")
    return False


def find_co_crossed_chords(d: Diagram) -> list[tuple[EdgeKey, EdgeKey]]:
    """Crossing chord pairs on four consecutive boundary vertices whose three
    connecting boundary edges are all present."""
    found: set[tuple[EdgeKey, EdgeKey]] = set()
    for block in d.blocks:
        n = len(block)
        if n < 4:
            continue
        for p in range(n):
            a, b, c, e = (block.vertex_at(p + t) for t in range(4))
            first, second = edge_key(a, c), edge_key(b, e)
            if first not in block.edges or second not in block.edges:
                continue
            if not chords_cross(block, first, second):
                continue
            if all(edge_key(x, y) in block.edges for x, y in ((a, b), (b, c), (c, e))):
                found.add(tuple(sorted((first, second))))
    return sorted(found)
