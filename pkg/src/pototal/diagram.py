"""Pseudo-outerplanar diagrams: blocks drawn on a circle, chords, crossings.

A diagram stores, for every block, the clockwise order of its vertices on
the circle together with the block's edges. Everything geometric is decided
combinatorially from boundary positions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

from pototal.graph import Graph

EdgeKey = tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    """Canonical key ``(min, max)`` of an undirected edge."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class DiagramError(ValueError):
    """Raised on malformed POD input or structurally broken diagrams."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntervalClass(enum.Enum):
    NON_EDGE = "NonEdge"
    PATH = "Path"
    SUBPATH = "Subpath"


@dataclass(frozen=True)
class Block:
    block_id: int
    boundary: tuple[int, ...]
    edges: frozenset[EdgeKey]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        boundary = tuple(self.boundary)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "edges", frozenset(edge_key(*e) for e in self.edges))
        if len(set(boundary)) != len(boundary):
            raise DiagramError(f"block {self.block_id}: repeated boundary vertex")
        pos = {v: i for i, v in enumerate(boundary)}
        for u, v in self.edges:
            if u not in pos or v not in pos:
                raise DiagramError(
                    f"block {self.block_id}: edge {u} {v} not on the block boundary"
                )
        object.__setattr__(self, "_pos", pos)

    def __len__(self) -> int:
        return len(self.boundary)

    def position(self, v: int) -> int:
        """Position of vertex ``v`` on this block's boundary."""
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not on block {self.block_id}") from None

    def vertex_at(self, i: int) -> int:
        return self.boundary[i % len(self.boundary)]

    def contains(self, v: int) -> bool:
        return v in self._pos

    def is_boundary_pair(self, u: int, v: int) -> bool:
        """True when ``u`` and ``v`` are consecutive on the circle."""
        gap = (self.position(u) - self.position(v)) % len(self)
        return gap in (1, len(self) - 1)

    def is_chord(self, e: EdgeKey) -> bool:
        self._require_edge(e)
        return not self.is_boundary_pair(*e)

    def chords(self) -> list[EdgeKey]:
        return sorted(e for e in self.edges if not self.is_boundary_pair(*e))

    def has_boundary_edge(self, i: int) -> bool:
        """Whether the boundary edge between positions ``i`` and ``i + 1`` exists."""
        n = len(self)
        if n < 2:
            return False
        u, v = self.vertex_at(i), self.vertex_at(i + 1)
        return edge_key(u, v) in self.edges

    def is_2_connected(self) -> bool:
        g = nx.Graph()
        g.add_nodes_from(self.boundary)
        g.add_edges_from(self.edges)
        return len(self) >= 3 and nx.is_biconnected(g)

    def rotated(self, shift: int) -> "Block":
        b = self.boundary
        shift %= max(len(b), 1)
        return Block(self.block_id, b[shift:] + b[:shift], self.edges)

    def reflected(self) -> "Block":
        return Block(self.block_id, tuple(reversed(self.boundary)), self.edges)

    def _require_edge(self, e: EdgeKey) -> None:
        if edge_key(*e) not in self.edges:
            raise ValueError(f"edge {e} is not in block {self.block_id}")


@dataclass(frozen=True)
class Diagram:
    n_vertices: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for b in self.blocks:
            for v in b.boundary:
                if not 0 <= v < self.n_vertices:
                    raise DiagramError(f"vertex id {v} out of range")

    def edges(self) -> list[EdgeKey]:
        return sorted(e for b in self.blocks for e in b.edges)

    def block_of(self, e: EdgeKey) -> Block:
        e = edge_key(*e)
        for b in self.blocks:
            if e in b.edges:
                return b
        raise ValueError(f"edge {e} is in no block")

    def canonical(self) -> "Diagram":
        """Blocks sorted by smallest id; each boundary rotated to start at its
        smallest id and oriented so the second entry is the smaller neighbour."""
        canon = []
        for b in self.blocks:
            bnd = b.boundary
            if bnd:
                start = bnd.index(min(bnd))
                bnd = bnd[start:] + bnd[:start]
                if len(bnd) > 2 and bnd[-1] < bnd[1]:
                    bnd = (bnd[0],) + tuple(reversed(bnd[1:]))
            canon.append((bnd, b.edges))
        canon.sort(key=lambda item: (min(item[0], default=-1), item[0], sorted(item[1])))
        return Diagram(
            self.n_vertices,
            tuple(Block(i, bnd, edges) for i, (bnd, edges) in enumerate(canon)),
        )


def chords_cross(block: Block, e1: EdgeKey, e2: EdgeKey) -> bool:
    """Whether two edges of ``block`` cross inside the disk.

    Walking the boundary from one endpoint of ``e1`` to the other, the edges
    cross iff exactly one endpoint of ``e2`` is met strictly in between.
    Edges sharing an endpoint never cross.
    """
    block._require_edge(e1)
    block._require_edge(e2)
    a, b = sorted(block.position(v) for v in e1)
    c, d = (block.position(v) for v in e2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def crossing_counts(block: Block) -> dict[EdgeKey, int]:
    counts = {e: 0 for e in block.edges}
    chords = block.chords()
    for e1, e2 in itertools.combinations(chords, 2):
        if chords_cross(block, e1, e2):
            counts[e1] += 1
            counts[e2] += 1
    return counts


def crossing_pairs(block: Block) -> list[tuple[EdgeKey, EdgeKey]]:
    chords = block.chords()
    return [
        (e1, e2)
        for e1, e2 in itertools.combinations(chords, 2)
        if chords_cross(block, e1, e2)
    ]


@dataclass
class ValidationReport:
    crossing_counts: dict[EdgeKey, int]
    problems: list[str]

    @property
    def valid(self) -> bool:
        return not self.problems


def validate_diagram(d: Diagram) -> ValidationReport:
    """Check the block/edge partition and the at-most-one-crossing rule."""
    counts: dict[EdgeKey, int] = {}
    problems: list[str] = []
    owner: dict[EdgeKey, int] = {}
    for b in d.blocks:
        for e in sorted(b.edges):
            if e in owner:
                problems.append(
                    f"edge {e[0]}-{e[1]} in blocks {owner[e]} and {b.block_id}"
                )
            owner[e] = b.block_id
        for e, c in sorted(crossing_counts(b).items()):
            counts[e] = c
            if c > 1:
                problems.append(f"edge {e[0]}-{e[1]} crossed {c} times")
    for b1, b2 in itertools.combinations(d.blocks, 2):
        shared = set(b1.boundary) & set(b2.boundary)
        if len(shared) > 1:
            problems.append(
                f"blocks {b1.block_id} and {b2.block_id} share vertices {sorted(shared)}"
            )
    return ValidationReport(counts, problems)


def to_graph(d: Diagram) -> Graph:
    return Graph.from_edges(range(d.n_vertices), d.edges())


def _interval_positions(block: Block, i: int, j: int) -> list[int]:
    n = len(block)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"positions ({i}, {j}) out of range for block of size {n}")
    if i == j:
        raise ValueError("interval endpoints must differ")
    return [(i + t) % n for t in range((j - i) % n + 1)]


def classify_interval(block: Block, i: int, j: int) -> IntervalClass:
    """Classify the clockwise boundary stretch from position ``i`` to ``j``."""
    span = _interval_positions(block, i, j)
    present = [block.has_boundary_edge(k) for k in span[:-1]]
    if all(present):
        return IntervalClass.PATH
    if len(span) == 2:
        return IntervalClass.NON_EDGE
    return IntervalClass.SUBPATH


def interval_vertices(block: Block, i: int, j: int, *, closed: bool = True) -> list[int]:
    """Vertices of the stretch from ``i`` to ``j``; ``closed=False`` drops the ends."""
    span = _interval_positions(block, i, j)
    if not closed:
        span = span[1:-1]
    return [block.vertex_at(k) for k in span]


def chord_contained(block: Block, outer: EdgeKey, inner: EdgeKey) -> bool:
    """Whether ``inner`` spans a sub-range of ``outer`` in linear boundary order.

    Any two block edges are accepted: the wrap-around edge between the first
    and last boundary vertex spans the whole block.
    """
    for e in (outer, inner):
        block._require_edge(e)
    i, j = sorted(block.position(v) for v in outer)
    k, l = sorted(block.position(v) for v in inner)
    return i <= k <= l <= j


# -- POD text format ---------------------------------------------------------


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise DiagramError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in values):
        raise DiagramError("negative integer", lineno)
    return values


def _logical_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_diagram(text: str | bytes) -> Diagram:
    """Parse a POD document into a :class:`Diagram`."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = list(_logical_lines(text))
    if not lines or lines[0][1] != ["pod", "1"]:
        raise DiagramError("expected header 'pod 1'", lines[0][0] if lines else 1)
    if len(lines) < 2 or lines[1][1][0] != "vertices" or len(lines[1][1]) != 2:
        raise DiagramError("expected 'vertices <n>'", lines[1][0] if len(lines) > 1 else 2)
    (n,) = _ints(lines[1][1][1:], lines[1][0])

    boundaries: list[list[int]] = []
    edges: list[tuple[int, EdgeKey, int | None]] = []
    for lineno, tokens in lines[2:]:
        kind, args = tokens[0], tokens[1:]
        if kind == "block":
            if edges:
                raise DiagramError("block declared after edges", lineno)
            values = _ints(args, lineno)
            if not values or values[0] == 0 or values[0] != len(values) - 1:
                raise DiagramError("block size does not match its vertex list", lineno)
            bnd = values[1:]
            for v in bnd:
                if v >= n:
                    raise DiagramError(f"vertex id {v} out of range", lineno)
            if len(set(bnd)) != len(bnd):
                raise DiagramError("repeated vertex on block boundary", lineno)
            boundaries.append(bnd)
        elif kind == "edge":
            inblock = None
            if len(args) == 4 and args[2] == "inblock":
                inblock = _ints(args[3:], lineno)[0]
                args = args[:2]
            if len(args) != 2:
                raise DiagramError("expected 'edge <u> <v> [inblock <b>]'", lineno)
            u, v = _ints(args, lineno)
            if u >= n or v >= n:
                raise DiagramError(f"vertex id {max(u, v)} out of range", lineno)
            if u == v:
                raise DiagramError(f"self-loop at vertex {u}", lineno)
            edges.append((lineno, edge_key(u, v), inblock))
        else:
            raise DiagramError(f"unknown directive {kind!r}", lineno)

    members = [set(b) for b in boundaries]
    per_block: list[set[EdgeKey]] = [set() for _ in boundaries]
    seen: set[EdgeKey] = set()
    for lineno, e, inblock in edges:
        if e in seen:
            raise DiagramError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
        homes = [i for i, m in enumerate(members) if e[0] in m and e[1] in m]
        if inblock is not None:
            if inblock >= len(boundaries) or inblock not in homes:
                raise DiagramError(f"edge {e[0]} {e[1]} not on block {inblock}", lineno)
            homes = [inblock]
        if not homes:
            raise DiagramError(
                f"edge {e[0]} {e[1]}: endpoints not on a common block boundary", lineno
            )
        if len(homes) > 1:
            raise DiagramError(
                f"edge {e[0]} {e[1]} is ambiguous between blocks {homes}; add 'inblock <b>'",
                lineno,
            )
        per_block[homes[0]].add(e)

    return Diagram(
        n, tuple(Block(i, tuple(b), frozenset(es)) for i, (b, es) in enumerate(zip(boundaries, per_block)))
    )


def print_diagram(d: Diagram) -> str:
    """Serialise ``d`` in canonical POD form."""
    c = d.canonical()
    out = ["pod 1", f"vertices {c.n_vertices}"]
    for b in c.blocks:
        out.append(" ".join(["block", str(len(b))] + [str(v) for v in b.boundary]))
    for b in c.blocks:
        for u, v in sorted(b.edges):
            homes = [x for x in c.blocks if x.contains(u) and x.contains(v)]
            suffix = f" inblock {b.block_id}" if len(homes) > 1 else ""
            out.append(f"edge {u} {v}{suffix}")
    return "\n".join(out) + "\n"


def single_block(boundary: Iterable[int], edges: Iterable[EdgeKey], n: int | None = None) -> Diagram:
    """Convenience constructor for a one-block diagram."""
    boundary = tuple(boundary)
    if n is None:
        n = max(boundary, default=-1) + 1
    return Diagram(n, (Block(0, boundary, frozenset(edge_key(*e) for e in edges)),))
