"""Seeded random and exhaustive pseudo-outerplanar diagram generators."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from pototal.diagram import Block, Diagram, edge_key, validate_diagram
from pototal.graph import Graph

MAX_ENUMERATION_N = 9


class InfeasibleParams(ValueError):
    pass


@dataclass(frozen=True)
class GenParams:
    n_vertices: int
    n_blocks: int = 1
    chord_density: float = 0.5
    crossing_density: float = 0.5
    boundary_edge_density: float = 1.0
    ensure_min_degree_2: bool = False
    seed: int = 0

    def __post_init__(self):
        for name in ("chord_density", "crossing_density", "boundary_edge_density"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InfeasibleParams(f"{name} must lie in [0, 1], got {value}")
        if self.n_vertices < 1:
            raise InfeasibleParams("n_vertices must be at least 1")
        if self.n_blocks < 1:
            raise InfeasibleParams("n_blocks must be at least 1")
        if self.n_vertices == 1 and self.n_blocks != 1:
            raise InfeasibleParams("a single vertex forms exactly one block")
        if self.n_vertices > 1 and self.n_blocks > self.n_vertices - 1:
            raise InfeasibleParams(
                f"{self.n_blocks} blocks need at least {self.n_blocks + 1} vertices"
            )


def _cross(a: int, b: int, c: int, d: int) -> bool:
    # Positions on one circle; a < b and c < d.
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _block_edges(size: int, p: GenParams, rng: random.Random) -> set[tuple[int, int]]:
    """Edges of one block as pairs of boundary positions."""
    if size == 1:
        return set()
    if size == 2:
        return {(0, 1)}
    edges = {
        tuple(sorted((i, (i + 1) % size)))
        for i in range(size)
        if rng.random() < p.boundary_edge_density
    }
    candidates = [
        (i, j) for i in range(size) for j in range(i + 2, size) if not (i == 0 and j == size - 1)
    ]
    rng.shuffle(candidates)
    chords: list[tuple[int, int]] = []
    crossed: dict[tuple[int, int], int] = {}
    for a, b in candidates:
        if rng.random() >= p.chord_density:
            continue
        hits = [c for c in chords if _cross(a, b, *c)]
        if len(hits) > 1:
            continue
        if hits:
            if crossed[hits[0]] or rng.random() >= p.crossing_density:
                continue
            crossed[hits[0]] = 1
        chords.append((a, b))
        crossed[(a, b)] = len(hits)
    edges.update(chords)
    return edges


def gen_random_diagram(p: GenParams) -> Diagram:
    """A random valid diagram; identical parameters give identical output."""
    rng = random.Random(p.seed)
    n, b = p.n_vertices, p.n_blocks
    if n == 1:
        return Diagram(1, (Block(0, (0,), frozenset()),))

    # New vertices contributed by each block; the first block also owns vertex 0.
    floor = 2 if p.ensure_min_degree_2 and n - 1 >= 2 * b else 1
    fresh = [floor] * b
    for _ in range(n - 1 - floor * b):
        fresh[rng.randrange(b)] += 1

    next_id = 1
    raw_blocks: list[list[int]] = []
    for i, count in enumerate(fresh):
        if i == 0:
            members = [0]
        else:
            members = [rng.randrange(next_id)]
        members += list(range(next_id, next_id + count))
        next_id += count
        rng.shuffle(members)
        raw_blocks.append(members)

    block_edges = [
        {edge_key(members[i], members[j]) for i, j in _block_edges(len(members), p, rng)}
        for members in raw_blocks
    ]

    if p.ensure_min_degree_2:
        degree = [0] * n
        for es in block_edges:
            for u, v in es:
                degree[u] += 1
                degree[v] += 1
        for v in range(n):
            for members, es in zip(raw_blocks, block_edges):
                if degree[v] >= 2:
                    break
                if v not in members or len(members) < 2:
                    continue
                pos = members.index(v)
                for w in (members[pos - 1], members[(pos + 1) % len(members)]):
                    e = edge_key(v, w)
                    if degree[v] < 2 and e not in es:
                        es.add(e)
                        degree[v] += 1
                        degree[w] += 1

    relabel = list(range(n))
    rng.shuffle(relabel)
    blocks = tuple(
        Block(
            i,
            tuple(relabel[v] for v in members),
            frozenset(edge_key(relabel[u], relabel[v]) for u, v in es),
        )
        for i, (members, es) in enumerate(zip(raw_blocks, block_edges))
    )
    d = Diagram(n, blocks)
    report = validate_diagram(d)
    if not report.valid:  # construction bug, not a user error
        raise AssertionError(f"generator produced an invalid diagram: {report.problems}")
    return d


def _dihedral_maps(n: int) -> list[list[int]]:
    maps = []
    for shift in range(n):
        maps.append([(i + shift) % n for i in range(n)])
        maps.append([(shift - i) % n for i in range(n)])
    return maps


def enumerate_diagrams(n: int, min_degree_2_only: bool = False) -> Iterator[Diagram]:
    """All one-block diagrams on boundary ``0..n-1`` up to rotation and reflection."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {pq: k for k, pq in enumerate(pairs)}
    boundary = sorted({tuple(sorted((i, (i + 1) % n))) for i in range(n) if n > 1})
    chords = [pq for pq in pairs if pq not in boundary]
    images = [
        [index[tuple(sorted((m[i], m[j])))] for i, j in pairs] for m in _dihedral_maps(n)
    ]

    def canonical(mask: int) -> bool:
        bits = [k for k in range(len(pairs)) if mask >> k & 1]
        for img in images:
            if sum(1 << img[k] for k in bits) < mask:
                return False
        return True

    chord_sets: list[list[tuple[int, int]]] = []

    def extend(start: int, chosen: list[tuple[int, int]], counts: list[int]) -> None:
        chord_sets.append(list(chosen))
        for k in range(start, len(chords)):
            a, b = chords[k]
            hits = [t for t, c in enumerate(chosen) if _cross(a, b, *c)]
            if len(hits) > 1 or any(counts[t] for t in hits):
                continue
            for t in hits:
                counts[t] += 1
            chosen.append((a, b))
            counts.append(len(hits))
            extend(k + 1, chosen, counts)
            chosen.pop()
            counts.pop()
            for t in hits:
                counts[t] -= 1

    extend(0, [], [])
    for cs in chord_sets:
        chord_mask = sum(1 << index[c] for c in cs)
        for r in range(len(boundary) + 1):
            for bs in itertools.combinations(boundary, r):
                edges = list(cs) + list(bs)
                if min_degree_2_only:
                    degree = [0] * n
                    for u, v in edges:
                        degree[u] += 1
                        degree[v] += 1
                    if min(degree) < 2:
                        continue
                mask = chord_mask | sum(1 << index[e] for e in bs)
                if canonical(mask):
                    yield Diagram(n, (Block(0, tuple(range(n)), frozenset(edges)),))


def gen_random_lists(g: Graph, k: int, palette: int, seed: int):
    """Independent uniform ``k``-subsets of ``1..palette`` for every element."""
    from pototal.coloring.core import ListAssignment

    if not 1 <= k <= palette:
        raise ValueError(f"need 1 <= k <= palette, got k={k}, palette={palette}")
    rng = random.Random(seed)
    colors = range(1, palette + 1)
    return ListAssignment({x: frozenset(rng.sample(colors, k)) for x in g.elements()})
