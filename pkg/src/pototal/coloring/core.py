"""Elements, list assignments, available lists and the total-colouring checker.

An element is either a vertex (an ``int``) or an edge (a canonical ``(u, v)``
tuple with ``u < v``). Colourings are plain dicts from elements to ints.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from pototal.graph import Graph

Element = Union[int, tuple[int, int]]
Coloring = dict


class ColoringError(Exception):
    """Base class for colouring failures."""


class UndersizedLists(ColoringError):
    def __init__(self, required: int, smallest: int):
        self.required = required
        self.smallest = smallest
        super().__init__(
            f"lists must have at least max(6, Delta+1) = {required} colours; smallest has {smallest}"
        )


class NotReducible(ColoringError):
    """No reducible configuration in a graph of minimum degree >= 2."""

    def __init__(self, graph: Graph):
        self.graph = graph
        super().__init__(
            f"no reducible configuration in residual graph with {graph.n_vertices} vertices "
            f"and edges {graph.edges()}"
        )


class NotColorable(ColoringError):
    pass


class HypothesisViolation(ColoringError):
    def __init__(self, lemma: str, failures: list[str]):
        self.lemma = lemma
        self.failures = failures
        super().__init__(f"{lemma}: " + "; ".join(failures))


class GadgetTooLarge(ColoringError):
    pass


def is_edge(x: Element) -> bool:
    return isinstance(x, tuple)


def element_key(x: Element) -> tuple:
    """Sort key putting vertices before edges."""
    return (1, *x) if isinstance(x, tuple) else (0, x)


def element_label(x: Element) -> str:
    return f"e:{x[0]}-{x[1]}" if isinstance(x, tuple) else f"v:{x}"


def parse_element_label(label: str) -> Element:
    kind, _, rest = label.partition(":")
    if kind == "v":
        return int(rest)
    if kind == "e":
        u, _, v = rest.partition("-")
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"bad edge label {label!r}")
        return (min(u, v), max(u, v))
    raise ValueError(f"bad element label {label!r}")


def neighborhood(g: Graph, x: Element) -> Iterator[Element]:
    """Elements adjacent or incident to ``x`` in ``g``."""
    if isinstance(x, tuple):
        u, v = x
        yield u
        yield v
        for a, b in ((u, v), (v, u)):
            for w in g.neighbors(a):
                if w != b:
                    yield (min(a, w), max(a, w))
    else:
        for w in g.neighbors(x):
            yield w
            yield (min(x, w), max(x, w))


def in_graph(g: Graph, x: Element) -> bool:
    if isinstance(x, tuple):
        return g.has_edge(*x)
    return x in g


class ListAssignment(Mapping):
    """Immutable map from elements to colour sets."""

    def __init__(self, lists: Mapping[Element, Iterable[int]]):
        self._lists = {x: frozenset(c) for x, c in lists.items()}

    @classmethod
    def uniform(cls, g: Graph, k: int) -> "ListAssignment":
        colors = frozenset(range(1, k + 1))
        return cls({x: colors for x in g.elements()})

    def __getitem__(self, x: Element) -> frozenset[int]:
        return self._lists[x]

    def __iter__(self):
        return iter(self._lists)

    def __len__(self) -> int:
        return len(self._lists)

    def __repr__(self) -> str:
        return f"ListAssignment({len(self._lists)} elements)"

    def missing(self, g: Graph) -> list[Element]:
        return [x for x in g.elements() if x not in self._lists]

    def min_size(self, g: Graph) -> int:
        return min((len(self._lists[x]) for x in g.elements()), default=0)

    def restricted(self, g: Graph) -> "ListAssignment":
        return ListAssignment({x: self._lists[x] for x in g.elements()})


def required_list_size(g: Graph) -> int:
    return max(6, g.max_degree() + 1)


def available_list(g: Graph, L: Mapping, phi: Mapping, x: Element) -> set[int]:
    """Colours of ``L[x]`` not used by any coloured neighbour of ``x``."""
    if x not in L:
        raise KeyError(f"element {element_label(x)} has no list")
    used = {phi[y] for y in neighborhood(g, x) if y in phi}
    return set(L[x]) - used


@dataclass
class VerifyReport:
    missing: list[Element] = field(default_factory=list)
    conflicts: list[tuple[Element, Element]] = field(default_factory=list)
    off_list: list[Element] = field(default_factory=list)
    extraneous: list[Element] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.missing or self.conflicts or self.off_list or self.extraneous)

    def lines(self) -> list[str]:
        out = [f"missing {element_label(x)}" for x in self.missing]
        out += [f"conflict {element_label(a)} {element_label(b)}" for a, b in self.conflicts]
        out += [f"off-list {element_label(x)}" for x in self.off_list]
        out += [f"unknown element {element_label(x)}" for x in self.extraneous]
        return out


def verify_total_coloring(g: Graph, L: Mapping, phi: Mapping) -> VerifyReport:
    """Totality, properness and list conformance of ``phi`` on ``g``."""
    report = VerifyReport()
    elements = g.elements()
    report.extraneous = sorted((x for x in phi if not in_graph(g, x)), key=element_key)
    for x in elements:
        if x not in phi:
            report.missing.append(x)
        elif x not in L or phi[x] not in L[x]:
            report.off_list.append(x)
    seen = set()
    for x in elements:
        if x not in phi:
            continue
        for y in neighborhood(g, x):
            if y in phi and phi[y] == phi[x]:
                pair = tuple(sorted((x, y), key=element_key))
                if pair not in seen:
                    seen.add(pair)
                    report.conflicts.append(pair)
    report.conflicts.sort(key=lambda p: (element_key(p[0]), element_key(p[1])))
    return report


# -- LST text format ---------------------------------------------------------


class ListFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_lists(text: str | bytes, g: Graph) -> ListAssignment:
    """Parse an LST document and resolve defaults against the elements of ``g``.

    Unlisted elements get ``{1..k}`` from ``default k``; failing that the
    whole declared palette; failing that the file is rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    explicit: dict[Element, frozenset[int]] = {}
    palette = default = None
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if not header_seen:
            if line != ["lst", "1"]:
                raise ListFormatError("expected header 'lst 1'", lineno)
            header_seen = True
            continue
        kind, args = line[0], line[1:]
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise ListFormatError(f"expected integers in {raw.strip()!r}", lineno) from None
        if kind in ("palette", "default"):
            if len(values) != 1 or values[0] < 1:
                raise ListFormatError(f"'{kind}' takes one positive integer", lineno)
            if kind == "palette":
                palette = values[0]
            else:
                default = values[0]
            continue
        if kind == "v" and len(values) >= 1:
            x: Element = values[0]
            colors = values[1:]
        elif kind == "e" and len(values) >= 2:
            u, v = values[:2]
            if u == v:
                raise ListFormatError("self-loop edge", lineno)
            x = (min(u, v), max(u, v))
            colors = values[2:]
        else:
            raise ListFormatError(f"unknown or malformed directive {kind!r}", lineno)
        if not in_graph(g, x):
            raise ListFormatError(f"{element_label(x)} is not an element of the graph", lineno)
        if x in explicit:
            raise ListFormatError(f"duplicate list for {element_label(x)}", lineno)
        if len(set(colors)) != len(colors):
            raise ListFormatError(f"repeated colour in list of {element_label(x)}", lineno)
        explicit[x] = frozenset(colors)
    if not header_seen:
        raise ListFormatError("expected header 'lst 1'", 1)
    fill = default if default is not None else palette
    lists = {}
    for x in g.elements():
        if x in explicit:
            lists[x] = explicit[x]
        elif fill is not None:
            lists[x] = frozenset(range(1, fill + 1))
        else:
            raise ListFormatError(f"no list for {element_label(x)} and no default")
    return ListAssignment(lists)


def format_lists(L: Mapping, g: Graph) -> str:
    out = ["lst 1"]
    for x in g.elements():
        colors = " ".join(str(c) for c in sorted(L[x]))
        if isinstance(x, tuple):
            out.append(f"e {x[0]} {x[1]} {colors}")
        else:
            out.append(f"v {x} {colors}")
    return "\n".join(out) + "\n"
