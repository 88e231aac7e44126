"""Simple undirected graphs and the named families used for graph states."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from graphfid.errors import GraphParseError, InvalidParameterError, InvalidSizeError

__all__ = [
    "Graph",
    "Numbering",
    "GridSpec",
    "complete_graph",
    "grid_cluster",
    "path_graph",
    "cycle_graph",
    "parse_graph",
    "format_graph",
    "read_graph",
    "isolated_vertices",
]


@dataclass(frozen=True)
class Graph:
    """Vertex count plus a set of unordered edges, 0-indexed.

    Edges are normalised to ``(min, max)`` pairs. Instances are immutable and
    hashable, so they can key caches.
    """

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParameterError(f"vertex count must be a positive integer, got {self.n!r}")
        normalised = set()
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise InvalidParameterError(f"self-loop on vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InvalidParameterError(f"edge {edge} references a vertex outside 0..{self.n - 1}")
            normalised.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalised))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidParameterError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class Numbering(str, enum.Enum):
    ROW_MAJOR = "row-major"
    BOUSTROPHEDON = "boustrophedon"


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int
    numbering: Numbering = Numbering.BOUSTROPHEDON

    def index(self, row: int, col: int) -> int:
        """Qubit index of grid cell ``(row, col)``."""
        if self.numbering is Numbering.BOUSTROPHEDON and row % 2 == 1:
            col = self.cols - 1 - col
        return row * self.cols + col


def complete_graph(n: int) -> Graph:
    """The fully-connected graph K_n."""
    if n < 2:
        raise InvalidSizeError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def grid_cluster(spec: GridSpec | tuple[int, int]) -> Graph:
    """Nearest-neighbour ``rows x cols`` lattice.

    With boustrophedon numbering (the default) row 0 runs left to right, row 1
    right to left, and so on.
    """
    if not isinstance(spec, GridSpec):
        spec = GridSpec(*spec)
    numbering = Numbering(spec.numbering)
    spec = GridSpec(spec.rows, spec.cols, numbering)
    if spec.rows < 1 or spec.cols < 1:
        raise InvalidSizeError(f"grid dimensions must be positive, got {spec.rows}x{spec.cols}")
    if spec.rows * spec.cols < 2:
        raise InvalidSizeError("a 1x1 grid is an isolated qubit")
    edges = set()
    for r in range(spec.rows):
        for c in range(spec.cols):
            v = spec.index(r, c)
            if c + 1 < spec.cols:
                edges.add((v, spec.index(r, c + 1)))
            if r + 1 < spec.rows:
                edges.add((v, spec.index(r + 1, c)))
    return Graph(spec.rows * spec.cols, frozenset(edges))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidSizeError(f"path needs n >= 2, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not g.neighbors[v]]


def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the plain-text graph format.

    The first non-comment line holds the vertex count, every following
    non-comment line an edge ``i j``. Lines starting with ``#`` and blank lines
    are skipped.

    >>> parse_graph("3\\n0 1\\n1 2\\n").num_edges
    2
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise GraphParseError(f"expected a positive vertex count, got {line!r}", lineno)
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphParseError(f"expected 'i j', got {line!r}", lineno)
        i, j = values
        for v in (i, j):
            if not 0 <= v < n:
                raise GraphParseError(f"vertex {v} out of range 0..{n - 1}", lineno)
        if i == j:
            raise GraphParseError(f"self-loop on vertex {i}", lineno)
        key = (min(i, j), max(i, j))
        if key in edges:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        edges.add(key)
    if n is None:
        raise GraphParseError("missing vertex count")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
