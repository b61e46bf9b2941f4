"""Simple undirected graphs stored as adjacency bitsets, plus file I/O.

Vertices are 0-based. Row ``i`` of ``adj`` is an int whose bit ``j`` is set
when ``{i, j}`` is an edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import GraphError, GraphFormatError
from .pauli import PauliWord


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~mask:
                raise GraphError(f"row {i} references a vertex >= {self.n}")
            if (row >> i) & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not (self.adj[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad indices."""
        rows = [0] * n
        for edge in edges:
            i, j = edge
            for v in (i, j):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise GraphError(f"vertex {v!r} out of range for n={n}")
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if (rows[i] >> j) & 1:
                raise GraphError(f"duplicate edge ({min(i, j)}, {max(i, j)})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted lexicographically."""
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def degree(self, i: int) -> int:
        return self.neighborhood(i).bit_count()

    def neighborhood(self, i: int) -> int:
        _check_vertex(self, i)
        return self.adj[i]

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.neighborhood(i)))

    def correlation_operator(self, i: int) -> PauliWord:
        """X on vertex ``i`` and Z on each of its neighbours."""
        return PauliWord(self.n, 1 << i, self.neighborhood(i), 0)

    def generators(self) -> list[PauliWord]:
        return [self.correlation_operator(i) for i in range(self.n)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(g: Graph, i: int) -> None:
    if not 0 <= i < g.n:
        raise GraphError(f"vertex {i} out of range for n={g.n}")


def neighborhood(g: Graph, i: int) -> int:
    return g.neighborhood(i)


def correlation_operator(g: Graph, i: int) -> PauliWord:
    return g.correlation_operator(i)


def adjacency_display(g: Graph) -> str:
    """Render the adjacency matrix with X on the diagonal, Z for edges, I otherwise.

    Row ``i`` is the letter string of the correlation operator of vertex ``i``.
    """
    return "\n".join(g.correlation_operator(i).letters() for i in range(g.n)) + (
        "\n" if g.n else ""
    )


# -- file formats -----------------------------------------------------------

def save_graph(g: Graph, fmt: str = "json") -> bytes:
    if fmt == "json":
        doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
        return (json.dumps(doc) + "\n").encode("ascii")
    if fmt == "edgelist":
        lines = [str(g.n)] + [f"{i} {j}" for i, j in g.edges]
        return ("\n".join(lines) + "\n").encode("ascii")
    raise ValueError(f"unknown graph format {fmt!r}")


def load_graph(source: bytes | str, fmt: str | None = None) -> Graph:
    """Parse a graph from JSON or edgelist text; ``fmt=None`` sniffs the format."""
    if isinstance(source, bytes):
        try:
            source = source.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("graph file is not ASCII") from exc
    if fmt is None:
        fmt = "json" if source.lstrip().startswith("{") else "edgelist"
    if fmt == "json":
        return _load_json(source)
    if fmt == "edgelist":
        return _load_edgelist(source)
    raise ValueError(f"unknown graph format {fmt!r}")


def _load_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise GraphFormatError('expected an object with "n" and "edges"')
    n, edges = doc["n"], doc["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"invalid vertex count {n!r}")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in edges
    ):
        raise GraphFormatError("edges must be a list of [i, j] pairs")
    return Graph.from_edges(n, edges)


def _load_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edgelist")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphFormatError(f"expected 'i j', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"malformed edgelist: {exc}") from exc
    if n < 0:
        raise GraphFormatError(f"invalid vertex count {n}")
    return Graph.from_edges(n, edges)
