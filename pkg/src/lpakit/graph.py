"""Undirected, unweighted simple graphs with dense zero-based node and edge ids.

Graphs are canonical: edge ids follow the lexicographic order of their
``(u, v)`` pairs with ``u < v``, and adjacency lists are sorted by neighbor.
Loading the same edge set in any line order therefore produces an identical
``Graph``, and all downstream computations are reproducible bit for bit.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import IO, Iterable


class GraphInputError(ValueError):
    """Bad graph input. ``line`` is the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class EdgeListParseError(GraphInputError):
    """A line could not be read as two non-negative integer tokens."""


class EdgeListValidationError(GraphInputError):
    """Tokens parsed but violate graph constraints (e.g. a self-loop)."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``adjacency[u]`` holds ``(neighbor, edge_id)`` pairs in ascending neighbor
    order. ``edges[edge_id]`` is the unordered pair stored as ``(u, v)`` with
    ``u < v``. Node ids are dense in ``[0, node_count)``; ids that never occur
    in an edge are isolated nodes. Safe for concurrent reads.
    """

    node_count: int
    edge_count: int
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, u: int) -> int:
        if not 0 <= u < self.node_count:
            raise ValueError(f"node id {u} out of range [0, {self.node_count})")
        return len(self.adjacency[u])

    @property
    def average_degree(self) -> float:
        if self.node_count == 0:
            return 0.0
        return 2.0 * self.edge_count / self.node_count

    def neighbor_lists(self) -> list[list[int]]:
        """Plain neighbor-id lists, handy for hot loops."""
        return [[v for v, _ in row] for row in self.adjacency]


def from_edges(pairs: Iterable[tuple[int, int]], node_count: int | None = None) -> Graph:
    """Build a canonical Graph from unordered node-id pairs.

    Duplicate pairs (in either orientation) collapse to a single edge.
    ``node_count`` defaults to ``max id + 1``; passing a larger value appends
    isolated nodes.
    """
    canonical: set[tuple[int, int]] = set()
    max_id = -1
    for u, v in pairs:
        if u < 0 or v < 0:
            raise EdgeListValidationError(f"negative node id in edge ({u}, {v})")
        if u == v:
            raise EdgeListValidationError(f"self-loop at node {u}")
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
        canonical.add((u, v) if u < v else (v, u))
    if node_count is None:
        node_count = max_id + 1
    elif node_count < max_id + 1:
        raise EdgeListValidationError(
            f"node_count {node_count} smaller than max node id {max_id}"
        )
    edges = tuple(sorted(canonical))
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(node_count)]
    for eid, (u, v) in enumerate(edges):
        adjacency[u].append((v, eid))
        adjacency[v].append((u, eid))
    # Scanning edges in sorted order already leaves each adjacency row sorted
    # by neighbor: for node u, partners below u come first (ascending), then
    # partners above u (ascending).
    return Graph(
        node_count=node_count,
        edge_count=len(edges),
        adjacency=tuple(tuple(row) for row in adjacency),
        edges=edges,
    )


def load_edge_list(stream: IO[str], node_count: int | None = None) -> Graph:
    """Parse an edge-list stream: one ``u v`` pair per line.

    Blank lines and lines starting with ``#`` are ignored. Tokens must be
    ASCII decimal integers. Raises :class:`EdgeListParseError` for malformed
    lines and :class:`EdgeListValidationError` for self-loops, both carrying
    the 1-based line number.
    """
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two integer tokens, got {len(tokens)}", lineno
            )
        if not all(t.isascii() and t.isdigit() for t in tokens):
            raise EdgeListParseError(f"non-integer token in {line!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise EdgeListValidationError(f"self-loop {u} {v}", lineno)
        pairs.append((u, v))
    return from_edges(pairs, node_count=node_count)


def parse_edge_list(text: str, node_count: int | None = None) -> Graph:
    return load_edge_list(io.StringIO(text), node_count=node_count)


def read_edge_list(path, node_count: int | None = None) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, node_count=node_count)


def dump_edge_list(g: Graph, stream: IO[str]) -> None:
    """Write the canonical edge-list form: ``u v`` per edge, ascending pairs."""
    for u, v in g.edges:
        stream.write(f"{u} {v}\n")


def dumps_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    dump_edge_list(g, buf)
    return buf.getvalue()
