"""Finite simple undirected graphs and the constructors used throughout.

Vertices are the integers 0..vertex_count-1 and edges are canonically stored
as (u, v) pairs with u < v, so two equal graphs compare equal.  Graphs are
immutable; connectedness is checked by the group-level operations, not here,
because joins of disconnected graphs are legitimate inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Tuple

from .errors import InputError

__all__ = [
    "Graph",
    "from_edge_list",
    "complete",
    "path",
    "cycle",
    "join",
    "cone",
    "is_connected",
    "leaves",
    "is_tree",
    "has_conformity_property",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
]

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise InputError(f"vertex count must be a positive integer, got {vertex_count!r}")
        canonical = set()
        for pair in edges:
            u, v = pair
            if not isinstance(u, int) or not isinstance(v, int):
                raise InputError(f"edge endpoints must be integers, got {pair!r}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(
                    f"edge ({u}, {v}) out of range for {vertex_count} vertices"
                )
            canonical.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(canonical))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> tuple:
        neighbors = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adjacency[u]

    def edge_list(self) -> list:
        """Edges in sorted order, for deterministic serialization."""
        return sorted(self.edges)

    def _check_vertex(self, v: int):
        if not isinstance(v, int) or not (0 <= v < self.vertex_count):
            raise InputError(f"vertex {v!r} out of range [0, {self.vertex_count})")

    def __repr__(self):
        return f"Graph({self.vertex_count}, {self.edge_list()})"


def from_edge_list(n: int, pairs: Iterable[Edge]) -> Graph:
    """Build a graph on n vertices; duplicate edges are silently merged."""
    return Graph(n, pairs)


def complete(m: int) -> Graph:
    if m < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def path(m: int) -> Graph:
    if m < 1:
        raise InputError("path needs at least one vertex")
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle(m: int) -> Graph:
    if m < 3:
        raise InputError("cycle needs at least three vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets.

    Vertices of g1 keep their indices; vertices of g2 are shifted up by
    g1.vertex_count.
    """
    k1 = g1.vertex_count
    edges = list(g1.edges)
    edges += [(u + k1, v + k1) for u, v in g2.edges]
    edges += [(u, v + k1) for u in range(k1) for v in range(g2.vertex_count)]
    return Graph(k1 + g2.vertex_count, edges)


def cone(g: Graph, n: int) -> Graph:
    """The nth cone over g: the join of g with the complete graph K_n.

    Base vertices keep indices 0..k-1 and the n cone vertices follow.
    """
    if n < 1:
        raise InputError("cone size must be at least 1")
    return join(g, complete(n))


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def leaves(g: Graph) -> tuple:
    """Sorted tuple of the degree-1 vertices."""
    return tuple(v for v in range(g.vertex_count) if g.degree(v) == 1)


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - 1 and is_connected(g)


def has_conformity_property(g: Graph, s: Iterable[int]) -> bool:
    """True iff s induces a complete or edgeless subgraph and all members of
    s have identical neighborhoods outside s."""
    members = sorted(s)
    if not members:
        raise InputError("conformity set must be nonempty")
    if len(set(members)) != len(members):
        raise InputError("conformity set has duplicate vertices")
    for v in members:
        g._check_vertex(v)
    member_set = set(members)
    inside_edges = sum(
        1 for i, u in enumerate(members) for v in members[i + 1 :] if g.has_edge(u, v)
    )
    m = len(members)
    if inside_edges not in (0, m * (m - 1) // 2):
        return False
    outside = [g.neighbors(v) - member_set for v in members]
    return all(nbhd == outside[0] for nbhd in outside[1:])


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Line 1 is ``n m`` (vertex and edge counts), followed by m lines ``u v``
    with 0-based indices.  Lines starting with ``#`` are comments and blank
    lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))

    if not rows:
        raise InputError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputError(f"line {lineno}: header must contain two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges but file has {len(body)} edge lines")
    pairs = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: edge line must be 'u v'")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise InputError(f"line {lineno}: edge endpoints must be integers") from None
    return from_edge_list(n, pairs)


def read_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"
