"""Simple undirected graphs with dense integer vertex ids.

Graphs are immutable values: mutating operations return new graphs.  The
reduce/extend colorer keeps a stack of (graph, removed edge) frames, so
cheap structural sharing is less important than not aliasing state.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import EdgeListParseError

VertexId = int
Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        canon: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _canon(u, v)
            if e in canon:
                raise ValueError(f"duplicate edge ({u},{v})")
            canon.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = frozenset(canon)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[Edge]:
        """Canonical edge list: sorted (min, max) pairs."""
        return sorted(self._edges)

    def edge_set(self) -> frozenset[Edge]:
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _canon(u, v)
        if e not in self._edges:
            raise ValueError(f"edge ({u},{v}) not in graph")
        # the reduce loop strips one edge per step, so skip revalidation
        # and patch the two adjacency rows instead of rebuilding
        g = object.__new__(Graph)
        g._n = self._n
        g._edges = self._edges - {e}
        adj = list(self._adj)
        adj[u] = tuple(x for x in adj[u] if x != v)
        adj[v] = tuple(x for x in adj[v] if x != u)
        g._adj = tuple(adj)
        return g

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = _canon(u, v)
        if e in self._edges:
            raise ValueError(f"edge ({u},{v}) already in graph")
        return Graph(self._n, self._edges | {e})

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.connected_components()) == 1

    def _check(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise ValueError(f"vertex {v} out of range for n={self._n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class DeletionResult(NamedTuple):
    graph: Graph
    original_ids: tuple[int, ...]  # original_ids[new_id] = id in the input graph


def degree(g: Graph, v: VertexId) -> int:
    return g.degree(v)


def degree_class_neighbors(g: Graph, v: VertexId, k: int) -> tuple[set[int], int]:
    """Neighbors of v whose degree is exactly k, with their count."""
    if k < 0:
        raise ValueError(f"degree class must be nonnegative, got {k}")
    nk = {x for x in g.neighbors(v) if g.degree(x) == k}
    return nk, len(nk)


def delete_two_vertices(g: Graph) -> DeletionResult:
    """Remove every vertex of degree exactly 2, in a single simultaneous pass.

    Not iterated: the result may itself contain 2-vertices.  Survivors are
    renumbered densely; the mapping back to input ids is returned alongside.
    """
    keep = [v for v in g.vertices() if g.degree(v) != 2]
    new_id = {old: i for i, old in enumerate(keep)}
    edges = [
        (new_id[u], new_id[v])
        for u, v in g.edges()
        if u in new_id and v in new_id
    ]
    return DeletionResult(Graph(len(keep), edges), tuple(keep))


def remove_edge(g: Graph, u: VertexId, v: VertexId) -> Graph:
    return g.remove_edge(u, v)


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` / `u v` edge-list format, 0-based ids.

    Raises EdgeListParseError with a 1-based line number on any defect,
    including duplicate edges and self-loops.
    """
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise EdgeListParseError("missing header line `n m`", idx + 1)
    header = lines[idx].split()
    if len(header) != 2:
        raise EdgeListParseError(f"expected header `n m`, got {lines[idx].strip()!r}", idx + 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer header fields {lines[idx].strip()!r}", idx + 1) from None
    if n < 0 or m < 0:
        raise EdgeListParseError("n and m must be nonnegative", idx + 1)

    edges: list[Edge] = []
    canon: set[Edge] = set()
    lineno = idx + 1
    for raw in lines[idx + 1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected `u v`, got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex ids {raw.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex id out of range in ({u},{v})", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        e = _canon(u, v)
        if e in canon:
            raise EdgeListParseError(f"duplicate edge ({u},{v})", lineno)
        canon.add(e)
        edges.append(e)
    if len(edges) != m:
        raise EdgeListParseError(f"header declares m={m} but {len(edges)} edges were given", lineno)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
