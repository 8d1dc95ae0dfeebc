"""Exhaustive ground truth for acyclic edge colorability at desk scale.

Backtracking over edges with properness pruning, incremental bichromatic-
cycle detection, and color symmetry breaking (the i-th newly introduced
color is at most i).  Intended for graphs up to roughly 15 edges; beyond
that the search budget turns results into the explicit EXHAUSTED outcome,
never a silent wrong answer.

The module also houses the independent brute-force cycle enumerator the
test suite compares the traversal kernel against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .graphs import Graph


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 200_000_000
    wall_seconds: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.wall_seconds is not None and self.wall_seconds <= 0:
            raise ValueError("wall_seconds must be positive")


class Exhausted:
    """Budget ran out before the search decided.  Not an answer.

    Truthiness is forbidden so a timeout can never silently pass for a
    boolean result; compare with `is EXHAUSTED`.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        raise TypeError("Exhausted is not a boolean answer; compare with `is EXHAUSTED`")

    def __repr__(self):
        return "EXHAUSTED"


EXHAUSTED = Exhausted()

_FOUND, _NO, _OUT = 0, 1, 2


def _ordered_edges(g: Graph, order: str) -> list[tuple[int, int]]:
    edges = g.edges()
    if order == "input":
        return edges
    if order == "degree_sum":
        # Descending endpoint degree sum, then edge id: strongest pruning first.
        ids = sorted(
            range(len(edges)),
            key=lambda i: (-(g.degree(edges[i][0]) + g.degree(edges[i][1])), i),
        )
        return [edges[i] for i in ids]
    raise ValueError(f"unknown edge order {order!r}")


class _Searcher:
    def __init__(self, g: Graph, k: int, budget: SearchBudget, order: str):
        self.g = g
        self.k = k
        self.edges = _ordered_edges(g, order)
        self.nbr = [[-1] * (k + 1) for _ in range(g.n)]
        self.mask = [0] * g.n
        self.assigned: list[int] = []
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = (
            time.monotonic() + budget.wall_seconds
            if budget.wall_seconds is not None
            else None
        )

    def _closes_cycle(self, u: int, v: int, c: int) -> bool:
        # A new {c,d}-cycle through uv needs d at both ends and an
        # alternating d,c,...,d path from u to v.
        both = self.mask[u] & self.mask[v]
        nbr = self.nbr
        while both:
            low = both & -both
            d = low.bit_length() - 1
            both ^= low
            x, want = u, d
            while True:
                nxt = nbr[x][want]
                if nxt < 0:
                    break
                if nxt == v:
                    if want == d:
                        return True
                    break
                x = nxt
                want = c if want == d else d
        return False

    def run(self, idx: int, used: int) -> int:
        if idx == len(self.edges):
            return _FOUND
        u, v = self.edges[idx]
        free = ~(self.mask[u] | self.mask[v])
        cap = min(self.k, used + 1)
        for c in range(1, cap + 1):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                return _OUT
            if self.deadline is not None and not self.nodes & 2047:
                if time.monotonic() > self.deadline:
                    return _OUT
            if not free & (1 << c):
                continue
            if self._closes_cycle(u, v, c):
                continue
            self.nbr[u][c] = v
            self.nbr[v][c] = u
            bit = 1 << c
            self.mask[u] |= bit
            self.mask[v] |= bit
            self.assigned.append(c)
            res = self.run(idx + 1, max(used, c))
            if res != _NO:
                return res
            self.assigned.pop()
            self.nbr[u][c] = -1
            self.nbr[v][c] = -1
            self.mask[u] &= ~bit
            self.mask[v] &= ~bit
        return _NO


def search_acyclic_coloring(
    g: Graph,
    k: int,
    budget: Optional[SearchBudget] = None,
    order: str = "degree_sum",
) -> Union[dict[tuple[int, int], int], None, Exhausted]:
    """Exact search for an acyclic edge k-coloring.

    Returns an edge -> color dict, None when provably impossible, or
    EXHAUSTED when the budget ran out first.
    """
    if k < 0:
        raise ValueError(f"palette size must be nonnegative, got {k}")
    if g.m == 0:
        return {}
    if k == 0:
        return None
    s = _Searcher(g, k, budget or SearchBudget(), order)
    res = s.run(0, 0)
    if res == _FOUND:
        return dict(zip(s.edges, s.assigned))
    if res == _OUT:
        return EXHAUSTED
    return None


def is_acyclically_k_colorable(
    g: Graph,
    k: int,
    budget: Optional[SearchBudget] = None,
    order: str = "degree_sum",
) -> Union[bool, Exhausted]:
    """Exact decision; EXHAUSTED (never a bool) when the budget ran out."""
    if k < 1:
        raise ValueError(f"palette size must be >= 1, got {k}")
    found = search_acyclic_coloring(g, k, budget, order)
    if found is EXHAUSTED:
        return EXHAUSTED
    return found is not None


def exact_chi_a(
    g: Graph, budget: Optional[SearchBudget] = None
) -> Union[int, Exhausted]:
    """Smallest palette admitting an acyclic edge coloring.

    Searched upward from the trivial lower bound max degree; all-distinct
    colors are always acyclic, so the search stops by k = m.
    """
    if g.m == 0:
        return 0
    for k in range(max(g.max_degree(), 1), g.m + 1):
        res = is_acyclically_k_colorable(g, k, budget)
        if res is EXHAUSTED:
            return EXHAUSTED
        if res:
            return k
    raise AssertionError("unreachable: m distinct colors are always acyclic")


def enumerate_cycles(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Every simple cycle, as an edge set, by brute force over edge subsets.

    Exponential in m by design: this is the independent oracle the
    traversal kernel is validated against, so it shares no code with it.
    """
    edges = g.edges()
    if len(edges) > 20:
        raise ValueError(f"cycle enumeration is exponential; m={len(edges)} is too big")
    cycles = []
    for size in range(3, len(edges) + 1):
        for subset in combinations(edges, size):
            deg: dict[int, int] = {}
            for u, v in subset:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connectivity: walk the subset from any vertex
            adj: dict[int, list[int]] = {v: [] for v in deg}
            for u, v in subset:
                adj[u].append(v)
                adj[v].append(u)
            start = next(iter(deg))
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == len(deg):
                cycles.append(frozenset(subset))
    return cycles


def bichromatic_cycle_exists_brute(
    g: Graph,
    coloring: dict[tuple[int, int], int],
    cycles: Optional[list[frozenset[tuple[int, int]]]] = None,
) -> bool:
    """Reference implementation: some fully colored cycle uses exactly 2 colors."""
    if cycles is None:
        cycles = enumerate_cycles(g)
    for cyc in cycles:
        colors = {coloring.get(e) for e in cyc}
        if None not in colors and len(colors) == 2:
            return True
    return False
