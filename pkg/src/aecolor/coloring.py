"""Partial proper edge colorings and the alternating-path machinery.

A coloring lives on the full graph; uncolored edges are first-class (the
whole extension procedure reasons about colorings of G minus one edge).
State is kept three ways at once, each serving a different access pattern:

 * a (vertex, color) -> neighbor table for O(1) alternating-walk steps,
 * per-vertex color bitmasks (plain ints) for O(1) palette set algebra,
 * a canonical edge -> color dict for iteration and serialization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from . import kernels
from .accel import NUMBA_ENABLED
from .errors import ImproperColoringError
from .graphs import Graph, _canon

Color = int


def bits(mask: int) -> list[int]:
    """Set bits of mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class PartialEdgeColoring:
    """Proper partial edge coloring over palette [1..k].

    `assign` rejects any color clash, so instances are proper by
    construction.  The only way to hold an improper coloring is
    `from_pairs(strict=False)`, which records the clashing edges in
    `violations` and keeps them out of the traversal table; validators
    report them, everything else refuses to run via them.
    """

    __slots__ = ("graph", "k", "_nbr", "_mask", "_colors", "violations")

    def __init__(self, graph: Graph, k: int):
        if k < 0:
            raise ValueError(f"palette size must be nonnegative, got {k}")
        self.graph = graph
        self.k = k
        self._nbr = np.full((graph.n, k + 1), -1, dtype=np.int32)
        self._mask = [0] * graph.n
        self._colors: dict[tuple[int, int], int] = {}
        self.violations: list[tuple[int, int, int]] = []

    @classmethod
    def from_pairs(
        cls,
        graph: Graph,
        k: int,
        pairs: Iterable[tuple[int, int, Optional[int]]],
        strict: bool = True,
    ) -> "PartialEdgeColoring":
        phi = cls(graph, k)
        for u, v, c in pairs:
            if c is None:
                continue
            try:
                phi.assign(u, v, c)
            except ImproperColoringError:
                if strict:
                    raise
                phi.violations.append((u, v, c))
        return phi

    def assign(self, u: int, v: int, c: Color) -> None:
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        if not 1 <= c <= self.k:
            raise ValueError(f"color {c} outside palette [1..{self.k}]")
        e = _canon(u, v)
        if e in self._colors:
            raise ValueError(f"edge {e} already colored; unassign first")
        if self._nbr[u, c] >= 0:
            raise ImproperColoringError(f"color {c} already at vertex {u}")
        if self._nbr[v, c] >= 0:
            raise ImproperColoringError(f"color {c} already at vertex {v}")
        self._nbr[u, c] = v
        self._nbr[v, c] = u
        bit = 1 << c
        self._mask[u] |= bit
        self._mask[v] |= bit
        self._colors[e] = c

    def unassign(self, u: int, v: int) -> Color:
        e = _canon(u, v)
        c = self._colors.pop(e, None)
        if c is None:
            raise ValueError(f"edge {e} is not colored")
        self._nbr[u, c] = -1
        self._nbr[v, c] = -1
        bit = ~(1 << c)
        self._mask[u] &= bit
        self._mask[v] &= bit
        return c

    def recolor(self, u: int, v: int, c: Color) -> Color:
        """Replace the color of a colored edge, atomically; returns the old color."""
        old = self.unassign(u, v)
        try:
            self.assign(u, v, c)
        except (ImproperColoringError, ValueError):
            self.assign(u, v, old)
            raise
        return old

    def color_of(self, u: int, v: int) -> Optional[Color]:
        return self._colors.get(_canon(u, v))

    def colored_neighbor(self, v: int, c: Color) -> Optional[int]:
        w = self._nbr[v, c]
        return int(w) if w >= 0 else None

    def seen_mask(self, v: int) -> int:
        return self._mask[v]

    def walk_end(self, start: int, first: Color, second: Color) -> tuple[int, Color, bool]:
        """Follow the maximal alternating walk from `start`, taking a
        `first`-colored edge, then `second`, then `first`, and so on.

        Returns (end vertex, color of the last edge taken, closed), where
        closed means the walk returned to `start` and the two-colored
        component through it is a cycle.
        """
        if NUMBA_ENABLED:
            end, last, closed = kernels.walk_end(self._nbr, start, first, second)
        else:
            end, last, closed = kernels.walk_end_py(self._nbr, start, first, second)
        return int(end), int(last), bool(closed)

    def is_complete(self) -> bool:
        return len(self._colors) == self.graph.m

    def colored_edge_count(self) -> int:
        return len(self._colors)

    def items(self) -> list[tuple[tuple[int, int], Color]]:
        return sorted(self._colors.items())

    def max_color_used(self) -> int:
        return max(self._colors.values(), default=0)

    def distinct_colors_used(self) -> int:
        return len(set(self._colors.values()))

    def copy(self) -> "PartialEdgeColoring":
        dup = object.__new__(PartialEdgeColoring)
        dup.graph = self.graph
        dup.k = self.k
        dup._nbr = self._nbr.copy()
        dup._mask = list(self._mask)
        dup._colors = dict(self._colors)
        dup.violations = list(self.violations)
        return dup

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialEdgeColoring)
            and self.k == other.k
            and self.graph == other.graph
            and self._colors == other._colors
        )

    def __repr__(self) -> str:
        return (
            f"PartialEdgeColoring(k={self.k}, colored={len(self._colors)}"
            f"/{self.graph.m})"
        )


class ColorMultiset:
    """Multiset of colors with join and multiplicity queries."""

    __slots__ = ("_counts",)

    def __init__(self, colors: Iterable[Color] = ()):
        self._counts = Counter(colors)

    @classmethod
    def _wrap(cls, counts: Counter) -> "ColorMultiset":
        ms = cls()
        ms._counts = counts
        return ms

    def mult(self, c: Color) -> int:
        return self._counts[c]

    def cardinality(self) -> int:
        return sum(self._counts.values())

    def colors(self) -> set[Color]:
        return set(self._counts)

    def join(self, other: "ColorMultiset") -> "ColorMultiset":
        return ColorMultiset._wrap(self._counts + other._counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, ColorMultiset) and self._counts == other._counts

    def __repr__(self) -> str:
        return f"ColorMultiset({dict(sorted(self._counts.items()))})"


def multiset_join(a: ColorMultiset, b: ColorMultiset) -> ColorMultiset:
    """Union adding multiplicities; cardinality is additive."""
    return a.join(b)


class CycleWitness(NamedTuple):
    vertices: tuple[int, ...]
    colors: tuple[Color, Color]


@dataclass(frozen=True)
class BichromaticPath:
    vertices: tuple[int, ...]
    colors: tuple[Color, Color]
    edge_colors: tuple[Color, ...]
    cycle: bool


@dataclass(frozen=True)
class ValidationReport:
    all_edges_colored: bool
    is_proper: bool
    cycle: Optional[CycleWitness]
    max_color: int

    @property
    def ok(self) -> bool:
        return self.all_edges_colored and self.is_proper and self.cycle is None


def seen_colors(phi: PartialEdgeColoring, v: int) -> set[Color]:
    """C(v): the colors on colored edges at v."""
    return set(bits(phi.seen_mask(v)))


def forbidden_from(phi: PartialEdgeColoring, u: int, v: int) -> set[Color]:
    """Colors at v excluding the edge vu itself.

    Asymmetric by design: forbidden_from(u, v) reads off v's other edges,
    forbidden_from(v, u) reads off u's.  uv must be an edge of the graph
    (it may be uncolored, in particular the current extension edge).
    """
    if not phi.graph.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    out = seen_colors(phi, v)
    own = phi.color_of(u, v)
    if own is not None:
        out.discard(own)
    return out


def _check_pair(phi: PartialEdgeColoring, alpha: Color, beta: Color) -> None:
    if alpha == beta:
        raise ValueError(f"colors must differ, got {alpha} twice")
    for c in (alpha, beta):
        if not 1 <= c <= phi.k:
            raise ValueError(f"color {c} outside palette [1..{phi.k}]")


def _walk_seq(phi, start, first, second):
    """Vertex/color sequence of the alternating walk from start via `first`."""
    seq = [start]
    cols: list[int] = []
    v, want = start, first
    while True:
        w = phi.colored_neighbor(v, want)
        if w is None:
            return seq, cols, False
        cols.append(want)
        if w == start:
            return seq, cols, True
        seq.append(w)
        v = w
        want = second if want == first else first


def maximal_bichromatic_path(
    g: Graph, phi: PartialEdgeColoring, v: int, alpha: Color, beta: Color
) -> Optional[BichromaticPath]:
    """The unique maximal (alpha, beta)-alternating path through v.

    Properness gives each vertex at most one incident edge per color, so
    the walk is deterministic.  A closed walk is reported with cycle=True.
    Absent when v touches neither color.
    """
    _check_pair(phi, alpha, beta)
    g._check(v)
    fwd_seq, fwd_cols, closed = _walk_seq(phi, v, alpha, beta)
    if closed:
        return BichromaticPath(tuple(fwd_seq), (alpha, beta), tuple(fwd_cols), True)
    back_seq, back_cols, closed = _walk_seq(phi, v, beta, alpha)
    if closed:
        return BichromaticPath(tuple(back_seq), (alpha, beta), tuple(back_cols), True)
    if len(fwd_seq) == 1 and len(back_seq) == 1:
        return None
    vertices = back_seq[::-1] + fwd_seq[1:]
    edge_colors = back_cols[::-1] + fwd_cols
    return BichromaticPath(tuple(vertices), (alpha, beta), tuple(edge_colors), False)


def exists_critical_path(
    g: Graph, phi: PartialEdgeColoring, alpha: Color, beta: Color, u: int, v: int
) -> bool:
    """True iff the maximal (alpha, beta)-path from u's alpha-edge ends at v
    via an alpha-edge.  Such a path is exactly what makes coloring the edge
    uv with beta close a bichromatic cycle."""
    _check_pair(phi, alpha, beta)
    if u == v:
        raise ValueError("critical path endpoints must differ")
    # a maximal path STARTS at u only if u is an endpoint, i.e. has no
    # beta-edge; without this the relation would not be symmetric in u, v
    if phi.colored_neighbor(u, beta) is not None:
        return False
    end, last, closed = phi.walk_end(u, alpha, beta)
    return not closed and end == v and last == alpha


def find_bichromatic_cycle(
    g: Graph, phi: PartialEdgeColoring
) -> Optional[CycleWitness]:
    """First cycle whose edges use exactly two colors, or None.

    Scan order is deterministic: color pairs lexicographically, start
    vertices ascending; the witness walk starts at the cycle's smallest-id
    vertex via its lower-color edge.
    """
    if phi.violations:
        raise ImproperColoringError(
            f"coloring has {len(phi.violations)} properness violations"
        )
    if NUMBA_ENABLED:
        out = np.empty(g.n + 1, dtype=np.int64)
        a, b, length = kernels.first_cycle(phi._nbr, out)
        if a < 0:
            return None
        return CycleWitness(tuple(int(x) for x in out[:length]), (int(a), int(b)))
    return _find_cycle_py(g, phi)


def _find_cycle_py(g: Graph, phi: PartialEdgeColoring) -> Optional[CycleWitness]:
    """Pure-Python cycle scan; same witness order as the compiled kernel.

    Iterates only vertices that actually carry each color pair, so it stays
    near O(k·m) instead of the kernel's brute O(k²·n) table sweep.
    """
    by_color: dict[int, list[int]] = {}
    for (u, v), c in phi.items():
        by_color.setdefault(c, []).append(u)
        by_color.setdefault(c, []).append(v)
    present = sorted(by_color)
    for c in present:
        by_color[c] = sorted(set(by_color[c]))
    for i, a in enumerate(present):
        for b in present[i + 1:]:
            bbit = 1 << b
            visited: set[int] = set()
            for s in by_color[a]:
                if s in visited or not phi.seen_mask(s) & bbit:
                    continue
                seq, _cols, closed = _walk_seq(phi, s, a, b)
                visited.update(seq)
                if closed:
                    return CycleWitness(tuple(seq), (a, b))
    return None


def validate_acyclic(g: Graph, phi: PartialEdgeColoring) -> ValidationReport:
    """Full acyclicity report: completeness, properness, cycle witness, max color."""
    all_colored = phi.is_complete()
    proper = not phi.violations
    cycle = find_bichromatic_cycle(g, phi) if proper else None
    return ValidationReport(all_colored, proper, cycle, phi.max_color_used())
