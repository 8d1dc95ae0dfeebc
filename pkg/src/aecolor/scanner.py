"""Unavoidable low-degree configurations and the reduction-order scan.

Every connected planar graph contains a vertex matching one of four local
degree patterns (the discharging argument in the auditor module proves it):

  A1: d(v) <= 2
  A2: d(v) = 3 and d(v1) <= 11
  A3: d(v) = 4 and d(v1) <= 7, d(v2) <= 9
  A4: d(v) = 5 and d(v1) <= 6, d(v2) <= 7, d(v3) <= 8

with v's neighbors v1 <= v2 <= ... sorted by degree.  The scan therefore
doubles as a one-sided planarity refuter: no match on any graph is
constructive evidence of non-planarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotPlanarEvidence
from .graphs import Graph

# Sorted-neighbor-degree caps per kind; a prefix check against these decides
# membership.  A1 has no neighbor condition.
_CAPS = {"A2": (11,), "A3": (7, 9), "A4": (6, 7, 8)}
_KIND_BY_DEGREE = {3: "A2", 4: "A3", 5: "A4"}


@dataclass(frozen=True)
class Configuration:
    kind: str
    vertex: int
    neighbors: tuple[tuple[int, int], ...]  # (vertex, degree), by (degree, id)

    def neighbor_ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.neighbors)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "v": self.vertex,
            "neighbors": [{"v": v, "d": d} for v, d in self.neighbors],
        }


def _sorted_neighbors(g: Graph, v: int) -> tuple[tuple[int, int], ...]:
    return tuple(
        (u, g.degree(u))
        for u in sorted(g.neighbors(v), key=lambda u: (g.degree(u), u))
    )


def classify_vertex(g: Graph, v: int) -> Optional[Configuration]:
    """The lowest-index configuration kind at v, or None.

    Kinds are keyed to d(v), so at most one kind can apply; A1 covers every
    degree <= 2 (isolated vertices included).
    """
    d = g.degree(v)
    if d <= 2:
        return Configuration("A1", v, _sorted_neighbors(g, v))
    kind = _KIND_BY_DEGREE.get(d)
    if kind is None:
        return None
    nbrs = _sorted_neighbors(g, v)
    caps = _CAPS[kind]
    if all(nbrs[i][1] <= cap for i, cap in enumerate(caps)):
        return Configuration(kind, v, nbrs)
    return None


def find_configuration(g: Graph) -> Configuration:
    """Configuration at the smallest-id qualifying vertex.

    Raises NotPlanarEvidence when no vertex qualifies, which cannot happen
    for a planar input.
    """
    for v in g.vertices():
        conf = classify_vertex(g, v)
        if conf is not None:
            return conf
    raise NotPlanarEvidence(
        f"no low-degree configuration in graph with n={g.n}, m={g.m}; "
        "a planar graph always contains one"
    )


def cheap_planarity_guard(g: Graph) -> bool:
    """Necessary edge-count condition m <= 3n - 6; false certifies non-planarity."""
    if g.n < 3:
        return True
    return g.m <= 3 * g.n - 6
