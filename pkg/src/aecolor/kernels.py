"""Hot traversal kernels over the vertex-by-color neighbor table.

The table maps (vertex, color) -> neighbor reached via that color, or -1.
In a proper partial coloring each slot holds at most one neighbor, so the
alternating-walk loops below are branch-free and bounded by n steps.

Each kernel is compiled with numba when enabled; the `_py` alias always
points at the uncompiled version so the test suite can compare both paths.
"""

from __future__ import annotations

import numpy as np

from .accel import NUMBA_ENABLED, jit_kernel


def _walk_end_impl(nbr, start, first, second):
    """Follow the alternating (first, second) walk out of `start`.

    Returns (end_vertex, last_color, closed) where closed=1 means the walk
    returned to `start`, i.e. start lies on an alternating cycle.  When
    `start` has no `first`-colored edge the walk is empty and last_color
    is -1.
    """
    n = nbr.shape[0]
    v = start
    want = first
    last = -1
    for _ in range(n + 1):
        nxt = nbr[v, want]
        if nxt < 0:
            return v, last, 0
        last = want
        v = nxt
        if v == start:
            return v, last, 1
        want = second if want == first else first
    return v, last, 0  # unreachable on a proper table


def _first_cycle_impl(nbr, out):
    """First bichromatic cycle in deterministic scan order.

    Color pairs (a, b), a < b, are scanned lexicographically; within a pair,
    start vertices in ascending id.  The cycle's vertex walk (from its
    smallest-id vertex via its a-edge) is written into `out`; the return is
    (a, b, length), or (-1, -1, 0) when every two-color union is a forest.
    """
    n, width = nbr.shape
    visited = np.full(n, -1, np.int64)
    pair_id = 0
    for a in range(1, width):
        for b in range(a + 1, width):
            pair_id += 1
            for s in range(n):
                if nbr[s, a] < 0 or nbr[s, b] < 0 or visited[s] == pair_id:
                    continue
                v = s
                want = a
                length = 0
                while True:
                    visited[v] = pair_id
                    out[length] = v
                    length += 1
                    nxt = nbr[v, want]
                    if nxt < 0:
                        break
                    if nxt == s:
                        return a, b, length
                    v = nxt
                    want = b if want == a else a
    return -1, -1, 0


walk_end_py = _walk_end_impl
first_cycle_py = _first_cycle_impl

if NUMBA_ENABLED:
    walk_end = jit_kernel(_walk_end_impl)
    first_cycle = jit_kernel(_first_cycle_impl)
else:
    walk_end = _walk_end_impl
    first_cycle = _first_cycle_impl
