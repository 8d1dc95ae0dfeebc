import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aecolor.coloring import (
    ColorMultiset,
    PartialEdgeColoring,
    bits,
    exists_critical_path,
    find_bichromatic_cycle,
    forbidden_from,
    maximal_bichromatic_path,
    multiset_join,
    seen_colors,
    validate_acyclic,
)
from aecolor.errors import ImproperColoringError
from aecolor.families import complete_graph, cycle_graph, path_graph, star_graph
from aecolor.graphs import Graph

from support import random_proper_coloring, small_graphs


def colored(g, k, triples, strict=True):
    return PartialEdgeColoring.from_pairs(g, k, triples, strict=strict)


class TestPartialColoring:
    def test_tracks_properness_violations(self):
        g = path_graph(3)
        phi = colored(g, 3, [(0, 1, 1), (1, 2, 1)], strict=False)
        assert phi.violations == [(1, 2, 1)]

    def test_strict_rejects_improper(self):
        with pytest.raises(ImproperColoringError):
            colored(path_graph(3), 3, [(0, 1, 1), (1, 2, 1)])

    def test_assign_unassign_round_trip(self):
        g = path_graph(2)
        phi = PartialEdgeColoring(g, 2)
        phi.assign(0, 1, 2)
        assert phi.color_of(0, 1) == 2
        assert phi.unassign(0, 1) == 2
        assert phi.color_of(0, 1) is None

    def test_rejects_out_of_palette(self):
        phi = PartialEdgeColoring(path_graph(2), 2)
        with pytest.raises(ValueError):
            phi.assign(0, 1, 3)

    def test_copy_is_independent(self):
        phi = PartialEdgeColoring(path_graph(3), 3)
        phi.assign(0, 1, 1)
        dup = phi.copy()
        dup.assign(1, 2, 2)
        assert phi.color_of(1, 2) is None and dup.color_of(0, 1) == 1

    def test_completeness_flag(self):
        g = path_graph(3)
        phi = colored(g, 3, [(0, 1, 1)])
        assert not phi.is_complete()
        phi.assign(1, 2, 2)
        assert phi.is_complete()


class TestSeenColors:
    def test_star_center_sees_all(self):
        g = star_graph(3)
        phi = colored(g, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
        assert seen_colors(phi, 0) == {1, 2, 3}

    def test_leaf_sees_own_edge(self):
        g = star_graph(3)
        phi = colored(g, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
        assert seen_colors(phi, 2) == {2}

    def test_uncolored_vertex_sees_nothing(self):
        phi = PartialEdgeColoring(star_graph(3), 3)
        assert seen_colors(phi, 0) == set()


class TestForbiddenFrom:
    def test_p3_reads_far_end(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2)])
        assert forbidden_from(phi, 0, 1) == {2}

    def test_p3_other_direction_empty(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2)])
        assert forbidden_from(phi, 1, 0) == set()

    def test_asymmetry_witness(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2)])
        assert forbidden_from(phi, 0, 1) != forbidden_from(phi, 1, 0)

    def test_non_edge_rejected(self):
        phi = PartialEdgeColoring(path_graph(3), 2)
        with pytest.raises(ValueError, match="not an edge"):
            forbidden_from(phi, 0, 2)


class TestColorMultiset:
    def test_join_adds_multiplicities(self):
        a = ColorMultiset([1, 2])
        b = ColorMultiset([2, 3])
        j = multiset_join(a, b)
        assert j.mult(1) == 1 and j.mult(2) == 2 and j.mult(3) == 1

    def test_join_with_empty_is_identity(self):
        s = ColorMultiset([1, 1, 4])
        assert multiset_join(s, ColorMultiset()) == s

    def test_cardinality_additive(self):
        a = ColorMultiset([1, 1])
        b = ColorMultiset([1, 1, 1])
        assert multiset_join(a, b).cardinality() == 5

    @given(st.lists(st.integers(1, 6)), st.lists(st.integers(1, 6)))
    def test_join_additivity_property(self, xs, ys):
        a, b = ColorMultiset(xs), ColorMultiset(ys)
        j = multiset_join(a, b)
        assert j.cardinality() == a.cardinality() + b.cardinality()
        for c in set(xs) | set(ys):
            assert j.mult(c) == a.mult(c) + b.mult(c)


class TestMaximalBichromaticPath:
    def p4(self, c_ab=1, c_bc=2, c_cd=1, k=3):
        g = path_graph(4)
        return g, colored(g, k, [(0, 1, c_ab), (1, 2, c_bc), (2, 3, c_cd)])

    def test_whole_path_from_interior(self):
        g, phi = self.p4()
        p = maximal_bichromatic_path(g, phi, 1, 1, 2)
        assert p.vertices in ((0, 1, 2, 3), (3, 2, 1, 0)) and not p.cycle
        assert p.edge_colors == (1, 2, 1)

    def test_absent_when_colors_not_present(self):
        g, phi = self.p4()
        assert maximal_bichromatic_path(g, phi, 0, 2, 3) is None

    def test_c4_reports_cycle(self):
        g = cycle_graph(4)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
        for v in g.vertices():
            p = maximal_bichromatic_path(g, phi, v, 1, 2)
            assert p.cycle and set(p.vertices) == {0, 1, 2, 3}

    def test_equal_colors_rejected(self):
        g, phi = self.p4()
        with pytest.raises(ValueError):
            maximal_bichromatic_path(g, phi, 0, 1, 1)

    @given(small_graphs(max_n=7), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_same_path_from_every_vertex(self, g, seed):
        # each vertex lies on at most one maximal (a,b)-path, so
        # traversal from any vertex of the path reproduces the vertex set
        phi = random_proper_coloring(g, 5, random.Random(seed))
        if phi is None:
            return
        seen = sorted(set(c for _, c in phi.items()))
        for i, a in enumerate(seen):
            for b in seen[i + 1:]:
                for v in g.vertices():
                    p = maximal_bichromatic_path(g, phi, v, a, b)
                    if p is None:
                        continue
                    for w in p.vertices:
                        q = maximal_bichromatic_path(g, phi, w, a, b)
                        assert set(q.vertices) == set(p.vertices)


class TestExistsCriticalPath:
    def p4(self, c_cd=1):
        g = path_graph(4)
        return g, colored(g, 3, [(0, 1, 1), (1, 2, 2), (2, 3, c_cd)])

    def test_alternating_path_found(self):
        g, phi = self.p4()
        assert exists_critical_path(g, phi, 1, 2, 0, 3) is True

    def test_broken_tail_rejected(self):
        g, phi = self.p4(c_cd=3)
        assert exists_critical_path(g, phi, 1, 2, 0, 3) is False

    def test_missing_start_edge_rejected(self):
        g, phi = self.p4()
        assert exists_critical_path(g, phi, 2, 1, 0, 3) is False

    def test_symmetric_in_endpoints(self):
        g, phi = self.p4()
        assert exists_critical_path(g, phi, 1, 2, 3, 0) is True

    def test_interior_start_is_not_an_endpoint(self):
        # path 4-0-1-2-3-5 colored 2,1,2,1,2 is (2,1)-critical from 4 to 5;
        # vertex 0 has a 2-edge too, but sits inside the path, so no
        # critical path starts there
        g = Graph(6, [(4, 0), (0, 1), (1, 2), (2, 3), (3, 5)])
        phi = colored(g, 3, [(4, 0, 2), (0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 5, 2)])
        assert exists_critical_path(g, phi, 2, 1, 4, 5) is True
        assert exists_critical_path(g, phi, 2, 1, 5, 4) is True
        assert exists_critical_path(g, phi, 2, 1, 0, 5) is False
        assert exists_critical_path(g, phi, 2, 1, 5, 0) is False

    def test_equal_endpoints_rejected(self):
        g, phi = self.p4()
        with pytest.raises(ValueError):
            exists_critical_path(g, phi, 1, 2, 0, 0)

    @given(small_graphs(max_n=7), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_symmetry_property(self, g, seed):
        rng = random.Random(seed)
        phi = random_proper_coloring(g, 5, rng)
        if phi is None or g.n < 2:
            return
        for _ in range(10):
            u, v = rng.sample(range(g.n), 2)
            a, b = rng.sample(range(1, 6), 2)
            assert exists_critical_path(g, phi, a, b, u, v) == exists_critical_path(
                g, phi, a, b, v, u
            )


class TestFindBichromaticCycle:
    def test_alternating_c4_found(self):
        g = cycle_graph(4)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
        w = find_bichromatic_cycle(g, phi)
        assert w is not None and w.colors == (1, 2)
        assert sorted(w.vertices) == [0, 1, 2, 3]

    def test_three_colors_no_cycle(self):
        g = cycle_graph(4)
        phi = colored(g, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 3)])
        assert find_bichromatic_cycle(g, phi) is None

    def test_k4_matching_coloring_fails(self):
        # the 1-factorization: each pair of perfect matchings is a 4-cycle
        g = complete_graph(4)
        phi = colored(
            g, 3,
            [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)],
        )
        w = find_bichromatic_cycle(g, phi)
        assert w is not None and len(w.vertices) == 4

    def test_improper_input_rejected(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 1)], strict=False)
        with pytest.raises(ImproperColoringError):
            find_bichromatic_cycle(g, phi)

    def test_deterministic_witness(self):
        g = complete_graph(4)
        phi = colored(
            g, 3,
            [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)],
        )
        assert find_bichromatic_cycle(g, phi) == find_bichromatic_cycle(g, phi)

    def test_partial_coloring_allowed(self):
        g = cycle_graph(5)
        phi = colored(g, 3, [(0, 1, 1), (1, 2, 2)])
        assert find_bichromatic_cycle(g, phi) is None


class TestValidateAcyclic:
    def test_tree_coloring_passes(self):
        g = star_graph(4)
        phi = colored(g, 4, [(0, i, i) for i in range(1, 5)])
        rep = validate_acyclic(g, phi)
        assert rep.ok and rep.max_color == 4

    def test_alternating_cycle_fails_with_witness(self):
        g = cycle_graph(4)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
        rep = validate_acyclic(g, phi)
        assert not rep.ok and rep.cycle is not None

    def test_three_color_c4_passes(self):
        g = cycle_graph(4)
        phi = colored(g, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 3)])
        rep = validate_acyclic(g, phi)
        assert rep.ok and rep.max_color == 3

    def test_incomplete_reported(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1)])
        rep = validate_acyclic(g, phi)
        assert not rep.all_edges_colored and not rep.ok

    def test_improper_reported(self):
        g = path_graph(3)
        phi = colored(g, 2, [(0, 1, 1), (1, 2, 1)], strict=False)
        rep = validate_acyclic(g, phi)
        assert not rep.is_proper and not rep.ok

    def test_ok_iff_parts(self):
        g = cycle_graph(4)
        phi = colored(g, 3, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 3)])
        rep = validate_acyclic(g, phi)
        assert rep.ok == (
            rep.all_edges_colored and rep.is_proper and rep.cycle is None
        )


class TestBits:
    def test_bits_round_trip(self):
        assert bits(0) == []
        assert bits(0b1010) == [1, 3]
