import pytest

from aecolor.embedding import (
    FaceSet,
    RotationSystem,
    format_rotation,
    generate_apollonian,
    parse_rotation,
    trace_faces,
    triangulation_witness,
)
from aecolor.errors import InvalidRotationError, NonPlanarEmbeddingError
from aecolor.families import (
    complete_graph,
    cube,
    cycle_graph,
    dodecahedron,
    icosahedron,
    octahedron,
    tetrahedron,
    triangle_embedded,
)
from aecolor.graphs import Graph


class TestTraceFaces:
    def test_triangle_two_faces(self):
        g, rot = triangle_embedded()
        faces = trace_faces(g, rot)
        assert faces.lengths() == [3, 3]

    def test_tetrahedron_four_triangles(self):
        g, rot = tetrahedron()
        faces = trace_faces(g, rot)
        assert len(faces) == 4 and faces.all_triangles()

    def test_cube_six_quadrilaterals(self):
        g, rot = cube()
        faces = trace_faces(g, rot)
        assert sorted(faces.lengths()) == [4] * 6
        assert g.n - g.m + len(faces) == 2

    def test_dart_sum_is_twice_edges(self):
        for g, rot in (tetrahedron(), cube(), octahedron(), icosahedron(), dodecahedron()):
            faces = trace_faces(g, rot)
            assert sum(faces.lengths()) == 2 * g.m

    def test_dart_coverage_exact(self):
        g, rot = octahedron()
        darts = [d for f in trace_faces(g, rot) for d in f]
        assert len(darts) == len(set(darts)) == 2 * g.m
        assert set(darts) == {(u, v) for u, v in g.edges()} | {(v, u) for u, v in g.edges()}

    def test_deterministic(self):
        g, rot = icosahedron()
        assert trace_faces(g, rot) == trace_faces(g, rot)

    def test_rotation_graph_mismatch(self):
        g = cycle_graph(3)
        with pytest.raises(InvalidRotationError):
            trace_faces(g, RotationSystem([[1, 2], [0, 2], [0]]))

    def test_nonplanar_rotation_rejected(self):
        # K4 with vertex 0's rotation transposed embeds on the torus
        g = complete_graph(4)
        rot = RotationSystem([[1, 3, 2], [2, 0, 3], [0, 1, 3], [0, 1, 2]])
        with pytest.raises(NonPlanarEmbeddingError, match="Euler"):
            trace_faces(g, rot)

    def test_disconnected_rejected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError, match="connected"):
            trace_faces(g, RotationSystem([[1], [0], [3], [2]]))

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            trace_faces(Graph(1, []), RotationSystem([[]]))


class TestTriangulationWitness:
    def test_true_on_tetrahedron(self):
        g, rot = tetrahedron()
        assert triangulation_witness(trace_faces(g, rot)).is_triangulation

    def test_false_on_cube(self):
        g, rot = cube()
        assert not triangulation_witness(trace_faces(g, rot)).is_triangulation


class TestGenerateApollonian:
    def test_n3_is_triangle(self):
        g, _ = generate_apollonian(3, seed=0)
        assert g.n == 3 and g.m == 3

    def test_n4_is_k4(self):
        g, _ = generate_apollonian(4, seed=5)
        assert g == complete_graph(4)

    def test_n100_edge_count_and_faces(self):
        g, rot = generate_apollonian(100, seed=7)
        assert g.m == 294 == 3 * g.n - 6
        assert trace_faces(g, rot).all_triangles()

    @pytest.mark.parametrize("n,seed", [(10, 0), (25, 3), (60, 9)])
    def test_maximal_planar_invariant(self, n, seed):
        g, rot = generate_apollonian(n, seed)
        assert g.m == 3 * n - 6
        faces = trace_faces(g, rot)
        assert faces.all_triangles() and len(faces) == 2 * n - 4

    def test_deterministic_per_seed(self):
        a = generate_apollonian(40, seed=11)
        b = generate_apollonian(40, seed=11)
        assert a[0] == b[0] and a[1] == b[1]

    def test_seeds_differ(self):
        assert generate_apollonian(40, 0)[0] != generate_apollonian(40, 1)[0]

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            generate_apollonian(2, seed=0)


class TestRotationFormat:
    def test_round_trip(self):
        g, rot = icosahedron()
        assert parse_rotation(format_rotation(rot), g) == rot

    def test_missing_colon(self):
        with pytest.raises(InvalidRotationError, match="line 1"):
            parse_rotation("0 1 2", cycle_graph(3))

    def test_vertex_twice(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(InvalidRotationError, match="twice"):
            parse_rotation("0: 1\n0: 1\n1: 0\n", g)

    def test_repeated_neighbor(self):
        g = cycle_graph(3)
        with pytest.raises(InvalidRotationError, match="repeated"):
            parse_rotation("0: 1 1\n1: 0 2\n2: 1 0\n", g)

    def test_not_a_permutation_of_adjacency(self):
        from aecolor.families import path_graph

        g = path_graph(3)
        with pytest.raises(InvalidRotationError, match="permutation"):
            parse_rotation("0: 1 2\n1: 0 2\n2: 1\n", g)


class TestFaceSetBasics:
    def test_lengths_and_iteration(self):
        fs = FaceSet((((0, 1), (1, 2), (2, 0)),))
        assert fs.lengths() == [3] and len(fs) == 1
        assert list(fs)[0][0] == (0, 1)
