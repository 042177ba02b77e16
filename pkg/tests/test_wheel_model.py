from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wheelwalk.wheel_model import (
    CENTER,
    MultiGraph,
    Peripheral,
    RationalMatrix,
    WheelSpec,
    build_wheel,
    complete_graph,
    fold_reduced_laplacian,
    folded_matrix,
    folded_rhs,
    identify_vertices,
    laplacian,
    parse_vertex,
    path_graph,
    reduced_laplacian,
)

H_9_PRINTED = [
    [3, -1, 0, 0, -1],
    [-1, 3, -1, 0, -1],
    [0, -1, 3, -1, -1],
    [0, 0, -1, 2, -1],
    [-2, -2, -2, -2, 9],
]
H_8_PRINTED = [
    [3, -1, 0, 0, -1],
    [-1, 3, -1, 0, -1],
    [0, -1, 3, -1, -1],
    [0, 0, -2, 3, -1],
    [-2, -2, -2, -1, 8],
]


def as_ints(m: RationalMatrix):
    return [[int(x) for x in row] for row in m.rows]


class TestWheelSpec:
    @pytest.mark.parametrize("n", [0, 1, 2, -5])
    def test_rejects_small_cycles(self, n):
        with pytest.raises(ValueError):
            WheelSpec(n)

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            WheelSpec(4.0)

    def test_peripheral_reduced_mod_n(self):
        spec = WheelSpec(5)
        assert spec.peripheral(7) == Peripheral(2)
        assert spec.vertex(Peripheral(-1)) == Peripheral(4)
        assert spec.vertex(CENTER) is CENTER

    def test_parse_vertex(self):
        assert parse_vertex("p3") == Peripheral(3)
        assert parse_vertex("center") == CENTER
        with pytest.raises(ValueError):
            parse_vertex("p5", 5)
        with pytest.raises(ValueError):
            parse_vertex("hub")
        assert str(Peripheral(3)) == "p3" and str(CENTER) == "center"


class TestBuildWheel:
    def test_w4_is_k4(self):
        g = build_wheel(3)
        assert g.vertex_count == 4 and g.edge_count == 6
        assert all(g.multiplicity(u, v) == 1 for u in range(4) for v in range(4) if u != v)

    def test_w5_degrees(self):
        g = build_wheel(4)
        assert (g.vertex_count, g.edge_count) == (5, 8)
        assert [g.degree(v) for v in range(5)] == [3, 3, 3, 3, 4]

    def test_w10(self):
        g = build_wheel(9)
        assert (g.vertex_count, g.edge_count) == (10, 18)

    def test_labels(self):
        g = build_wheel(4)
        assert g.labels == (Peripheral(0), Peripheral(1), Peripheral(2), Peripheral(3), CENTER)
        assert g.index(CENTER) == 4
        with pytest.raises(ValueError):
            g.index(Peripheral(9))


class TestLaplacian:
    def test_k4(self):
        assert as_ints(laplacian(build_wheel(3))) == [
            [3 if i == j else -1 for j in range(4)] for i in range(4)
        ]

    def test_w5(self):
        lap = as_ints(laplacian(build_wheel(4)))
        assert [lap[i][i] for i in range(5)] == [3, 3, 3, 3, 4]
        assert lap[4] == [-1, -1, -1, -1, 4]

    def test_path(self):
        assert as_ints(laplacian(path_graph(2))) == [[1, -1], [-1, 1]]

    def test_reduced(self):
        r4 = reduced_laplacian(build_wheel(3), Peripheral(0))
        assert r4.shape == (3, 3) and [r4[i, i] for i in range(3)] == [3, 3, 3]
        r5 = reduced_laplacian(build_wheel(4), Peripheral(0))
        assert r5.shape == (4, 4) and r5[3, 3] == 4
        assert as_ints(reduced_laplacian(path_graph(2), 0)) == [[1]]
        assert as_ints(reduced_laplacian(path_graph(2), 1)) == [[1]]
        with pytest.raises(ValueError):
            reduced_laplacian(build_wheel(4), "nope")


class TestFoldedMatrix:
    def test_printed_examples(self):
        assert as_ints(folded_matrix(9)) == H_9_PRINTED
        assert as_ints(folded_matrix(8)) == H_8_PRINTED

    def test_small(self):
        assert as_ints(folded_matrix(3)) == [[2, -1], [-2, 3]]
        assert as_ints(folded_matrix(4)) == [[3, -1, -1], [-2, 3, -1], [-2, -1, 4]]

    @pytest.mark.parametrize("n", range(3, 61))
    def test_tables_agree_with_folding(self, n):
        assert folded_matrix(n) == fold_reduced_laplacian(n)

    @pytest.mark.parametrize("n", range(3, 61))
    def test_entries_and_shape(self, n):
        h = folded_matrix(n)
        m = n // 2 + 1
        assert h.shape == (m, m)
        assert h[m - 1, m - 1] == n
        assert {int(x) for row in h.rows for x in row} <= {3, 2, n, -1, -2, 0}

    def test_rhs_is_column(self):
        assert folded_rhs(9) == [3, 3, 3, 3, 9]
        assert folded_rhs(8) == [3, 3, 3, 3, 8]


class TestIdentify:
    def test_k4(self):
        g = identify_vertices(complete_graph(4), 0, 1)
        assert g.vertex_count == 3
        assert g.multiplicity(0, 1) == 2 and g.multiplicity(0, 2) == 2
        assert g.multiplicity(1, 2) == 1
        assert g.labels == (0, 2, 3)

    def test_w5_center_with_rim(self):
        g = identify_vertices(build_wheel(4), CENTER, Peripheral(0))
        assert (g.vertex_count, g.edge_count) == (4, 7)

    def test_path_collapses(self):
        g = identify_vertices(path_graph(2), 0, 1)
        assert (g.vertex_count, g.edge_count) == (1, 0)

    def test_self_identification_rejected(self):
        with pytest.raises(ValueError):
            identify_vertices(build_wheel(4), CENTER, CENTER)


class TestMultiGraph:
    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            MultiGraph((0, 1), {(0, 0): 1})

    def test_parallel_edges_accumulate(self):
        g = MultiGraph.from_edges([(0, 1), (1, 0), (1, 2)], 3)
        assert g.multiplicity(1, 0) == 2 and g.edge_count == 3
        assert g.edge_list() == [(0, 1), (0, 1), (1, 2)]

    def test_connectivity(self):
        assert build_wheel(5).is_connected()
        assert not MultiGraph.from_edges([(0, 1)], 3).is_connected()

    def test_matrix_ops(self):
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert (a @ RationalMatrix.identity(2)) == a
        assert a.apply([1, Fraction(1, 2)]) == [2, 5]
        with pytest.raises(ValueError):
            RationalMatrix.from_rows([[1, 2], [3]])


multigraphs = st.integers(2, 7).flatmap(
    lambda nv: st.lists(
        st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)).filter(lambda e: e[0] != e[1]),
        max_size=15,
    ).map(lambda edges: MultiGraph.from_edges(edges, nv))
)


@given(multigraphs)
def test_laplacian_symmetric_zero_row_sums(g):
    lap = laplacian(g)
    n = g.vertex_count
    assert all(lap[i, j] == lap[j, i] for i in range(n) for j in range(n))
    assert all(sum(row) == 0 for row in lap.rows)
    assert [lap[i, i] for i in range(n)] == [g.degree(i) for i in range(n)]


@given(multigraphs, st.data())
def test_identify_preserves_other_edges(g, data):
    u = data.draw(st.integers(0, g.vertex_count - 1))
    v = data.draw(st.integers(0, g.vertex_count - 1).filter(lambda x: x != u))
    merged = identify_vertices(g, u, v)
    assert merged.vertex_count == g.vertex_count - 1
    assert merged.edge_count == g.edge_count - g.multiplicity(u, v)
