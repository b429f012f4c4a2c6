"""Graph construction, predicates, and the text format."""

import random

import pytest

from extremal_count import (Graph, GraphFormatError, build_blowup,
                            build_gps_example1, build_theorem2_H, build_turan2,
                            complete_bipartite, complete_graph,
                            connected_components, cycle_graph, degree_stats,
                            is_bipartite, is_isomorphic, is_triangle_free,
                            path_graph, read_graph_text, star_graph,
                            write_graph_text)

from naive import random_graph


def all_builders():
    return [
        build_turan2(1), build_turan2(2), build_turan2(7), build_turan2(10),
        build_blowup(cycle_graph(5), (2, 1, 1, 1, 1)),
        build_blowup(path_graph(2), (3, 4)),
        build_gps_example1(3), build_gps_example1(5),
        build_theorem2_H(1, 3), build_theorem2_H(2, 5),
        complete_bipartite(0, 4), star_graph(3), cycle_graph(6),
    ]


def test_graph_invariants_on_all_builders():
    for g in all_builders():
        assert g.edge_count() == len(g.edges())
        for u in range(g.n):
            assert not g.rows[u] >> u & 1
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)


def test_graph_rejects_loops_and_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_rows([0b10, 0b00])  # asymmetric


def test_turan2_small():
    assert build_turan2(2).edge_count() == 1
    g5 = build_turan2(5)
    assert g5.edge_count() == 6
    assert is_isomorphic(g5, complete_bipartite(2, 3))
    g10 = build_turan2(10)
    assert g10.edge_count() == 25
    assert is_bipartite(g10) is not None
    assert is_triangle_free(g10)


def test_turan2_is_edge_blowup():
    for n in range(1, 10):
        blown = build_blowup(path_graph(2), ((n + 1) // 2, n // 2))
        assert is_isomorphic(build_turan2(n), blown)


def test_blowup_edge_identity():
    assert is_isomorphic(build_blowup(path_graph(2), (2, 3)),
                         complete_bipartite(2, 3))
    assert is_isomorphic(build_blowup(cycle_graph(5), (1,) * 5), cycle_graph(5))


def test_blowup_c5_21111():
    # sizes sum to 6; each C5 edge contributes s_u * s_v edges, here 7
    g = build_blowup(cycle_graph(5), (2, 1, 1, 1, 1))
    assert g.n == 6
    assert g.edge_count() == 7
    assert is_triangle_free(g)
    assert sorted(g.labels.values()).count("blob0") == 2


def test_blowup_size_mismatch():
    with pytest.raises(ValueError):
        build_blowup(cycle_graph(5), (1, 1))


def test_blowup_preserves_triangle_freeness():
    rng = random.Random(11)
    for _ in range(40):
        pat = random_graph(rng, rng.randint(1, 5), 0.5)
        sizes = [rng.randint(1, 3) for _ in range(pat.n)]
        blown = build_blowup(pat, sizes)
        assert is_triangle_free(blown) == is_triangle_free(pat)


def test_gps_example1_k3_is_path6():
    assert is_isomorphic(build_gps_example1(3), path_graph(6))


def test_gps_example1_k4_by_hand():
    g = build_gps_example1(4)
    # centers 0 and 1, path 0-2-3-1, leaves 4,5 on 0 and 6,7 on 1
    expected = Graph(8, [(0, 2), (2, 3), (1, 3), (0, 4), (0, 5), (1, 6), (1, 7)])
    assert g.n == 8 and g.edge_count() == 7
    assert g.rows == expected.rows
    sides = is_bipartite(g)
    assert sides is not None and len(sides[0]) == 4


def test_gps_example1_vertex_count():
    for k in range(3, 12):
        g = build_gps_example1(k)
        assert g.n == 2 * k
        sides = is_bipartite(g)
        assert len(sides[0]) == k and len(sides[1]) == k


def test_theorem2_H_structure():
    g = build_theorem2_H(1, 3)
    assert g.n == 8 and g.edge_count() == 7
    degs = sorted(g.degree(v) for v in range(g.n))
    assert degs == [1, 1, 1, 1, 2, 2, 3, 3]  # two stars with 2 leaves, joined
    for d in range(1, 4):
        for x in range(3, 8):
            h = build_theorem2_H(d, x)
            assert h.n == 2 * x + 2 * d
            assert h.edge_count() == h.n - 1
            count, _ = connected_components(h)
            assert count == 1
            assert is_bipartite(h) is not None


def test_theorem2_H_blob_labels():
    g = build_theorem2_H(2, 5)
    counts = {}
    for lab in g.labels.values():
        counts[lab] = counts.get(lab, 0) + 1
    # blob1: 2(d+1) leaves + (x-3) tops; blob2: u1 + (x-3) middles
    assert counts == {"blob1": 8, "blob2": 3, "blob3": 1, "blob4": 1, "blob5": 1}


def test_theorem2_H_bad_params():
    with pytest.raises(ValueError):
        build_theorem2_H(0, 5)
    with pytest.raises(ValueError):
        build_theorem2_H(1, 2)


def test_predicates():
    assert is_triangle_free(cycle_graph(5))
    assert is_bipartite(cycle_graph(5)) is None
    assert not is_triangle_free(complete_graph(3))
    h = build_theorem2_H(1, 5)
    assert is_bipartite(h) is not None
    count, parts = connected_components(h)
    assert count == 1 and len(parts[0]) == h.n


def test_degree_stats():
    stats = degree_stats(complete_bipartite(2, 3))
    assert (stats.delta_min, stats.delta_max, stats.edge_count) == (2, 3, 6)
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        s = degree_stats(g)
        assert 0 <= s.delta_min <= s.delta_max <= g.n - 1
        assert sum(g.degree(v) for v in range(g.n)) == 2 * s.edge_count


def test_connected_components_counts():
    g = Graph(5, [(0, 1), (2, 3)])
    count, parts = connected_components(g)
    assert count == 3
    assert parts == ((0, 1), (2, 3), (4,))


def test_text_roundtrip_graph_to_text():
    for g in all_builders():
        text = write_graph_text(g)
        back = read_graph_text(text)
        assert back == g
        assert write_graph_text(back) == text


def test_text_roundtrip_text_to_graph():
    text = "n 4\n# label 0 center\n0 1\n0 2\n2 3\n"
    g = read_graph_text(text)
    assert write_graph_text(g) == text


def test_text_parse_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as err:
        read_graph_text("n 3\n0 1\n1 x\n")
    assert err.value.lineno == 3
    with pytest.raises(GraphFormatError) as err:
        read_graph_text("vertices 3\n")
    assert err.value.lineno == 1
    with pytest.raises(GraphFormatError) as err:
        read_graph_text("n 2\n0 5\n")
    assert err.value.lineno == 2


def test_labels_do_not_affect_equality_of_structure():
    g = build_turan2(4)
    assert is_isomorphic(g, complete_bipartite(2, 2))
