import pytest

from pycops.errors import InvalidParameterError, UnsupportedOrderError
from pycops.graphs import (
    INFINITY,
    Graph,
    GraphRenderer,
    capture_family,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    cycle_strong_power_product,
    grid,
    heawood,
    hypercube,
    incidence_graph_pg2,
    path,
    petersen,
    power,
    random_connected_graph,
    random_tree,
    realizer_drops,
    sequence_realizer,
    star,
    strong_product,
    subdivide,
    torus,
)


def test_graph_stores_edges_both_ways():
    g = Graph(3, [(0, 1), (2, 1)])
    assert g.has_edge(1, 0)
    assert g.has_edge(1, 2)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count == 2


def test_graph_rejects_loops_and_outside_edges():
    with pytest.raises(InvalidParameterError):
        Graph(2, [(0, 0)])
    with pytest.raises(InvalidParameterError):
        Graph(2, [(0, 2)])
    with pytest.raises(InvalidParameterError):
        Graph(2, labels=["a"])


def test_neighbourhoods_are_open_and_closed():
    g = path(3)
    assert g.neighbors(1) == {0, 2}
    assert g.closed_neighborhood(0) == {0, 1}
    with pytest.raises(InvalidParameterError):
        g.neighbors(3)


def test_graphs_compare_by_adjacency():
    assert cycle(3) == complete(3)
    assert path(4) != cycle(4)
    assert hash(cycle(3)) == hash(complete(3))
    assert repr(cycle(5)) == "Graph(order=5, edges=5)"


def test_can_get_distances():
    g = cycle(6)
    assert g.dist(0, 3) == 3
    assert g.distances_from(0) == [0, 1, 2, 3, 2, 1]
    assert path(5).ball(2, 1) == {1, 2, 3}
    assert path(5).ball(0, 0) == {0}
    assert hypercube(3).radius() == 3
    assert petersen().diameter() == 2


def test_disconnected_vertices_are_infinitely_far():
    g = Graph(3, [(0, 1)])
    assert g.dist(0, 2) == INFINITY
    assert not g.is_connected()
    assert g.distance_matrix()[0, 2] == 3


def test_distance_matrix_is_read_only():
    matrix = path(3).distance_matrix()
    assert matrix[0, 2] == 2
    with pytest.raises(ValueError):
        matrix[0, 2] = 1


def test_induced_subgraph_renumbers_and_labels():
    g = path(4).delete_vertex(0)
    assert g.order == 3
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.labels == (1, 2, 3)
    assert g.index_of(3) == 2


def test_digest_depends_on_edges():
    assert path(4).digest() == path(4).digest()
    assert path(4).digest() != star(4).digest()
    assert path(4).digest().startswith("4:")


def test_can_convert_to_and_from_networkx():
    g = petersen()
    assert Graph.from_networkx(g.to_networkx()) == g
    h = hypercube(2).to_networkx()
    assert h.nodes[3]["coords"] == (1, 1)


def test_simple_families():
    assert path(1).edge_count == 0
    assert cycle(5).degrees() == [2] * 5
    assert complete(5).is_complete()
    assert star(5).degrees() == [4, 1, 1, 1, 1]
    assert complete_bipartite(2, 3).edge_count == 6
    assert petersen().edge_count == 15
    with pytest.raises(InvalidParameterError):
        cycle(2)


def test_hypercube_is_coordinate_annotated():
    q = hypercube(3)
    assert q.order == 8
    assert q.edge_count == 12
    assert q.degrees() == [3] * 8
    assert q.coords[5] == (1, 0, 1)


def test_grids_and_tori():
    assert grid(3, 4).edge_count == 17
    assert grid(3, 4).coords[5] == (1, 1)
    assert torus(3, 4).edge_count == 24
    assert torus(5, 5).degrees() == [4] * 25


def test_cartesian_product_numbering():
    g = cartesian_product(complete(2), complete(2))
    assert g == Graph(4, [(0, 1), (1, 3), (3, 2), (2, 0)])
    assert cartesian_product(path(2), path(3)).edge_count == 7


def test_cartesian_distances_add_up():
    g = random_connected_graph(5, seed=3)
    h = path(3)
    product = cartesian_product(g, h)
    for a in g.vertices:
        for b in h.vertices:
            for c in g.vertices:
                for d in h.vertices:
                    assert product.dist(a * 3 + b, c * 3 + d) == g.dist(a, c) + h.dist(b, d)


def test_strong_product_of_cycles_is_regular():
    g = strong_product(cycle(4), cycle(4))
    assert g.order == 16
    assert g.degrees() == [8] * 16
    assert cycle_strong_power_product(2, 1) == g


def test_strong_cycle_gadget_of_one_factor_is_a_cycle():
    assert cycle_strong_power_product(1, 2) == cycle(6)
    assert cycle_strong_power_product(1, 2).coords[4] == (4,)


def test_powers():
    assert power(path(4), 1) == path(4)
    assert power(path(4), 2).edge_count == 5
    assert power(cycle(6), 3).is_complete()
    assert power(capture_family(9), 2).labels == capture_family(9).labels
    with pytest.raises(InvalidParameterError):
        power(path(4), 0)


def test_powers_of_powers_multiply():
    for seed in range(5):
        t = random_tree(9, seed=seed)
        assert power(power(t, 2), 2) == power(t, 4)


def test_subdivisions():
    assert subdivide(complete(3), 1) == complete(3)
    c6 = subdivide(complete(3), 2)
    assert c6.order == 6
    assert c6.degrees() == [2] * 6
    assert c6.is_connected()
    k4 = subdivide(complete(4), 2)
    assert (k4.order, k4.edge_count) == (10, 12)
    assert k4.labels[0] == ("branch", 0)
    assert k4.labels[4] == ("subdivision", (0, 1), 1)


def test_subdivision_stretches_branch_distances():
    g = petersen()
    sub = subdivide(g, 3)
    for u in g.vertices:
        for v in g.vertices:
            assert sub.dist(u, v) == 3 * g.dist(u, v)


def test_projective_plane_incidence_graphs():
    fano = incidence_graph_pg2(2)
    assert (fano.order, fano.edge_count) == (14, 21)
    assert fano.degrees() == [3] * 14
    assert heawood() == fano
    plane = incidence_graph_pg2(3)
    assert (plane.order, plane.edge_count) == (26, 52)
    assert plane.labels[0][0] == "point"
    assert plane.labels[13][0] == "line"


def test_incidence_graphs_have_no_four_cycles():
    g = incidence_graph_pg2(3)
    for u in g.vertices:
        for v in range(u + 1, g.order):
            assert len(g.neighbors(u) & g.neighbors(v)) <= 1


def test_projective_plane_needs_prime_order():
    with pytest.raises(UnsupportedOrderError):
        incidence_graph_pg2(4)
    with pytest.raises(InvalidParameterError):
        incidence_graph_pg2(1)


def test_sequence_realizer_sizes():
    assert sequence_realizer([1]).order == 1
    assert sequence_realizer([2, 1]).order == 5
    assert sequence_realizer([2, 2, 1]).order == 7
    assert sequence_realizer([3, 3, 1]).order == 37
    assert realizer_drops([3, 3, 1]) == [2]
    assert realizer_drops([3, 2, 1]) == [1, 2]


def test_sequence_realizer_joins_apex_to_each_block():
    g = sequence_realizer([3, 2, 1])
    assert g.labels[0] == "apex"
    assert g.degree(0) == 2
    assert g.is_connected()


def test_sequence_realizer_rejects_bad_sequences():
    for bad in ([], [2], [1, 2], [2, 3, 1], [3, 0, 1]):
        with pytest.raises(InvalidParameterError):
            sequence_realizer(bad)


def test_capture_family_base_graph():
    g = capture_family(9)
    assert g.edge_count == 13
    assert g.labels == ("q", "t", "w", "x", "y", "h1", "h2", "v8", "v9")
    assert g.degrees() == [3, 3, 3, 3, 3, 3, 2, 4, 2]
    assert g.neighbors(g.index_of("v8")) == {1, 4, 6, 8}


def test_capture_family_grows_by_alternating_hubs():
    g = capture_family(11)
    assert g.labels[9] == "v10"
    assert g.neighbors(9) == {8, 6, 10}
    assert g.neighbors(10) == {9, 5}
    with pytest.raises(InvalidParameterError):
        capture_family(8)


def test_random_graphs_are_reproducible_and_connected():
    assert random_connected_graph(8, seed=4) == random_connected_graph(8, seed=4)
    assert random_connected_graph(8, 0.2, seed=1).is_connected()
    t = random_tree(10, seed=2)
    assert t.edge_count == 9
    assert t.is_connected()
    assert random_tree(2) == path(2)


def test_can_get_grid_as_string():
    text = GraphRenderer(grid(2, 3), use_color=False).get_graph_as_string(cops=[0], robber=5)
    assert text == "C . .\n. . R"


def test_rendering_marks_shared_vertices_and_captures():
    renderer = GraphRenderer(grid(2, 2), use_color=False)
    assert renderer.get_graph_as_string(cops=[0, 0], robber=3) == "2 .\n. R"
    assert renderer.get_graph_as_string(cops=[3], robber=3) == ". .\n. X"
    assert renderer.get_graph_as_string(labels={1: "a"}) == ". a\n. ."


def test_can_get_listing_for_graph_without_grid():
    text = GraphRenderer(path(3), use_color=False).get_graph_as_string(cops=[0], robber=2)
    assert text == "C 0: 1\n. 1: 0 2\nR 2: 1"


def test_renders_grid(capsys, snapshot):
    GraphRenderer(grid(3, 3), use_color=False).render_graph(cops=[4], robber=0)
    captured = capsys.readouterr()
    snapshot.assert_match(captured.out, "grid.txt")


def test_renders_listing(snapshot):
    snapshot.assert_match(
        GraphRenderer(petersen(), use_color=False).get_graph_as_string(cops=[0, 5], robber=7),
        "petersen.txt",
    )


def test_colored_rendering_keeps_markers():
    text = GraphRenderer(grid(2, 2)).get_graph_as_string(cops=[0], robber=3)
    assert "C" in text and "R" in text
