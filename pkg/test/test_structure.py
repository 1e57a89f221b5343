import pytest

from pycops import capture_time
from pycops.errors import DomainError, InvalidParameterError, StructureError
from pycops.game import GameConfig
from pycops.graphs import (
    Graph,
    capture_family,
    complete,
    cycle,
    hypercube,
    path,
    petersen,
    power,
    random_connected_graph,
    random_tree,
    sequence_realizer,
)
from pycops.structure import (
    VertexMap,
    capture_time_via_partition,
    complete_subdivision_retraction,
    copwin_ordering,
    copwin_partition,
    cornering_vertices,
    corners,
    identity_map,
    is_corner,
    is_dismantlable,
    is_homomorphism,
    is_retraction,
    product_map,
    projection_retraction,
    quotient,
    realizer_retraction,
    twin_classes,
)

from .helpers import assert_is_copwin_ordering


def test_can_find_corners():
    assert is_corner(complete(2), 0)
    assert is_corner(complete(2), 1)
    assert not is_corner(cycle(4), 0)
    assert corners(path(3)) == {0, 2}
    assert cornering_vertices(path(3), 0) == {1}
    assert corners(cycle(5)) == frozenset()


def test_twins_of_complete_graph_collapse():
    assert twin_classes(complete(4)) == [frozenset({0, 1, 2, 3})]
    q, class_of = quotient(complete(4))
    assert q.order == 1
    assert class_of == [0, 0, 0, 0]


def test_quotient_of_twin_free_graph_is_itself():
    q, class_of = quotient(cycle(5))
    assert q == cycle(5)
    assert class_of == [0, 1, 2, 3, 4]
    assert q.labels == (0, 1, 2, 3, 4)


def test_quotient_merges_closed_twins():
    # 0 and 1 are adjacent twins hanging off 2
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert twin_classes(g) == [frozenset({0, 1}), frozenset({2}), frozenset({3})]
    q, class_of = quotient(g)
    assert q == path(3)
    assert class_of == [0, 0, 1, 2]


def test_trees_are_dismantlable():
    for seed in range(10):
        t = random_tree(8, seed=seed)
        ordering = copwin_ordering(t)
        assert ordering is not None
        assert_is_copwin_ordering(t, ordering)


def test_copwin_ordering_removes_lowest_corner_first():
    assert copwin_ordering(path(4)) == [0, 1, 2, 3]
    assert copwin_ordering(complete(1)) == [0]


def test_cycles_are_not_dismantlable():
    assert copwin_ordering(cycle(4)) is None
    assert not is_dismantlable(cycle(6))
    assert not is_dismantlable(petersen())
    assert is_dismantlable(power(cycle(6), 3))


def test_capture_family_square_ordering():
    square = power(capture_family(12), 2)
    ordering = copwin_ordering(square)
    assert ordering is not None
    assert_is_copwin_ordering(square, ordering)


def test_capture_family_square_partition():
    partition = copwin_partition(power(capture_family(9), 2))
    assert partition.layers == (
        frozenset({6, 8}),
        frozenset({0, 1, 2, 4, 5, 7}),
        frozenset({3}),
    )
    assert partition.last_layers_fully_adjacent
    assert partition.capture_time == 2
    assert partition.to_dict() == {
        "layers": [[6, 8], [0, 1, 2, 4, 5, 7], [3]],
        "capture_time": 2,
    }


def test_capture_family_square_capture_times():
    for n in range(9, 21):
        assert capture_time_via_partition(power(capture_family(n), 2)) == n - 7


def test_capture_family_square_has_one_corner():
    for n in range(10, 21):
        square = power(capture_family(n), 2)
        assert corners(square) == {n - 1}
        assert cornering_vertices(square, n - 1) == {n - 3}
        smaller = square.delete_vertex(n - 1)
        assert capture_time_via_partition(square) == capture_time_via_partition(smaller) + 1


def test_partition_of_path():
    partition = copwin_partition(path(3))
    assert partition.layers == (frozenset({0, 2}), frozenset({1}))
    assert partition.capture_time == 1
    assert copwin_partition(path(5)).capture_time == 2


def test_partition_needs_non_complete_connected_graph():
    with pytest.raises(DomainError):
        copwin_partition(complete(3))
    with pytest.raises(DomainError):
        copwin_partition(Graph(3, [(0, 1)]))
    assert copwin_partition(cycle(5)) is None


def test_capture_time_via_partition_small_cases():
    assert capture_time_via_partition(complete(1)) == 0
    assert capture_time_via_partition(complete(4)) == 1
    assert capture_time_via_partition(path(2)) == 1
    with pytest.raises(DomainError):
        capture_time_via_partition(cycle(5))


def test_identity_is_a_retraction():
    m = identity_map(petersen())
    assert is_retraction(m)
    assert m.homomorphism
    assert m(3) == 3


def test_can_detect_non_homomorphism():
    m = VertexMap(cycle(5), cycle(5), (0, 0, 0, 0, 2))
    assert not is_homomorphism(m)
    assert not m.homomorphism


def test_map_that_moves_target_is_not_a_retraction():
    assert not is_retraction(VertexMap(path(3), path(3), (1, 1, 1)))


def test_retraction_target_must_embed():
    with pytest.raises(StructureError):
        is_retraction(VertexMap(path(2), complete(3), (0, 1)))
    with pytest.raises(StructureError):
        is_retraction(VertexMap(path(3), complete(3), (0, 1, 2)))


def test_vertex_map_checks_its_images():
    with pytest.raises(InvalidParameterError):
        VertexMap(path(3), path(2), (0, 1))
    with pytest.raises(InvalidParameterError):
        VertexMap(path(2), path(2), (0, 2))


def test_complete_subdivision_retraction():
    m = complete_subdivision_retraction(4, 2)
    assert (m.source.order, m.target.order) == (10, 6)
    assert is_retraction(m)
    assert is_retraction(complete_subdivision_retraction(5, 3))
    assert is_retraction(complete_subdivision_retraction(4, 1))
    with pytest.raises(InvalidParameterError):
        complete_subdivision_retraction(3, 2)


def test_realizer_retraction():
    m = realizer_retraction([3, 3, 1], 1)
    assert m.target.order == 36
    assert is_retraction(m)
    assert m(0) == 0
    assert m.embedded(0) == 1
    assert is_retraction(realizer_retraction([3, 2, 1], 2))
    with pytest.raises(InvalidParameterError):
        realizer_retraction([2, 1], 2)


def test_projection_retraction():
    m = projection_retraction([path(3), path(2), path(2)], 0, [0, 1, 1])
    assert m.target == path(3)
    assert is_retraction(m)
    assert m.embedded(2) == 2 * 4 + 1 * 2 + 1
    assert is_retraction(projection_retraction([cycle(4), path(3)], 1, [2, 0]))


def test_products_of_retractions_are_retractions():
    m = product_map(complete_subdivision_retraction(4, 2), identity_map(path(2)))
    assert (m.source.order, m.target.order) == (20, 12)
    assert is_retraction(m)
    assert is_retraction(product_map(identity_map(path(3)), identity_map(hypercube(2))))


def test_random_dismantlable_graphs_have_valid_partitions():
    checked = 0
    for seed in range(30):
        g = random_connected_graph(7, 0.6, seed=seed)
        if g.is_complete() or not is_dismantlable(g):
            continue
        partition = copwin_partition(g)
        if partition is None:
            continue
        assert frozenset().union(*partition.layers) == frozenset(g.vertices)
        assert sum(len(layer) for layer in partition.layers) == g.order
        checked += 1
    assert checked > 0


def test_sequence_realizer_retracts_onto_each_block():
    g = sequence_realizer([3, 2, 1])
    assert is_retraction(realizer_retraction([3, 2, 1], 1))
    assert realizer_retraction([3, 2, 1], 1).source == g


def test_removing_a_unique_corner_lowers_capture_time_by_one():
    sampled = [random_connected_graph(5 + seed % 5, 0.6, seed=seed) for seed in range(200)]
    sampled += [power(capture_family(n), 2) for n in range(10, 14)]
    checked = 0
    for g in sampled:
        if g.order < 2 or not is_dismantlable(g):
            continue
        found = corners(g)
        if len(found) != 1:
            continue
        (v,) = found
        smaller = g.delete_vertex(v)
        assert capture_time(g, GameConfig()) == capture_time(smaller, GameConfig()) + 1
        checked += 1
    assert checked >= 4
