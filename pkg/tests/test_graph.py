import random

import pytest

from spantree import (
    EdgeListParseError,
    Graph,
    PartitionShape,
    complete,
    complete_multipartite,
    conjugate,
    ferrers_graph,
    format_edge_list,
    induced_subgraph,
    is_connected,
    is_independent,
    parse_edge_list,
)
from sample_graphs import FIXTURES, HOUSE_TAIL, K4, TWO_K2, assert_simple, partitions_up_to


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(3, [(2, 4)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_graph_set_semantics():
    g = Graph(3, [(1, 2), (2, 1), (1, 2)])
    assert g.edge_count == 1
    assert g.edges() == ((1, 2),)


def test_complete():
    g = complete(4)
    assert g.edge_count == 6
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert complete(1).edge_count == 0
    assert complete(5).edge_count == 10
    with pytest.raises(ValueError):
        complete(0)


def test_complete_multipartite():
    g = complete_multipartite([2, 3])
    assert g.edge_count == 6
    assert all(g.has_edge(u, v) for u in (1, 2) for v in (3, 4, 5))
    assert complete_multipartite([1, 1, 1, 1]) == complete(4)
    assert complete_multipartite([3]).edge_count == 0
    assert complete_multipartite([3]).n == 3
    with pytest.raises(ValueError):
        complete_multipartite([])
    with pytest.raises(ValueError):
        complete_multipartite([2, 0])


def test_ferrers_graph_labeling_and_degrees():
    g = ferrers_graph((3, 2, 2, 1))
    assert g.n == 7
    assert g.edge_count == 8
    # rows 1..4 carry the part sizes, columns 5..7 the conjugate
    assert [g.degree(v) for v in (1, 2, 3, 4)] == [3, 2, 2, 1]
    assert [g.degree(v) for v in (5, 6, 7)] == [4, 3, 1]
    assert ferrers_graph((1,)).edges() == ((1, 2),)
    assert ferrers_graph((2, 2)) == complete_multipartite([2, 2])


@pytest.mark.parametrize("shape", partitions_up_to(9))
def test_ferrers_graph_degree_invariants(shape):
    ps = PartitionShape(shape)
    g = ferrers_graph(ps)
    assert_simple(g)
    assert g.edge_count == ps.total
    conj = ps.conjugate()
    for i, part in enumerate(ps.parts, 1):
        assert g.degree(i) == part
    for j, part in enumerate(conj.parts, 1):
        assert g.degree(ps.rows + j) == part


def test_partition_shape_validation():
    with pytest.raises(ValueError):
        PartitionShape(())
    with pytest.raises(ValueError):
        PartitionShape((2, 3))
    with pytest.raises(ValueError):
        PartitionShape((2, 0))


def test_conjugate_examples():
    assert conjugate(PartitionShape((3, 2, 2, 1))).parts == (4, 3, 1)
    assert conjugate(PartitionShape((1,))).parts == (1,)
    assert conjugate(PartitionShape((5,))).parts == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("shape", partitions_up_to(10))
def test_conjugate_is_an_involution(shape):
    ps = PartitionShape(shape)
    assert ps.conjugate().conjugate() == ps


def test_induced_subgraph():
    sub, labels = induced_subgraph(HOUSE_TAIL, {1, 2, 3, 4})
    assert labels == (1, 2, 3, 4)
    assert sub.edges() == ((1, 2), (1, 4), (2, 3))  # a path 4-1-2-3
    whole, labels = induced_subgraph(HOUSE_TAIL, HOUSE_TAIL.vertices)
    assert whole == HOUSE_TAIL
    pair, _ = induced_subgraph(K4, {1, 2})
    assert pair == Graph(2, [(1, 2)])
    with pytest.raises(ValueError):
        induced_subgraph(K4, {1, 9})


def test_induced_subgraph_composes():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 9)
        g = Graph(
            n,
            [
                (u, v)
                for u in range(1, n + 1)
                for v in range(u + 1, n + 1)
                if rng.random() < 0.4
            ],
        )
        a = {v for v in g.vertices if rng.random() < 0.7}
        b = {v for v in g.vertices if rng.random() < 0.7}
        sub_a, labels_a = induced_subgraph(g, a)
        inner = {i for i, old in enumerate(labels_a, 1) if old in b}
        twice, labels_inner = induced_subgraph(sub_a, inner)
        direct, labels_direct = induced_subgraph(g, a & b)
        assert twice == direct
        assert tuple(labels_a[i - 1] for i in labels_inner) == labels_direct


def test_connectivity_and_independence():
    assert is_connected(HOUSE_TAIL)
    assert not is_connected(TWO_K2)
    assert is_connected(Graph(1))
    k23 = complete_multipartite([2, 3])
    assert is_independent(k23, {3, 4, 5})
    assert not is_independent(k23, {1, 3})
    with pytest.raises(ValueError):
        is_independent(K4, {0})


def test_constructors_produce_valid_graphs():
    for g in (HOUSE_TAIL, K4, complete(6), complete_multipartite([2, 3, 1]), ferrers_graph((4, 2, 1))):
        assert_simple(g)


def test_parse_edge_list_round_trip():
    for path in FIXTURES.glob("*.txt"):
        g = parse_edge_list(path.read_text(), source=path.name)
        assert_simple(g)
        again = parse_edge_list(format_edge_list(g))
        assert again == g


@pytest.mark.parametrize(
    "text",
    [
        "",  # empty
        "junk\n",  # bad header
        "3\n",  # header too short
        "3 1\n",  # missing edge line
        "3 1\n1 2\n2 3\n",  # extra edge line
        "3 1\n1 1\n",  # loop
        "3 1\n2 1\n",  # u >= v
        "3 2\n1 2\n1 2\n",  # duplicate
        "3 1\n1 4\n",  # out of range
        "3 1\n1 x\n",  # non-integer
        "0 0\n",  # no vertices
    ],
)
def test_parse_edge_list_rejects(text):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(text)


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# leading comment\n\n3 1  # header\n1 2 # edge\n")
    assert g.n == 3 and g.edges() == ((1, 2),)
