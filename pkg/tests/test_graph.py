import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddsub.graph import (
    Coloring,
    GraphError,
    bipartition,
    build_graph,
    check_vertex_set,
    chromatic_number,
    classify,
    complement,
    connected_components,
    disjoint_union,
    find_c5,
    find_claw,
    format_edge_list,
    from_mask,
    girth,
    induced_subgraph,
    is_connected,
    is_even_induced,
    is_odd_induced,
    line_graph,
    parse_edge_list,
    regular_degree,
    to_mask,
)
from oddsub.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_F,
    path_graph,
    petersen_graph,
    star_graph,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])
    assert build_graph(3, [(0, 1), (1, 0)], dedupe=True).m == 1
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_edges_are_canonical():
    G = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    assert G.edges == ((0, 1), (0, 2), (2, 3))
    assert G.degrees() == [2, 1, 2, 1]
    assert G.has_edge(3, 2) and not G.has_edge(1, 3)


def test_vertex_set_checks():
    G = path_graph(4)
    assert check_vertex_set(G, [2, 0]) == (0, 2)
    with pytest.raises(GraphError):
        check_vertex_set(G, [0, 0])
    with pytest.raises(GraphError):
        check_vertex_set(G, [4])
    assert from_mask(to_mask([1, 3])) == (1, 3)


def test_odd_and_even_predicates():
    G = path_graph(4)
    assert is_odd_induced(G, [0, 1])
    assert is_odd_induced(G, [0, 1, 2, 3]) is False
    assert is_odd_induced(G, []) is False
    assert is_even_induced(G, [0, 2])
    assert is_even_induced(G, [])
    assert is_odd_induced(complete_graph(4), range(4))


def test_induced_subgraph_relabels():
    G = cycle_graph(5)
    H, ids = induced_subgraph(G, [4, 0, 1])
    assert ids == (0, 1, 4)
    assert H.edges == ((0, 1), (0, 2))


def test_line_graph_bijection():
    G = star_graph(3)
    res = line_graph(G)
    assert res.lg == complete_graph(3)
    assert res.edge_of_vertex == G.edges
    assert res.vertex_of_edge()[(0, 2)] == 1
    assert res.to_lg_vertices([(2, 0), (0, 1)]) == (0, 1)
    assert line_graph(cycle_graph(6)).lg.m == 6


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_line_graph_edge_count(G):
    expected = sum(d * (d - 1) // 2 for d in G.degrees())
    assert line_graph(G).lg.m == expected
    assert find_claw(line_graph(G).lg) is None


def test_union_and_complement():
    U = disjoint_union(cycle_graph(3), path_graph(2))
    assert U.n == 5 and U.edges == ((0, 1), (0, 2), (1, 2), (3, 4))
    assert complement(empty_graph(4)) == complete_graph(4)
    assert [len(c) for c in connected_components(U)] == [3, 2]
    assert not is_connected(U) and is_connected(empty_graph(1))


def test_structure_helpers():
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(6)) is None
    assert girth(complete_bipartite(3, 3)) == 4
    assert bipartition(cycle_graph(5)) is None
    assert bipartition(cycle_graph(6)) == [0, 1, 0, 1, 0, 1]
    assert regular_degree(petersen_graph()) == 3
    assert regular_degree(path_graph(3)) is None
    assert find_c5(complete_bipartite(3, 3)) is None
    assert find_c5(petersen_graph()) is not None
    assert find_c5(complete_graph(5)) is not None


def test_claw_detection():
    assert find_claw(star_graph(3)) == (0, (1, 2, 3))
    assert find_claw(graph_F()) is not None
    assert find_claw(graph_F(), r=4) is None
    assert find_claw(star_graph(4), r=4) is not None


def test_classify_F():
    rep = classify(graph_F())
    assert rep.n == 9 and rep.max_degree == 3 and rep.min_degree == 2
    assert not rep.claw_free and rep.k1r_free_from == 4
    assert rep.as_dict()["girth"] == rep.girth


@pytest.mark.parametrize(
    "G, chi",
    [(empty_graph(3), 1), (path_graph(5), 2), (cycle_graph(5), 3), (complete_graph(5), 5), (petersen_graph(), 3)],
)
def test_chromatic_number(G, chi):
    k, col = chromatic_number(G)
    assert k == chi and col.k == chi and col.is_proper(G)


def test_coloring_classes():
    col = Coloring((0, 1, 0), 2)
    assert col.classes() == [(0, 2), (1,)]
    assert col.is_proper(path_graph(3))
    assert not Coloring((0, 0, 1), 2).is_proper(path_graph(3))


def test_edge_list_round_trip():
    G = petersen_graph()
    assert parse_edge_list(format_edge_list(G)) == G
    text = "# header\n3 2\n0 1  # first\n2 1\n"
    assert parse_edge_list(text).edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, where",
    [("", "empty"), ("3 2\n0 1\n", "2"), ("2 1\n0 5\n", "line 2"), ("2 1\n0 x\n", "line 2"), ("2 2\n0 1\n1 0\n", "line 3")],
)
def test_edge_list_errors(text, where):
    with pytest.raises(GraphError) as exc:
        parse_edge_list(text)
    assert where in str(exc.value)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_edge_list_round_trip_property(G):
    assert parse_edge_list(format_edge_list(G)) == G
