import networkx as nx
import pytest
from hypothesis import given, settings

from harmpoly.families import complete_bipartite, complete_graph, cycle_graph, path_graph, star_graph, wheel_graph
from harmpoly.graph import (
    ACYCLIC,
    DISCONNECTED,
    UNDEFINED,
    Biregular,
    Graph,
    GraphError,
    Neither,
    Regular,
    adjacent_dominant_pair,
    build_graph,
    canonical_form,
    component_degree_parities,
    connected_components,
    degree_summary,
    diameter,
    disjoint_union,
    girth,
    has_alternated_degree,
    is_coherent,
    is_isomorphic,
    is_triangle_free,
    line_graph,
    pendant_path_count,
    regularity_class,
)

from conftest import graphs, to_nx


def test_build_path_and_triangle():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.m == 3 and p4.edges == ((0, 1), (1, 2), (2, 3))
    c3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert c3.m == 3 and c3.degrees == (2, 2, 2)


def test_duplicate_pairs_collapse_with_flag():
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.duplicates_collapsed
    assert not build_graph(2, [(0, 1)]).duplicates_collapsed


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_rejects_loops_and_out_of_range(edges):
    with pytest.raises(GraphError) as exc:
        build_graph(3, edges)
    assert str(edges[0]) in str(exc.value)


def test_equality_ignores_labels():
    a = Graph(2, [(0, 1)], labels=["x", "y"])
    assert a == Graph(2, [(1, 0)])
    assert hash(a) == hash(Graph(2, [(0, 1)]))


def test_degree_summary_examples():
    s = degree_summary(path_graph(4))
    assert s.degrees == (1, 2, 2, 1) and s.distinct == {1, 2}
    assert (s.max_degree, s.min_degree) == (2, 1)
    k4 = degree_summary(complete_graph(4))
    assert k4.distinct == {3} and k4.max_degree == k4.min_degree == 3
    w5 = degree_summary(wheel_graph(5))
    assert w5.distinct == {3, 4} and (w5.max_degree, w5.min_degree) == (4, 3)


def test_min_degree_skips_isolated_and_undefined_without_edges():
    s = degree_summary(Graph(4, [(0, 1)]))
    assert s.min_degree == 1 and s.isolated == 2
    empty = degree_summary(Graph(3))
    assert empty.max_degree is UNDEFINED and empty.min_degree is UNDEFINED


def test_components():
    two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3))
    comps = connected_components(two_triangles)
    assert [c.graph for c in comps] == [cycle_graph(3)] * 2
    assert [c.vertices for c in comps] == [(0, 1, 2), (3, 4, 5)]
    assert len(connected_components(path_graph(4))) == 1
    assert len(connected_components(Graph(3))) == 3


@given(graphs())
def test_components_partition_the_graph(g):
    comps = connected_components(g)
    verts = sorted(v for c in comps for v in c.vertices)
    assert verts == list(range(g.n))
    assert sum(c.graph.m for c in comps) == g.m
    assert len(comps) == nx.number_connected_components(to_nx(g)) if g.n else comps == []


def test_line_graph_examples():
    assert is_isomorphic(line_graph(path_graph(4)), path_graph(3))
    assert is_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))
    assert is_isomorphic(line_graph(star_graph(4)), cycle_graph(3))
    assert line_graph(Graph(3)).n == 0


@given(graphs(max_n=8))
def test_line_graph_matches_networkx_and_degree_rule(g):
    lg = line_graph(g)
    assert lg.n == g.m
    assert lg.m == nx.line_graph(to_nx(g)).number_of_edges()
    for w, (u, v) in enumerate(g.edges):
        assert lg.degrees[w] == g.degrees[u] + g.degrees[v] - 2


def test_girth_and_diameter_examples():
    assert girth(path_graph(5)) is ACYCLIC
    assert girth(cycle_graph(7)) == 7
    assert girth(complete_graph(4)) == 3
    assert girth(complete_bipartite(3, 3)) == 4
    assert diameter(path_graph(5)) == 4
    assert diameter(disjoint_union(path_graph(2), path_graph(2))) is DISCONNECTED


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_girth_matches_networkx(g):
    ours = girth(g)
    theirs = nx.girth(to_nx(g))
    assert (ours is ACYCLIC) == (theirs == float("inf"))
    if ours is not ACYCLIC:
        assert ours == theirs


@given(graphs(max_n=8, min_n=1))
def test_diameter_matches_networkx(g):
    h = to_nx(g)
    if nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    else:
        assert diameter(g) is DISCONNECTED


def test_triangle_free_and_dominance():
    assert is_triangle_free(cycle_graph(4))
    assert not is_triangle_free(wheel_graph(5))
    assert adjacent_dominant_pair(complete_graph(4)) is not None
    assert adjacent_dominant_pair(star_graph(5)) is None
    assert adjacent_dominant_pair(wheel_graph(5)) is None


def test_pendant_paths_count_edges_between_degrees_one_and_two():
    assert pendant_path_count(path_graph(3)) == 2
    assert pendant_path_count(path_graph(5)) == 2
    assert pendant_path_count(star_graph(4)) == 0
    # a triangle with a pendant vertex: the pendant edge joins degrees 1 and 3
    paw = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert pendant_path_count(paw) == 0


def test_regularity_classes():
    assert regularity_class(cycle_graph(5)) == [Regular(2)]
    assert regularity_class(star_graph(4)) == [Biregular(3, 1)]
    assert regularity_class(complete_bipartite(2, 3)) == [Biregular(3, 2)]
    assert regularity_class(path_graph(4)) == [Neither()]
    # two degrees but not split across a bipartition
    assert regularity_class(wheel_graph(5)) == [Neither()]


def test_coherence():
    assert is_coherent(disjoint_union(cycle_graph(3), star_graph(4)))  # 2+2 = 3+1
    assert not is_coherent(disjoint_union(path_graph(2), cycle_graph(3)))
    assert not is_coherent(path_graph(4))


def test_degree_parities():
    assert component_degree_parities(disjoint_union(cycle_graph(3), path_graph(3))) == ["even", "mixed"]
    assert has_alternated_degree(star_graph(5))
    assert not has_alternated_degree(cycle_graph(3))


@settings(max_examples=150)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
    assert (canonical_form(a) == canonical_form(b)) == is_isomorphic(a, b)


@given(graphs(max_n=7))
def test_relabeling_preserves_canonical_form(g):
    perm = list(reversed(range(g.n)))
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert is_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)


def test_isomorphism_refuses_large_graphs():
    with pytest.raises(GraphError):
        is_isomorphic(path_graph(10), path_graph(10))
