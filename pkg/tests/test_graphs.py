import itertools

import pytest
from hypothesis import given, strategies as st

from powergraph import (
    SimpleGraph,
    build_group,
    complement,
    cyclic_group,
    drop_isolated,
    enhanced_power_graph,
    power_graph,
    quaternion_group,
    to_dot,
)
from powergraph.group import subgroup_generated
from conftest import element


@st.composite
def graphs(draw, max_vertices=16):
    n = draw(st.integers(0, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, edges)


def edge_set(graph):
    return {frozenset(graph.label(v) for v in e) for e in graph.edges()}


def test_simple_graph_basics():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 1), (3, 0)])
    g.validate()
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]
    assert g.degree(0) == 2 and g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(2, 3)
    assert g.edge_count() == 3
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(1, 1)])


def test_validate_catches_asymmetry():
    with pytest.raises(ValueError):
        SimpleGraph((0b10, 0)).validate()
    with pytest.raises(ValueError):
        SimpleGraph((0b1,)).validate()


@pytest.mark.parametrize("n", [1, 2, 5, 12, 30])
def test_enhanced_power_graph_of_cyclic_is_complete(n):
    assert enhanced_power_graph(cyclic_group(n)).is_complete()


def test_enhanced_power_graph_s3(s3):
    graph = enhanced_power_graph(s3)
    graph.validate()
    e = s3.identity
    a, b = element(s3, "(1 2 3)"), element(s3, "(1 3 2)")
    expected = {frozenset((e, x)) for x in s3.elements() if x != e} | {frozenset((a, b))}
    assert graph.edge_count() == 6
    assert edge_set(graph) == expected


def test_enhanced_power_graph_trivial():
    graph = enhanced_power_graph(cyclic_group(1))
    assert graph.vertex_count == 1 and graph.edge_count() == 0


def test_power_graph_c8_complete():
    assert power_graph(cyclic_group(8)).is_complete()


def test_power_graph_c6():
    g = cyclic_group(6)
    graph = power_graph(g)
    # oracle: direct power membership
    powers = {x: {(k * x) % 6 for k in range(6)} for x in range(6)}
    brute = {frozenset((x, y)) for x, y in itertools.combinations(range(6), 2) if x in powers[y] or y in powers[x]}
    assert edge_set(graph) == brute
    assert graph.edge_count() == 13
    missing = {frozenset(p) for p in itertools.combinations(range(6), 2)} - brute
    assert missing == {frozenset({2, 3}), frozenset({3, 4})}


def test_power_graph_q8(q8):
    graph = power_graph(q8)
    i, j, m1 = element(q8, "i"), element(q8, "j"), element(q8, "-1")
    assert graph.has_edge(i, m1)
    assert not graph.has_edge(i, j)


def test_complement_examples():
    k5 = enhanced_power_graph(cyclic_group(5))
    assert complement(k5).edge_count() == 0
    p6 = power_graph(cyclic_group(6))
    assert complement(complement(p6)) == p6
    assert set(complement(p6).edges()) == {(2, 3), (3, 4)}
    assert complement(p6).labels == p6.labels


def test_drop_isolated_examples(s3, q8):
    empty = drop_isolated(SimpleGraph.from_edges(5, []))
    assert empty.kept == () and empty.graph.vertex_count == 0

    s = drop_isolated(complement(enhanced_power_graph(s3)))
    assert set(s.kept) == set(s3.elements()) - {s3.identity}
    assert s.graph.labels == s.kept

    q = drop_isolated(complement(enhanced_power_graph(q8)))
    assert {q8.names[x] for x in q.kept} == {"i", "-i", "j", "-j", "k", "-k"}


def test_drop_isolated_preserves_edges():
    g = SimpleGraph.from_edges(6, [(1, 4), (4, 5), (1, 5)])
    m = drop_isolated(g)
    assert m.kept == (1, 4, 5)
    for a, b in itertools.combinations(range(3), 2):
        assert m.graph.has_edge(a, b) == g.has_edge(m.kept[a], m.kept[b])


def test_zero_vertex_graph():
    g = SimpleGraph(())
    assert complement(g) == g
    assert drop_isolated(g).kept == ()
    assert to_dot(g) == "graph G {\n}\n"


@given(graphs())
def test_complement_involution(graph):
    graph.validate()
    c = complement(graph)
    c.validate()
    assert complement(c) == graph
    n = graph.vertex_count
    assert graph.edge_count() + c.edge_count() == n * (n - 1) // 2


@given(graphs())
def test_drop_isolated_idempotent(graph):
    once = drop_isolated(graph)
    twice = drop_isolated(once.graph)
    assert twice.kept == tuple(range(once.graph.vertex_count))
    assert twice.graph.rows == once.graph.rows
    assert twice.graph.labels == once.graph.labels
    assert once.kept == tuple(sorted(once.kept))
    assert all(once.graph.degree(v) > 0 for v in range(once.graph.vertex_count))


def test_power_graph_inside_enhanced(catalog_groups):
    for g in catalog_groups:
        p, ep = power_graph(g), enhanced_power_graph(g)
        assert all(ep.rows[v] & p.rows[v] == p.rows[v] for v in g.elements())
        cp, cep = complement(p), complement(ep)
        assert all(cp.rows[v] & cep.rows[v] == cep.rows[v] for v in g.elements())


def test_identity_isolated_in_both_complements(catalog_groups):
    for g in catalog_groups:
        assert complement(power_graph(g)).degree(g.identity) == 0
        assert complement(enhanced_power_graph(g)).degree(g.identity) == 0


def is_cyclic_set(g, elements):
    return any(subgroup_generated(g, [z]) == elements for z in elements)


@pytest.mark.parametrize("spec", ["S3", "Q8", "D4", "C2xC6", "A4", "D6", "S3xC2"])
def test_enhanced_adjacency_matches_two_generated_cyclic(spec):
    g = build_group(spec)
    ep = enhanced_power_graph(g)
    for x, y in itertools.combinations(g.elements(), 2):
        assert ep.has_edge(x, y) == is_cyclic_set(g, subgroup_generated(g, [x, y]))


def test_dot_export():
    g = cyclic_group(6)
    graph = complement(power_graph(g))
    dot = to_dot(graph, [g.name(v) for v in range(6)])
    lines = dot.splitlines()
    assert lines[0] == "graph G {"
    assert lines[-1] == "}"
    assert [l.strip() for l in lines if "--" in l] == ["2 -- 3;", "3 -- 4;"]
    assert '  0 [label="0"];' in lines


def test_dot_escapes_quotes():
    dot = to_dot(SimpleGraph.from_edges(2, [(0, 1)]), ['a"b', "c"])
    assert 'label="a\\"b"' in dot
