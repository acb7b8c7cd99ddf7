import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublearb.graph import (
    C4,
    P4,
    DisconnectedGraphError,
    Graph,
    ParseError,
    UnsupportedPatternError,
    co_components,
    complete_graph,
    cycle_graph,
    find_induced_copy,
    is_connected,
    load_graph,
    members,
    path_graph,
    require_connected,
    universal_vertices,
    vset,
    wheel_graph,
)

from conftest import TWINS6_LABEL
from oracles import induced_copy_exists


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_load_path():
    g = load_graph("3\n0 1\n1 2")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_load_single_vertex():
    g = load_graph("1")
    assert g.n == 1 and g.edges() == []


def test_load_twins6(twins6):
    assert twins6.n == 6
    assert len(twins6.edges()) == 10
    assert twins6.has_edge(TWINS6_LABEL[3], TWINS6_LABEL[1])
    assert not twins6.has_edge(TWINS6_LABEL[3], TWINS6_LABEL[4])


def test_load_comments_and_duplicates():
    g = load_graph("# header\n3  # three vertices\n\n0 1\n1 0\n0 1 # again\n")
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("text, lineno", [
    ("3\n0 1\n1 x", 3),
    ("3\n0 5", 2),
    ("3\n1 1", 2),
    ("3\n0 1 2", 2),
    ("3 4\n0 1", 1),
    ("zero", 1),
])
def test_load_errors_name_the_line(text, lineno):
    with pytest.raises(ParseError) as info:
        load_graph(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b01))


def test_is_connected(twins6):
    assert is_connected(load_graph("1"))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(twins6)
    with pytest.raises(DisconnectedGraphError):
        require_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_induced_p4_absent_in_c4():
    assert find_induced_copy(C4, P4) is None


def test_induced_p4_in_twins6(twins6):
    m = find_induced_copy(twins6, P4)
    assert m is not None
    image = [m[i] for i in range(4)]
    for a, b in itertools.combinations(range(4), 2):
        assert twins6.has_edge(image[a], image[b]) == (abs(a - b) == 1)
    # the only induced P4s of this graph are 3-1-5-4 style paths through both twin pairs
    labels = {v: k for k, v in TWINS6_LABEL.items()}
    ends = {labels[image[0]], labels[image[3]]}
    assert ends == {3, 4}


def test_induced_c4_in_wheel():
    w4 = wheel_graph(4)
    m = find_induced_copy(w4, C4)
    assert m is not None
    assert set(m.values()) == {0, 1, 2, 3}


def test_pattern_cap():
    with pytest.raises(UnsupportedPatternError):
        find_induced_copy(complete_graph(10), path_graph(9))


def test_pattern_larger_than_graph():
    assert find_induced_copy(P4, cycle_graph(5)) is None


def test_universal_vertices(twins6):
    assert list(members(universal_vertices(complete_graph(3)))) == [0, 1, 2]
    assert list(members(universal_vertices(path_graph(3)))) == [1]
    assert universal_vertices(twins6) == 0


def test_co_components():
    assert co_components(complete_graph(4), 0b1111) == [1, 2, 4, 8]
    assert co_components(C4, 0b1111) == [vset([0, 2]), vset([1, 3])]
    assert co_components(path_graph(3), 0b111) == [vset([0, 2]), vset([1])]


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=6), graphs(max_n=4))
def test_induced_copy_matches_brute_force(g, h):
    m = find_induced_copy(g, h)
    if m is None:
        assert not induced_copy_exists(g, h)
    else:
        assert sorted(m) == list(range(h.n))
        assert len(set(m.values())) == h.n
        for x, y in itertools.combinations(range(h.n), 2):
            assert h.has_edge(x, y) == g.has_edge(m[x], m[y])


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.data())
def test_co_component_parts_are_joined(g, data):
    s = data.draw(st.integers(1, g.all))
    parts = co_components(g, s)
    assert sum(parts) == s
    assert all(a & b == 0 for a, b in itertools.combinations(parts, 2))
    for a, b in itertools.combinations(parts, 2):
        for u in members(a):
            for v in members(b):
                assert g.has_edge(u, v)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_constructors_keep_rows_symmetric(g):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert load_graph(g.to_edge_list()) == g
    h = g.complement().complement()
    assert h == g
    perm = list(reversed(range(g.n)))
    assert g.relabel(perm).relabel(perm) == g
