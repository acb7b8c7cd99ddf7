import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublearb.graph import (
    C4,
    GEM,
    P4,
    DisconnectedGraphError,
    Graph,
    complete_graph,
    star_graph,
)
from doublearb.lab import GenConfig, gen_arborescence, gen_double_arborescence
from doublearb.orientation import (
    ROOT_GREATEST,
    ROOT_LEAST,
    DoubleArbOrientation,
    RootedForestPoset,
    arborescence_orientation,
    double_arborescence_orientation,
    longest_chain,
    verify_treelike_orientation,
)

from oracles import atlas_connected, classes, clique_number


def test_star_orientation(k13):
    p = arborescence_orientation(k13)
    assert p.root == 0
    assert p.children()[0] == [1, 2, 3]
    assert verify_treelike_orientation(k13, p)


@pytest.mark.parametrize("g", [P4, C4], ids=["P4", "C4"])
def test_no_arborescence(g):
    assert arborescence_orientation(g) is None


def test_k3_is_a_chain():
    k3 = complete_graph(3)
    p = arborescence_orientation(k3)
    assert len(longest_chain(p)) == 3
    assert verify_treelike_orientation(k3, p)


def test_disconnected_input():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        arborescence_orientation(g)
    with pytest.raises(DisconnectedGraphError):
        double_arborescence_orientation(g)


def test_arborescence_has_trivial_upper_side(k13):
    o = double_arborescence_orientation(k13)
    assert o is not None
    assert o.above.vertices == [o.root]
    assert not o.is_strict()


def test_w4_orientation(w4):
    o = double_arborescence_orientation(w4)
    assert o.root == 4
    sides = {frozenset(o.below.vertices) - {4}, frozenset(o.above.vertices) - {4}}
    # opposite rim vertices are the incomparable pairs
    assert sides == {frozenset({0, 2}), frozenset({1, 3})}
    assert o.is_strict()
    assert verify_treelike_orientation(w4, o)


def test_gem_has_no_double_orientation():
    assert double_arborescence_orientation(GEM) is None


def test_chain_lengths(w4, k13):
    assert len(longest_chain(arborescence_orientation(complete_graph(5)))) == 5
    chain = longest_chain(arborescence_orientation(k13))
    assert chain[0] == 0 and len(chain) == 2
    o = double_arborescence_orientation(w4)
    chain = longest_chain(o)
    assert len(chain) == 3 and chain[1] == 4
    assert all(w4.has_edge(a, b) for a in chain for b in chain if a != b)


def test_verify_rejects_fake_star_on_p4():
    fake = RootedForestPoset(0, {1: 0, 2: 0, 3: 0})
    assert not verify_treelike_orientation(P4, fake)


def test_verify_rejects_overlapping_sides(w4):
    below = RootedForestPoset(4, {0: 4, 2: 4})
    above = RootedForestPoset(4, {0: 4, 1: 4, 3: 4}, ROOT_LEAST)
    assert not verify_treelike_orientation(w4, DoubleArbOrientation(4, below, above))


def test_serialization_shapes(w4):
    o = double_arborescence_orientation(w4)
    js = o.to_json()
    assert js["root"] == 4
    assert js["below"]["direction"] == ROOT_GREATEST
    assert js["above"]["direction"] == ROOT_LEAST
    dot = o.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == 4
    p = arborescence_orientation(star_graph(2))
    assert p.to_dot().count("->") == 2


def test_atlas_agrees_with_brute_force():
    for g in atlas_connected(6):
        truth = classes(g)
        assert (arborescence_orientation(g) is not None) == truth["arborescence"], g
        assert (double_arborescence_orientation(g) is not None) == truth["double_arborescence"], g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32), st.booleans())
def test_generated_orientations_verify(n, seed, double):
    if double:
        g, o = gen_double_arborescence(GenConfig(n, seed))
        found = double_arborescence_orientation(g)
    else:
        g, o = gen_arborescence(GenConfig(n, seed))
        found = arborescence_orientation(g)
    assert verify_treelike_orientation(g, o)
    assert found is not None
    assert verify_treelike_orientation(g, found)
    assert len(longest_chain(found)) == clique_number(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 40), st.integers(0, 2**32))
def test_strict_sides_hold_incomparable_pairs(n, seed):
    g, o = gen_double_arborescence(GenConfig(n, seed, strict=True))
    assert o.is_strict()
    assert arborescence_orientation(g) is None
    found = double_arborescence_orientation(g)
    assert found is not None and found.is_strict()
