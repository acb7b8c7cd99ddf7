import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublearb.graph import C4, GEM, P4, Graph, GraphError, find_induced_copy, is_connected, star_graph
from doublearb.lab import (
    GenConfig,
    InfeasibleConfigError,
    SplitMix64,
    crosscheck,
    enumerate_connected_graphs,
    gen_arborescence,
    gen_dh_graph,
    gen_double_arborescence,
    gen_path_of_double_arborescences,
    strict_double_arb_patterns,
    sweep,
)
from doublearb.splitdec import classify_via_tree


def test_splitmix_reference_values():
    # first outputs for seed 0 from the published reference implementation
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_splitmix_bounds():
    rng = SplitMix64(5)
    assert all(0 <= rng.below(7) < 7 for _ in range(200))
    assert all(3 <= rng.between(3, 4) <= 4 for _ in range(50))


def test_generators_are_deterministic():
    assert gen_arborescence(GenConfig(30, 9)) == gen_arborescence(GenConfig(30, 9))
    assert gen_dh_graph(GenConfig(30, 9)) == gen_dh_graph(GenConfig(30, 9))
    assert gen_arborescence(GenConfig(30, 9))[0] != gen_arborescence(GenConfig(30, 10))[0]


def test_smallest_arborescences():
    assert gen_arborescence(GenConfig(1))[0] == Graph(1, (0,))
    assert gen_arborescence(GenConfig(2))[0] == Graph.from_edges(2, [(0, 1)])


def test_seeded_examples():
    g, _ = gen_arborescence(GenConfig(8, 42))
    assert classify_via_tree(g).is_arb
    g, _ = gen_double_arborescence(GenConfig(50, 7))
    assert classify_via_tree(g).is_double_arb


def test_strict_five_is_w4(w4):
    for seed in range(10):
        g, o = gen_double_arborescence(GenConfig(5, seed, strict=True))
        assert find_induced_copy(g, w4) is not None
        assert len(g.edges()) == 8


def test_chains_on_both_sides_give_a_clique():
    g, o = gen_double_arborescence(GenConfig(6, 3, branching=1))
    assert len(g.edges()) == 15
    assert classify_via_tree(g).is_arb


def test_infeasible_configs():
    with pytest.raises(InfeasibleConfigError):
        gen_double_arborescence(GenConfig(4, strict=True))
    with pytest.raises(InfeasibleConfigError):
        gen_path_of_double_arborescences(3, GenConfig(14))
    with pytest.raises(ValueError):
        GenConfig(0)


def test_path_k1_is_double_arborescence():
    g = gen_path_of_double_arborescences(1, GenConfig(9, 4))
    assert classify_via_tree(g).is_double_arb


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32), st.integers(0, 10))
def test_paths_contain_p4(k, seed, extra):
    g = gen_path_of_double_arborescences(k, GenConfig(5 * k + extra, seed))
    assert is_connected(g)
    assert find_induced_copy(g, P4) is not None
    rep = classify_via_tree(g)
    assert rep.is_treelike and not rep.is_double_arb


def test_four_piece_path_is_treelike():
    g = gen_path_of_double_arborescences(4, GenConfig(20, 1))
    rep = classify_via_tree(g)
    assert rep.is_treelike and not rep.is_double_arb


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_connected_graphs(n)) == count


def test_enumeration_dedup():
    # connected unlabeled graphs on 4 vertices
    assert sum(1 for _ in enumerate_connected_graphs(4, dedup=True)) == 6


def test_enumeration_guard():
    with pytest.raises(GraphError):
        list(enumerate_connected_graphs(8))


def test_strict_patterns():
    pats = strict_double_arb_patterns()
    assert {h.n for h in pats} == {5, 6}
    # one pattern on five vertices: W4
    assert sum(1 for h in pats if h.n == 5) == 1
    assert all(find_induced_copy(h, C4) is not None for h in pats)


def test_crosscheck_examples(twins6):
    rep = crosscheck(star_graph(3))
    assert rep.def_arb and rep.tree_arb and rep.mismatches == []
    rep = crosscheck(GEM)
    assert not rep.treelike and not rep.def_darb and not rep.tree_darb
    assert rep.mismatches == []
    rep = crosscheck(twins6)
    assert rep.treelike and not rep.def_darb and not rep.tree_darb
    assert rep.mismatches == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_small_sweeps_are_clean(n):
    summary = sweep(n)
    assert summary.mismatches == []
