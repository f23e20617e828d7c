import random

import pytest

from treecuts.ecw import (
    BudgetExceededError,
    SpanningWitness,
    ecw_value,
    exact_ecw,
    feedback_edge_number,
    local_feedback_set,
    sec_upper,
    spanning_tree_count,
    validate_witness,
    witness_ecw,
)
from treecuts.families import ladder
from treecuts.multigraph import MultiGraph

from conftest import random_connected_multi


def c4():
    return MultiGraph(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)])


def k4():
    return MultiGraph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])


def test_spanning_tree_counts():
    assert spanning_tree_count(c4()) == 4
    assert spanning_tree_count(k4()) == 16
    # doubling an edge doubles the trees through it
    g = MultiGraph(range(2), [(0, 1), (0, 1)])
    assert spanning_tree_count(g) == 2
    # forests multiply across components
    h = MultiGraph(range(8))
    for u, v in c4().edges():
        h.add_edge(u, v)
    for u, v in c4().edges():
        h.add_edge(u + 4, v + 4)
    assert spanning_tree_count(h) == 16
    assert spanning_tree_count(MultiGraph([0])) == 1
    # loops never enter a forest
    g2 = MultiGraph(range(2), [(0, 1)])
    g2.add_edge(0, 0)
    assert spanning_tree_count(g2) == 1


def test_feedback_edge_number():
    assert feedback_edge_number(c4()) == 1
    assert feedback_edge_number(k4()) == 3
    g = MultiGraph(range(3), [(0, 1), (1, 2)])
    assert feedback_edge_number(g) == 0
    g.add_edge(0, 0)
    assert feedback_edge_number(g) == 1


def test_exact_ecw_c4():
    val, w = exact_ecw(c4())
    assert val == 2
    assert validate_witness(w) == []
    assert witness_ecw(w) == 2
    # deterministic lexicographically least optimal forest
    assert sorted(w.forest) == [(0, 1), (0, 3), (1, 2)]


def test_exact_ecw_k4_and_fen_cap():
    val, w = exact_ecw(k4())
    assert val <= feedback_edge_number(k4()) + 1
    assert val == 4
    assert validate_witness(w) == []


def test_exact_ecw_tree_is_one():
    g = MultiGraph(range(4), [(0, 1), (1, 2), (1, 3)])
    val, w = exact_ecw(g)
    assert val == 1
    assert set(w.forest) == {(0, 1), (1, 2), (1, 3)}


def test_exact_ecw_empty_and_disconnected():
    assert exact_ecw(MultiGraph())[0] == 0
    g = MultiGraph(range(4), [(0, 1), (2, 3)])
    val, w = exact_ecw(g)
    assert val == 1
    assert len(w.forest) == 2


def test_exact_ecw_budget():
    with pytest.raises(BudgetExceededError):
        exact_ecw(k4(), budget=10)


def test_local_feedback_set_endpoints_count():
    g = c4()
    forest = frozenset({(0, 1), (1, 2), (2, 3)})
    # non-forest edge 0-3 has forest path 0,1,2,3: every vertex charged
    for v in range(4):
        assert local_feedback_set(g, forest, v) == {(0, 3, 0)}
    assert ecw_value(g, forest) == 2


def test_local_feedback_loop_charges_its_vertex():
    g = MultiGraph(range(2), [(0, 1)])
    g.add_edge(1, 1)
    forest = frozenset({(0, 1)})
    assert local_feedback_set(g, forest, 1) == {(1, 1, 0)}
    assert local_feedback_set(g, forest, 0) == set()
    assert ecw_value(g, forest) == 2


def test_parallel_copies_charge_separately():
    g = MultiGraph(range(2), [(0, 1), (0, 1), (0, 1)])
    forest = frozenset({(0, 1)})
    assert local_feedback_set(g, forest, 0) == {(0, 1, 1), (0, 1, 2)}
    assert ecw_value(g, forest) == 3


def test_validate_witness_flags_problems():
    g = c4()
    # forest edge not in host
    w = SpanningWitness(base_graph=g, host=g.copy(), forest=frozenset({(0, 2)}))
    assert validate_witness(w)
    # not maximal: too few forest edges
    w2 = SpanningWitness(base_graph=g, host=g.copy(), forest=frozenset({(0, 1)}))
    assert any("maximal" in p or "spanning" in p for p in validate_witness(w2))
    # host missing a base edge
    h = MultiGraph(range(4), [(0, 1), (1, 2), (2, 3)])
    w3 = SpanningWitness(base_graph=g, host=h, forest=frozenset({(0, 1), (1, 2), (2, 3)}))
    assert validate_witness(w3)
    # cycle in claimed forest
    w4 = SpanningWitness(
        base_graph=g,
        host=g.copy(),
        forest=frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}),
    )
    assert validate_witness(w4)


def test_witness_with_ghosts_validates():
    g = MultiGraph(range(3), [(0, 1), (1, 2)])
    h = g.copy()
    h.add_vertex(3)
    h.add_edge(1, 3)
    w = SpanningWitness(
        base_graph=g, host=h, forest=frozenset({(0, 1), (1, 2), (1, 3)})
    )
    assert validate_witness(w) == []
    assert w.ghost_vertices() == {3}
    assert w.ghost_edge_count(1, 3) == 1
    assert w.ghost_edge_count(0, 1) == 0


def test_ladder_distinguished_tree_value():
    g = ladder(9)
    w = SpanningWitness(
        base_graph=g, host=g.copy(), forest=frozenset(g.meta["spanning_tree"])
    )
    assert validate_witness(w) == []
    assert witness_ecw(w) == 3


def test_sec_upper_is_sandwiched(corpus_small):
    for g in corpus_small:
        exact, _ = exact_ecw(g)
        up, w = sec_upper(g)
        assert validate_witness(w) == []
        assert up <= exact  # a supergraph witness may only improve
        assert up >= 1


def test_sec_upper_decomposition_route():
    # budget too small for enumeration: the bound must come from a
    # slim-optimal decomposition's witness instead
    up, w = sec_upper(k4(), budget=10)
    assert validate_witness(w) == []
    assert up >= 1


def test_sec_upper_dfs_fallback():
    from treecuts.families import wall

    g = wall(6)  # too many spanning trees, too large for the oracle
    up, w = sec_upper(g, budget=100)
    assert validate_witness(w) == []
    assert up <= feedback_edge_number(g) + 1


def test_random_agreement_forest_vs_recount():
    rng = random.Random(11)
    for _ in range(30):
        g = random_connected_multi(rng, rng.randint(2, 6), rng.randint(0, 4), loops=True)
        val, w = exact_ecw(g)
        assert validate_witness(w) == []
        assert witness_ecw(w) == val
        assert val <= feedback_edge_number(g) + 1
