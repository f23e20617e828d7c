import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecuts.decomposition import TreeCutDecomposition
from treecuts.ecw import SpanningWitness, validate_witness
from treecuts.formats import (
    decomposition_to_dot,
    decomposition_to_json,
    graph_to_dot,
    load_graph,
    parse_decomposition_json,
    parse_edge_list,
    parse_witness_json,
    witness_to_dot,
    witness_to_json,
    write_edge_list,
)
from treecuts.multigraph import MultiGraph

from conftest import graph_key, random_connected_multi


SAMPLE = """# ring with a chord and a doubled edge
4 6
0 1
1 2
2 3
0 3
0 2
0 2
"""


def test_parse_edge_list_basics():
    g = parse_edge_list(SAMPLE)
    assert g.num_vertices() == 4
    assert g.num_edges() == 6
    assert g.multiplicity(0, 2) == 2


def test_edge_list_round_trip():
    g = parse_edge_list(SAMPLE)
    text = write_edge_list(g)
    assert graph_key(parse_edge_list(text)) == graph_key(g)
    # canonical writer is a fixed point
    assert write_edge_list(parse_edge_list(text)) == text


def test_parse_edge_list_rejects():
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("2\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("2 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("2 1\n0 5\n")
    with pytest.raises(ValueError):
        parse_edge_list("2 1\n0 x\n")


def test_decomposition_json_round_trip():
    d = TreeCutDecomposition(
        0, {0: None, 1: 0, 2: 0, 3: 1}, {0: {0}, 1: {1, 2}, 2: set(), 3: {3}}
    )
    text = decomposition_to_json(d)
    back = parse_decomposition_json(text)
    assert back.root == d.root
    assert back.parent == d.parent
    assert back.bags == d.bags
    # emitted artifact re-parses byte for byte
    assert decomposition_to_json(back) == text


def test_decomposition_json_rejects():
    with pytest.raises(ValueError):
        parse_decomposition_json("not json")
    with pytest.raises(ValueError):
        parse_decomposition_json('{"nodes": []}')
    with pytest.raises(ValueError):
        parse_decomposition_json(
            '{"root": 0, "nodes": [{"id": 0, "parent": null, "bag": ["a"]}]}'
        )
    with pytest.raises(ValueError):
        parse_decomposition_json(
            '{"root": 0, "nodes": [{"id": 0, "parent": null, "bag": []},'
            ' {"id": 0, "parent": 0, "bag": []}]}'
        )


def test_witness_json_round_trip():
    base = MultiGraph(range(3), [(0, 1), (1, 2), (0, 2)])
    host = base.copy()
    host.add_vertex(9)
    host.add_edge(1, 9)
    w = SpanningWitness(base, host, frozenset({(0, 1), (1, 2), (1, 9)}))
    assert validate_witness(w) == []
    text = witness_to_json(w)
    back = parse_witness_json(text)
    assert graph_key(back.base_graph) == graph_key(base)
    assert graph_key(back.host) == graph_key(host)
    assert back.forest == w.forest
    assert witness_to_json(back) == text


def test_witness_json_rejects():
    with pytest.raises(ValueError):
        parse_witness_json("[1, 2]")
    with pytest.raises(ValueError):
        parse_witness_json(
            '{"graph_vertices": [0], "ghost_vertices": [0], "edges": [],'
            ' "tree_edges": []}'
        )
    with pytest.raises(ValueError):
        parse_witness_json(
            '{"graph_vertices": [0, 1], "ghost_vertices": [2],'
            ' "edges": [{"u": 0, "v": 2, "ghost": false}], "tree_edges": []}'
        )


def test_load_graph_detects_formats():
    g = load_graph(SAMPLE)
    assert g.num_edges() == 6
    base = MultiGraph(range(2), [(0, 1)])
    w = SpanningWitness(base, base.copy(), frozenset({(0, 1)}))
    g2 = load_graph(witness_to_json(w))
    assert graph_key(g2) == graph_key(base)
    d = TreeCutDecomposition(0, {0: None}, {0: {0, 1}})
    with pytest.raises(ValueError):
        load_graph(decomposition_to_json(d))


def test_dot_outputs():
    g = MultiGraph(range(3), [(0, 1), (1, 2)])
    dot = graph_to_dot(g)
    assert dot.startswith("graph G {") and "0 -- 1;" in dot

    host = g.copy()
    host.add_vertex(7)
    host.add_edge(0, 7)
    w = SpanningWitness(g, host, frozenset({(0, 1), (1, 2), (0, 7)}))
    wd = witness_to_dot(w)
    assert "penwidth=2" in wd  # tree edges styled distinctly
    assert "style=dashed" in wd  # ghosts dashed
    assert 'label="ghost"' in wd

    d = TreeCutDecomposition(0, {0: None, 1: 0}, {0: {0, 1}, 1: {2}})
    dd = decomposition_to_dot(d)
    assert "n0 -- n1;" in dd and "shape=box" in dd


@given(st.integers(0, 2**31))
@settings(max_examples=40, deadline=None)
def test_edge_list_round_trip_random(seed):
    rng = random.Random(seed)
    g = random_connected_multi(rng, rng.randint(1, 7), rng.randint(0, 5), loops=True)
    text = write_edge_list(g)
    assert graph_key(parse_edge_list(text)) == graph_key(g)
    assert write_edge_list(parse_edge_list(text)) == text


@given(st.integers(0, 2**31))
@settings(max_examples=40, deadline=None)
def test_decomposition_json_round_trip_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    parent = {0: None}
    for t in range(1, n):
        parent[t] = rng.randrange(t)
    bags = {t: set() for t in range(n)}
    for v in range(rng.randint(0, 8)):
        bags[rng.randrange(n)].add(v)
    d = TreeCutDecomposition(0, parent, bags)
    text = decomposition_to_json(d)
    back = parse_decomposition_json(text)
    assert (back.root, back.parent, back.bags) == (d.root, d.parent, d.bags)
    assert decomposition_to_json(back) == text
