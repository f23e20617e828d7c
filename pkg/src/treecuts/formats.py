"""Text and JSON serialization: edge lists, decompositions, witnesses, DOT.

All writers are canonical (sorted, fixed key order) so that a parse
followed by a serialize reproduces the emitted artifact byte for byte.
"""
from __future__ import annotations

import json

from .decomposition import TreeCutDecomposition
from .ecw import SpanningWitness
from .multigraph import MultiGraph


def parse_edge_list(text: str) -> MultiGraph:
    """Header "n m", then m lines "u v" with 0-based ids; '#' starts a
    comment; repeated lines denote parallel edges."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ValueError("empty edge-list input")
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise ValueError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected header 'n m'") from None
    if n < 0 or m < 0:
        raise ValueError(f"line {lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    g = MultiGraph(range(n))
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range [0, {n})")
        g.add_edge(u, v)
    return g


def write_edge_list(g: MultiGraph) -> str:
    """Canonical edge-list text; vertices are relabeled to 0..n-1 by
    ascending id when not already in that form."""
    vs = g.sorted_vertices()
    relabel = {v: i for i, v in enumerate(vs)}
    lines = [f"{g.num_vertices()} {g.num_edges()}"]
    rows = []
    for u, v, m in g.edge_pairs():
        a, b = sorted((relabel[u], relabel[v]))
        rows.extend([(a, b)] * m)
    for a, b in sorted(rows):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def decomposition_to_json(d: TreeCutDecomposition) -> str:
    nodes = [
        {
            "id": t,
            "parent": d.parent[t],
            "bag": sorted(d.bags[t]),
        }
        for t in d.nodes()
    ]
    return json.dumps({"root": d.root, "nodes": nodes}, indent=2) + "\n"


def parse_decomposition_json(text: str) -> TreeCutDecomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from None
    if not isinstance(obj, dict) or "root" not in obj or "nodes" not in obj:
        raise ValueError('expected an object with "root" and "nodes"')
    parent: dict[int, int | None] = {}
    bags: dict[int, set[int]] = {}
    for entry in obj["nodes"]:
        if not isinstance(entry, dict) or not {"id", "parent", "bag"} <= set(entry):
            raise ValueError('each node needs "id", "parent" and "bag"')
        t = entry["id"]
        if not isinstance(t, int) or t in parent:
            raise ValueError(f"bad or duplicate node id {t!r}")
        p = entry["parent"]
        if p is not None and not isinstance(p, int):
            raise ValueError(f"bad parent for node {t}")
        if not isinstance(entry["bag"], list) or not all(
            isinstance(v, int) for v in entry["bag"]
        ):
            raise ValueError(f"bad bag for node {t}")
        parent[t] = p
        bags[t] = set(entry["bag"])
    if not isinstance(obj["root"], int):
        raise ValueError("bad root id")
    return TreeCutDecomposition(obj["root"], parent, bags)


def witness_to_json(w: SpanningWitness) -> str:
    edges = []
    for u, v, m in w.host.edge_pairs():
        base = w.base_graph.multiplicity(u, v)
        edges.extend([{"u": u, "v": v, "ghost": False}] * base)
        edges.extend([{"u": u, "v": v, "ghost": True}] * (m - base))
    edges.sort(key=lambda e: (e["u"], e["v"], e["ghost"]))
    obj = {
        "graph_vertices": sorted(w.base_graph.vertices()),
        "ghost_vertices": sorted(w.ghost_vertices()),
        "edges": edges,
        "tree_edges": sorted([u, v] for u, v in w.forest),
    }
    return json.dumps(obj, indent=2) + "\n"


def parse_witness_json(text: str) -> SpanningWitness:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from None
    keys = {"graph_vertices", "ghost_vertices", "edges", "tree_edges"}
    if not isinstance(obj, dict) or not keys <= set(obj):
        raise ValueError(f"expected an object with {sorted(keys)}")
    gv = obj["graph_vertices"]
    hv = obj["ghost_vertices"]
    if not all(isinstance(v, int) for v in gv + hv):
        raise ValueError("vertex lists must hold integers")
    if set(gv) & set(hv):
        raise ValueError("a vertex cannot be both real and ghost")
    base = MultiGraph(gv)
    host = MultiGraph(list(gv) + list(hv))
    for e in obj["edges"]:
        if not isinstance(e, dict) or not {"u", "v", "ghost"} <= set(e):
            raise ValueError('each edge needs "u", "v" and "ghost"')
        u, v, ghost = e["u"], e["v"], e["ghost"]
        if not host.has_vertex(u) or not host.has_vertex(v):
            raise ValueError(f"edge ({u},{v}) uses an unknown vertex")
        if not ghost:
            if not (base.has_vertex(u) and base.has_vertex(v)):
                raise ValueError(f"non-ghost edge ({u},{v}) touches a ghost vertex")
            base.add_edge(u, v)
        host.add_edge(u, v)
    forest = set()
    for pair in obj["tree_edges"]:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValueError("tree edges must be [u, v] pairs")
        u, v = pair
        forest.add((u, v) if u <= v else (v, u))
    return SpanningWitness(base, host, frozenset(forest))


def load_graph(text: str) -> MultiGraph:
    """Edge-list or witness JSON, detected by the leading byte; a witness
    yields its base graph."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        if isinstance(obj, dict) and "graph_vertices" in obj:
            return parse_witness_json(text).base_graph
        raise ValueError("JSON input is not a witness; cannot extract a graph")
    return parse_edge_list(text)


def graph_to_dot(g: MultiGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.sorted_vertices():
        lines.append(f"  {v};")
    rows = []
    for u, v, m in g.edge_pairs():
        rows.extend([(u, v)] * m)
    for u, v in sorted(rows):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def witness_to_dot(w: SpanningWitness, name: str = "W") -> str:
    """Host graph with forest edges drawn thick and ghosts dashed."""
    lines = [f"graph {name} {{"]
    ghosts = w.ghost_vertices()
    for v in sorted(w.host.vertices()):
        attr = ' [style=dashed, label="ghost"]' if v in ghosts else ""
        lines.append(f"  {v}{attr};")
    rows = []
    for u, v, m in w.host.edge_pairs():
        base = w.base_graph.multiplicity(u, v)
        tree = (u, v) in w.forest
        for i in range(m):
            is_tree = tree and i == 0
            is_ghost = i >= base
            rows.append((u, v, is_tree, is_ghost))
    for u, v, is_tree, is_ghost in sorted(rows):
        attrs = []
        if is_tree:
            attrs.append("penwidth=2")
        if is_ghost:
            attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_to_dot(d: TreeCutDecomposition, name: str = "D") -> str:
    lines = [f"graph {name} {{"]
    for t in d.nodes():
        bag = ",".join(str(v) for v in sorted(d.bags[t]))
        lines.append(f'  n{t} [label="{t}: {{{bag}}}", shape=box];')
    for t in d.nodes():
        p = d.parent[t]
        if p is not None:
            lines.append(f"  n{p} -- n{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"
