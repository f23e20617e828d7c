"""Tree-cut decompositions and their width evaluators.

A decomposition is a rooted tree whose nodes carry bags forming a
near-partition of the graph's vertices (empty bags allowed). All width
notions reduce to two per-node quantities: the adhesion (edges crossing
the cut below the node) and the size of a center of the node's torso,
where the torso consolidates every other subtree into a single vertex
and the center prunes it at one of three levels.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import MultiGraph


class InvalidDecompositionError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass
class TreeCutDecomposition:
    root: int
    parent: dict[int, int | None]  # node -> parent, root -> None
    bags: dict[int, set[int]]

    def nodes(self) -> list[int]:
        return sorted(self.parent.keys())

    def children(self, t: int) -> list[int]:
        return sorted(s for s, p in self.parent.items() if p == t)

    def children_map(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {t: [] for t in self.parent}
        for s in sorted(self.parent):
            p = self.parent[s]
            if p is not None:
                ch[p].append(s)
        return ch

    def subtree_nodes(self, t: int) -> list[int]:
        ch = self.children_map()
        out = []
        stack = [t]
        while stack:
            s = stack.pop()
            out.append(s)
            stack.extend(ch[s])
        return sorted(out)

    def subtree_vertices(self, t: int) -> set[int]:
        """Y_t: union of bags over the subtree rooted at t."""
        out: set[int] = set()
        for s in self.subtree_nodes(t):
            out |= self.bags[s]
        return out

    def depth(self, t: int) -> int:
        d = 0
        cur = self.parent[t]
        while cur is not None:
            d += 1
            cur = self.parent[cur]
        return d

    def copy(self) -> "TreeCutDecomposition":
        return TreeCutDecomposition(
            self.root, dict(self.parent), {t: set(b) for t, b in self.bags.items()}
        )

    def fresh_node_id(self) -> int:
        return max(self.parent, default=-1) + 1


def singleton_decomposition(g: MultiGraph) -> TreeCutDecomposition:
    """One node holding all of V(g); the trivial decomposition."""
    return TreeCutDecomposition(0, {0: None}, {0: set(g.vertices())})


def validate(d: TreeCutDecomposition, g: MultiGraph) -> list[str]:
    """Empty list means valid; otherwise one message per violated clause."""
    out = []
    if d.root not in d.parent:
        return [f"root {d.root} is not a node"]
    if d.parent.get(d.root) is not None:
        out.append("root has a parent")
    if set(d.parent) != set(d.bags):
        out.append("bag map and parent map disagree on the node set")
        return out
    for t, p in d.parent.items():
        if p is not None and p not in d.parent:
            out.append(f"node {t} has unknown parent {p}")
            return out
    # every node must reach the root, which also rules out cycles
    for t in d.parent:
        seen = set()
        cur: int | None = t
        while cur is not None and cur not in seen:
            seen.add(cur)
            cur = d.parent[cur]
        if cur is not None or d.root not in seen:
            out.append(f"node {t} does not reach the root")
            return out
    gv = g.vertices()
    covered: set[int] = set()
    for t in sorted(d.bags):
        bag = d.bags[t]
        if not bag <= gv:
            out.append(f"bag of node {t} contains non-graph vertices {sorted(bag - gv)}")
        overlap = bag & covered
        if overlap:
            out.append(f"bags not disjoint: {sorted(overlap)} repeated at node {t}")
        covered |= bag
    if covered != gv:
        out.append(f"bag union misses vertices {sorted(gv - covered)}")
    return out


def adhesion(d: TreeCutDecomposition, g: MultiGraph, t: int) -> int:
    """Edges of g crossing the cut below t, with multiplicity; 0 at the root."""
    if t not in d.parent:
        raise KeyError(f"unknown node {t}")
    if t == d.root:
        return 0
    return g.cut_size(d.subtree_vertices(t))


def consolidate(
    g: MultiGraph, bag: set[int], parts: list[set[int]]
) -> MultiGraph:
    """Shrink each part to a single fresh vertex, keeping only edges that
    leave it; bag vertices stay as themselves. Empty parts yield nothing.
    Loops survive only on bag vertices. Fresh ids start above g's range;
    part i maps to meta["part_vertex"][i] (None when the part was empty).
    """
    part_of: dict[int, int] = {}
    part_vertex: list[int | None] = []
    nxt = max(g.vertices(), default=-1) + 1
    for part in parts:
        if not part:
            part_vertex.append(None)
            continue
        for v in part:
            part_of[v] = nxt
        part_vertex.append(nxt)
        nxt += 1
    h = MultiGraph(bag)
    for z in set(part_of.values()):
        h.add_vertex(z)
    for u, v, m in g.edge_pairs():
        mu = part_of.get(u, u)
        mv = part_of.get(v, v)
        if u == v:
            if u in bag:
                h.add_edge(u, u, m)
        elif mu != mv:
            h.add_edge(mu, mv, m)
    h.meta["part_vertex"] = part_vertex
    return h


def torso(d: TreeCutDecomposition, g: MultiGraph, t: int) -> MultiGraph:
    """Torso H_t: every component of T - t consolidated into one vertex.

    Consolidation keeps only edges leaving each consolidated part, so no
    self-loops arise from it (loops already sitting on bag vertices stay).
    Consolidation vertices get fresh ids above g's id range; meta
    ["consolidation"] maps each one to the child node it stands for, or to
    None for the part containing the parent.
    """
    if t not in d.parent:
        raise KeyError(f"unknown node {t}")
    bag = d.bags[t]
    children = d.children(t)
    parts = [d.subtree_vertices(b) for b in children]
    labels: list[int | None] = list(children)
    if t != d.root:
        parts.append(g.vertices() - d.subtree_vertices(t))
        labels.append(None)
    h = consolidate(g, bag, parts)
    origin: dict[int, int | None] = {}
    for label, z in zip(labels, h.meta.pop("part_vertex")):
        if z is not None:
            origin[z] = label
    h.meta["consolidation"] = origin
    return h


def center(h: MultiGraph, x: set[int], level: int) -> MultiGraph:
    """Prune (h, x) at the given level; x-vertices are never touched.

    level 1: delete isolated non-x vertices.
    level 2: exhaustively delete non-x vertices of degree <= 1.
    level 3: exhaustively suppress non-x vertices of degree <= 2
             (suppression joins the two neighbors; two parallel edges
             collapse to a loop on the surviving neighbor).

    The result is unique; processing ascends vertex ids for reproducibility.
    """
    if level not in (1, 2, 3):
        raise ValueError(f"level must be 1, 2 or 3, got {level}")
    out = h.copy()
    changed = True
    while changed:
        changed = False
        for v in out.sorted_vertices():
            if v in x:
                continue
            deg = out.degree(v)
            if level == 1:
                if deg == 0:
                    out.remove_vertex(v)
                    changed = True
                    break
            elif level == 2:
                if deg <= 1:
                    out.remove_vertex(v)
                    changed = True
                    break
            else:
                if deg <= 1 or (deg == 2 and out.loops(v)):
                    out.remove_vertex(v)
                    changed = True
                    break
                if deg == 2:
                    nbrs = sorted(out.neighbors(v))
                    out.remove_vertex(v)
                    if len(nbrs) == 2:
                        out.add_edge(nbrs[0], nbrs[1])
                    else:
                        out.add_edge(nbrs[0], nbrs[0])
                    changed = True
                    break
    return out


@dataclass
class NodeStats:
    adhesion: int
    tor: int
    tor2: int
    tor1: int
    thin: bool
    children_A: frozenset[int]
    children_B: frozenset[int]
    children_B2: frozenset[int]
    b2_lower_bound: int | None = None  # tor2 - 3k - 2 when a width hint is given


def node_stats(
    d: TreeCutDecomposition, g: MultiGraph, t: int, k_hint: int | None = None
) -> NodeStats:
    if t not in d.parent:
        raise KeyError(f"unknown node {t}")
    h = torso(d, g, t)
    bag = d.bags[t]
    adh = adhesion(d, g, t)
    tor = center(h, bag, 3).num_vertices()
    tor2 = center(h, bag, 2).num_vertices()
    tor1 = center(h, bag, 1).num_vertices()
    a_set, b_set, b2_set = set(), set(), set()
    for b in d.children(t):
        yb = d.subtree_vertices(b)
        nb = g.neighborhood(yb)
        if len(nb) <= 2 and nb <= bag:
            b_set.add(b)
            if g.cut_size(yb) == 2:
                b2_set.add(b)
        else:
            a_set.add(b)
    bound = None if k_hint is None else tor2 - 3 * k_hint - 2
    return NodeStats(
        adhesion=adh,
        tor=tor,
        tor2=tor2,
        tor1=tor1,
        thin=adh <= 2,
        children_A=frozenset(a_set),
        children_B=frozenset(b_set),
        children_B2=frozenset(b2_set),
        b2_lower_bound=bound,
    )


@dataclass
class WidthReport:
    width: int
    slim_width: int
    zero_width: int
    per_node: dict[int, NodeStats]


def width_report(d: TreeCutDecomposition, g: MultiGraph) -> WidthReport:
    violations = validate(d, g)
    if violations:
        raise InvalidDecompositionError(violations)
    per = {t: node_stats(d, g, t) for t in d.nodes()}
    width = max((max(s.adhesion, s.tor) for s in per.values()), default=0)
    slim = max((max(s.adhesion, s.tor2) for s in per.values()), default=0)
    zero = max((max(s.adhesion, s.tor1) for s in per.values()), default=0)
    return WidthReport(width=width, slim_width=slim, zero_width=zero, per_node=per)


def is_nice(d: TreeCutDecomposition, g: MultiGraph) -> list[int]:
    """Node ids of thin nodes whose Y_t neighbors a sibling subtree."""
    bad = []
    for t in d.nodes():
        p = d.parent[t]
        if p is None:
            continue
        if adhesion(d, g, t) > 2:
            continue
        nbr = g.neighborhood(d.subtree_vertices(t))
        for s in d.children(p):
            if s != t and nbr & d.subtree_vertices(s):
                bad.append(t)
                break
    return bad


def decomposable_nodes(d: TreeCutDecomposition, g: MultiGraph) -> list[int]:
    """Nodes t in B_parent with adhesion 2 whose two cut edges enter
    different components of G[Y_t]."""
    out = []
    for t in d.nodes():
        p = d.parent[t]
        if p is None:
            continue
        yt = d.subtree_vertices(t)
        if g.cut_size(yt) != 2:
            continue
        nb = g.neighborhood(yt)
        if not (len(nb) <= 2 and nb <= d.bags[p]):
            continue
        inner = []
        for u, v, m in g.edge_pairs():
            if (u in yt) != (v in yt):
                inner.extend([u if u in yt else v] * m)
        comp_of: dict[int, int] = {}
        for i, comp in enumerate(g.induced(yt).components()):
            for v in comp:
                comp_of[v] = i
        if comp_of[inner[0]] != comp_of[inner[1]]:
            out.append(t)
    return out


def is_very_nice(d: TreeCutDecomposition, g: MultiGraph) -> list[int]:
    """Nice violations plus decomposable nodes; empty means very nice."""
    return sorted(set(is_nice(d, g)) | set(decomposable_nodes(d, g)))
