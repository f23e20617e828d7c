"""Edge-cut width: local feedback sets, exact search, sec upper bounds.

A spanning witness is a host multigraph H containing the base graph
together with a maximal spanning forest T of H. Each non-forest edge
charges every vertex on its forest path (endpoints included); the
edge-cut width of (H, T) is one plus the largest charge. Host elements
absent from the base graph are ghosts.
"""
from __future__ import annotations

from dataclasses import dataclass

from .multigraph import MultiGraph

EdgePair = tuple[int, int]


class BudgetExceededError(RuntimeError):
    """Enumeration would visit more spanning trees than the budget allows."""


def _norm(u: int, v: int) -> EdgePair:
    return (u, v) if u <= v else (v, u)


@dataclass
class SpanningWitness:
    base_graph: MultiGraph
    host: MultiGraph
    forest: frozenset[EdgePair]

    def ghost_vertices(self) -> set[int]:
        return self.host.vertices() - self.base_graph.vertices()

    def ghost_edge_count(self, u: int, v: int) -> int:
        """How many copies of host edge (u, v) are not base edges."""
        return self.host.multiplicity(u, v) - self.base_graph.multiplicity(u, v)


def validate_witness(w: SpanningWitness) -> list[str]:
    out = []
    if not w.base_graph.vertices() <= w.host.vertices():
        missing = sorted(w.base_graph.vertices() - w.host.vertices())
        out.append(f"host misses base vertices {missing}")
    for u, v, m in w.base_graph.edge_pairs():
        if w.host.multiplicity(u, v) < m:
            out.append(f"host carries fewer copies of edge ({u},{v}) than the base")
    for u, v in sorted(w.forest):
        if u == v:
            out.append(f"forest contains loop ({u},{v})")
        elif w.host.multiplicity(u, v) == 0:
            out.append(f"forest edge ({u},{v}) is not a host edge")
    if out:
        return out
    # acyclic and maximal: one forest component per host component
    f = MultiGraph(w.host.vertices())
    for u, v in w.forest:
        f.add_edge(u, v)
    if f.num_edges() != len(w.forest):
        out.append("forest edge set is inconsistent")
    n = w.host.num_vertices()
    host_comps = len(w.host.components())
    if len(w.forest) != n - host_comps or len(f.components()) != host_comps:
        out.append("forest is not a maximal spanning forest of the host")
    return out


def _forest_paths(
    host: MultiGraph, forest: frozenset[EdgePair] | set[EdgePair]
) -> tuple[dict[int, int | None], dict[int, int]]:
    """Parent and depth maps, rooting each forest component at its least vertex."""
    adj: dict[int, list[int]] = {v: [] for v in host.vertices()}
    for u, v in forest:
        adj[u].append(v)
        adj[v].append(u)
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for r in host.sorted_vertices():
        if r in parent:
            continue
        parent[r] = None
        depth[r] = 0
        stack = [r]
        while stack:
            u = stack.pop()
            for x in adj[u]:
                if x not in parent:
                    parent[x] = u
                    depth[x] = depth[u] + 1
                    stack.append(x)
    return parent, depth


def _path_vertices(parent, depth, u: int, v: int) -> set[int]:
    """Vertices on the forest path between u and v, endpoints included."""
    path = {u, v}
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        path.add(a)
    while depth[b] > depth[a]:
        b = parent[b]
        path.add(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        path.add(a)
        path.add(b)
    return path


def _charges(host: MultiGraph, forest) -> dict[int, int]:
    """Per-vertex count of non-forest edge copies whose path crosses it."""
    parent, depth = _forest_paths(host, forest)
    charge = {v: 0 for v in host.vertices()}
    fset = set(forest)
    for u, v, m in host.edge_pairs():
        copies = m if u == v else m - (1 if (u, v) in fset else 0)
        if copies <= 0:
            continue
        for x in _path_vertices(parent, depth, u, v):
            charge[x] += copies
    return charge


def local_feedback_set(
    h: MultiGraph, t: frozenset[EdgePair] | set[EdgePair], v: int
) -> set[tuple[int, int, int]]:
    """Non-forest edge copies of h whose forest path contains v.

    Copies are tokens (u, w, i) with u <= w; for a pair of multiplicity m,
    copy 0 is the forest edge when (u, w) is in t, so tokens run over the
    remaining indices. A loop's path is its single endpoint.
    """
    if not h.has_vertex(v):
        raise KeyError(f"vertex {v} not in host")
    parent, depth = _forest_paths(h, t)
    fset = set(t)
    out = set()
    for u, w, m in h.edge_pairs():
        start = 0 if u == w or (u, w) not in fset else 1
        if start >= m:
            continue
        if v in _path_vertices(parent, depth, u, w):
            out.update((u, w, i) for i in range(start, m))
    return out


def ecw_value(h: MultiGraph, t: frozenset[EdgePair] | set[EdgePair]) -> int:
    """1 + max vertex charge; 0 for the empty graph by convention."""
    if h.num_vertices() == 0:
        return 0
    return 1 + max(_charges(h, t).values())


def witness_ecw(w: SpanningWitness) -> int:
    return ecw_value(w.host, w.forest)


def feedback_edge_number(g: MultiGraph) -> int:
    return g.num_edges() - g.num_vertices() + len(g.components())


def _det_int(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning forests maximal in g, counting parallel copies
    as distinct (matrix-tree theorem per component; loops ignored)."""
    total = 1
    for comp in g.components():
        vs = sorted(comp)
        if len(vs) == 1:
            continue
        idx = {v: i for i, v in enumerate(vs)}
        n = len(vs)
        lap = [[0] * n for _ in range(n)]
        for u, v, m in g.induced(comp).edge_pairs():
            if u == v:
                continue
            iu, iv = idx[u], idx[v]
            lap[iu][iu] += m
            lap[iv][iv] += m
            lap[iu][iv] -= m
            lap[iv][iu] -= m
        minor = [row[1:] for row in lap[1:]]
        total *= _det_int(minor)
    return total


class _DSU:
    def __init__(self, vs):
        self.p = {v: v for v in vs}

    def find(self, v):
        while self.p[v] != v:
            self.p[v] = self.p[self.p[v]]
            v = self.p[v]
        return v

    def union(self, u, v):
        self.p[self.find(u)] = self.find(v)

    def snapshot(self):
        return dict(self.p)

    def restore(self, snap):
        self.p = dict(snap)


def exact_ecw(g: MultiGraph, budget: int = 10**6) -> tuple[int, SpanningWitness]:
    """Minimum edge-cut width of g over its own maximal spanning forests.

    No ghosts are introduced, so this is ecw(g) exactly. The achieving
    forest is the lexicographically least among the optima (the
    include-before-exclude recursion over lex-sorted edge pairs visits
    forests in lexicographic order of their sorted edge tuples).
    """
    if g.num_vertices() == 0:
        return 0, SpanningWitness(g.copy(), g.copy(), frozenset())
    count = spanning_tree_count(g)
    if count > budget:
        raise BudgetExceededError(
            f"{count} spanning trees exceed the enumeration budget {budget}"
        )
    pairs = sorted((u, v) for u, v, _ in g.edge_pairs() if u != v)
    needed = g.num_vertices() - len(g.components())
    best_val: int | None = None
    best_forest: tuple[EdgePair, ...] | None = None
    dsu = _DSU(g.vertices())
    chosen: list[EdgePair] = []

    def rec(i: int):
        nonlocal best_val, best_forest
        if len(chosen) == needed:
            val = ecw_value(g, set(chosen))
            if best_val is None or val < best_val:
                best_val = val
                best_forest = tuple(chosen)
            return
        if len(pairs) - i < needed - len(chosen):
            return
        u, v = pairs[i]
        if dsu.find(u) != dsu.find(v):
            snap = dsu.snapshot()
            dsu.union(u, v)
            chosen.append((u, v))
            rec(i + 1)
            chosen.pop()
            dsu.restore(snap)
        rec(i + 1)

    rec(0)
    assert best_val is not None and best_forest is not None
    return best_val, SpanningWitness(g.copy(), g.copy(), frozenset(best_forest))


def _dfs_forest(g: MultiGraph) -> frozenset[EdgePair]:
    seen: set[int] = set()
    forest: set[EdgePair] = set()
    for r in g.sorted_vertices():
        if r in seen:
            continue
        stack = [r]
        seen.add(r)
        while stack:
            u = stack.pop()
            for x in sorted(g.neighbors(u)):
                if x not in seen:
                    seen.add(x)
                    forest.add(_norm(u, x))
                    stack.append(x)
    return frozenset(forest)


def sec_upper(
    g: MultiGraph,
    d_opt=None,
    budget: int = 10**6,
) -> tuple[int, SpanningWitness]:
    """Upper bound on super edge-cut width, with the witness achieving it.

    Candidates: the exact ecw forest of g itself (any such witness also
    bounds sec), and the witness built from a slim-width-optimal tree-cut
    decomposition (supplied, or oracle-found when g is small enough).
    Falls back to a plain DFS forest if neither route is available.
    """
    candidates: list[tuple[int, SpanningWitness]] = []
    try:
        candidates.append(exact_ecw(g, budget))
    except BudgetExceededError:
        pass
    d = d_opt
    if d is None:
        from .oracle import SizeLimitError, exact_width

        try:
            _, d = exact_width(g, "stcw")
        except SizeLimitError:
            d = None
    if d is not None:
        from .transform import decomposition_to_witness

        w = decomposition_to_witness(g, d)
        candidates.append((witness_ecw(w), w))
    if not candidates:
        forest = _dfs_forest(g)
        candidates.append((ecw_value(g, forest), SpanningWitness(g.copy(), g.copy(), forest)))
    return min(candidates, key=lambda c: c[0])
