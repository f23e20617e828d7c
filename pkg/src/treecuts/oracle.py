"""Exhaustive exact width computation on tiny graphs.

The ground-truth engine behind every property test and every audit of the
approximation pipeline. Feasibility of a width bound is decided by a
memoized recursion over vertex subsets: a subtree of the decomposition is
determined, up to everything the width cares about, by the set of
vertices it covers, so subtrees can be searched independently of the tree
shape around them.
"""
from __future__ import annotations

import math

from .decomposition import TreeCutDecomposition, center, consolidate
from .multigraph import MultiGraph

VARIANT_LEVEL = {"tcw": 3, "stcw": 2, "tcw0": 1}

INF = math.inf


class SizeLimitError(ValueError):
    """The graph is too large for exhaustive search."""


def exact_width(
    g: MultiGraph,
    variant: str,
    empty_budget: int = 2,
    max_vertices: int = 6,
) -> tuple[int, TreeCutDecomposition]:
    """Exact tcw / stcw / tcw0 with an achieving decomposition.

    Searches all rooted decompositions using at most empty_budget empty
    bags, after two harmless normalizations: leaves always have non-empty
    bags, and no empty-bag node has exactly one child (contracting such a
    node onto its child never increases any width). Exactness is relative
    to the budget; all bounds checked elsewhere in the suite are one-sided
    and survive under-budgeting. The returned decomposition is the first
    optimum in a fixed deterministic enumeration order (bags by size then
    lexicographic order, child parts smallest-first).
    """
    if variant not in VARIANT_LEVEL:
        raise ValueError(f"variant must be one of {sorted(VARIANT_LEVEL)}")
    if empty_budget < 0:
        raise ValueError("empty_budget must be non-negative")
    n = g.num_vertices()
    if n > max_vertices:
        raise SizeLimitError(f"{n} vertices exceed the search limit {max_vertices}")
    if n == 0:
        return 0, TreeCutDecomposition(0, {0: None}, {0: set()})
    level = VARIANT_LEVEL[variant]
    for w in range(1, n + 1):
        plan = _Search(g, level, w, empty_budget).run()
        if plan is not None:
            return w, plan
    raise AssertionError("single-node decomposition must succeed at w = n")


class _Search:
    """Feasibility search for one width bound.

    _min_empties(y) is the least number of empty bags any valid subtree
    covering exactly y can use, or infinity; the subtree's top node is
    charged its torso-center size and every node below is checked
    recursively. Adhesion of the top node is the caller's responsibility
    (the root has adhesion 0 by definition, matching its empty cut).
    """

    def __init__(self, g: MultiGraph, level: int, wmax: int, budget: int):
        self.g = g
        self.level = level
        self.wmax = wmax
        self.budget = budget
        self.all = frozenset(g.vertices())
        self.memo: dict[frozenset, float] = {}
        self.choice: dict[frozenset, tuple[frozenset, tuple[frozenset, ...]]] = {}
        self.cut_memo: dict[frozenset, int] = {}

    def run(self) -> TreeCutDecomposition | None:
        if self._min_empties(self.all) > self.budget:
            return None
        parent: dict[int, int | None] = {}
        bags: dict[int, set[int]] = {}
        counter = 0

        def build(y: frozenset, par: int | None) -> None:
            nonlocal counter
            me = counter
            counter += 1
            x, parts = self.choice[y]
            parent[me] = par
            bags[me] = set(x)
            for p in parts:
                build(p, me)

        build(self.all, None)
        return TreeCutDecomposition(0, parent, bags)

    def _cut(self, part: frozenset) -> int:
        if part not in self.cut_memo:
            self.cut_memo[part] = self.g.cut_size(set(part))
        return self.cut_memo[part]

    def _torso_ok(self, y: frozenset, x: frozenset, parts) -> bool:
        groups = [set(p) for p in parts]
        up = self.all - y
        if up:
            groups.append(set(up))
        h = consolidate(self.g, set(x), groups)
        return center(h, set(x), self.level).num_vertices() <= self.wmax

    def _min_empties(self, y: frozenset) -> float:
        if y in self.memo:
            return self.memo[y]
        # in-progress marker; prunes the degenerate partition whose single
        # part is y itself (only reachable via an empty bag, disallowed anyway)
        self.memo[y] = INF
        best: float = INF
        best_choice = None
        for x in _subsets_by_size(y):
            own = 0 if x else 1
            if own > self.budget:
                continue
            rest = y - x
            if not rest:
                if x and self._torso_ok(y, x, ()):
                    best, best_choice = 0, (x, ())
                    break
                continue
            for parts, cost in self._partitions(rest, self.budget - own):
                if not x and len(parts) < 2:
                    continue
                total = own + cost
                if total < best and self._torso_ok(y, x, parts):
                    best, best_choice = total, (x, parts)
                    if best == 0:
                        break
            if best == 0:
                break
        self.memo[y] = best
        if best_choice is not None:
            self.choice[y] = best_choice
        return best

    def _partitions(self, rest: frozenset, cap: float):
        """Partitions of rest whose every part respects the adhesion bound
        and is itself feasible; yields (parts, summed empty-bag cost)."""

        def grow(remaining: frozenset, acc: tuple, cost: int):
            if not remaining:
                yield acc, cost
                return
            pivot = min(remaining)
            others = sorted(remaining - {pivot})
            for mask in range(1 << len(others)):
                part = frozenset(
                    [pivot] + [others[i] for i in range(len(others)) if mask >> i & 1]
                )
                if self._cut(part) > self.wmax:
                    continue
                c = self._min_empties(part)
                if cost + c > cap:
                    continue
                yield from grow(remaining - part, acc + (part,), int(cost + c))

        yield from grow(rest, (), 0)


def _subsets_by_size(y: frozenset):
    items = sorted(y)
    by_size: list[list[frozenset]] = [[] for _ in range(len(items) + 1)]
    for mask in range(1 << len(items)):
        s = frozenset(items[i] for i in range(len(items)) if mask >> i & 1)
        by_size[len(s)].append(s)
    for bucket in by_size:
        for s in sorted(bucket, key=sorted):
            yield s


def exact_treewidth(g: MultiGraph, max_vertices: int = 14) -> int:
    """Minimum over elimination orderings of the maximum back-degree.

    Parallel edges and loops are irrelevant to treewidth and ignored.
    Returns 0 for graphs with at most one vertex.
    """
    n = g.num_vertices()
    if n > max_vertices:
        raise SizeLimitError(f"{n} vertices exceed the search limit {max_vertices}")
    if n <= 1:
        return 0
    vs = g.sorted_vertices()
    adj = {v: set(g.neighbors(v)) for v in vs}

    def backdeg(v: int, through: frozenset) -> int:
        seen = {v}
        stack = [v]
        out = set()
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen:
                    continue
                seen.add(w)
                if w in through:
                    stack.append(w)
                else:
                    out.add(w)
        return len(out)

    memo: dict[frozenset, int] = {frozenset(): 0}
    subsets_by_size: list[list[frozenset]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        s = frozenset(vs[i] for i in range(n) if mask >> i & 1)
        subsets_by_size[len(s)].append(s)
    for size in range(1, n + 1):
        for s in subsets_by_size[size]:
            memo[s] = min(
                max(memo[s - {v}], backdeg(v, s - {v})) for v in s
            )
    return memo[frozenset(vs)]
