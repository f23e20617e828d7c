"""Extremal graph families: stars, windmills, walls, ladders."""
from __future__ import annotations

from .multigraph import MultiGraph


def star(r: int) -> MultiGraph:
    """S_r: center 0 joined to leaves 1..r."""
    if r < 1:
        raise ValueError("star needs r >= 1")
    return MultiGraph(range(r + 1), [(0, i) for i in range(1, r + 1)])


def windmill(r: int) -> MultiGraph:
    """W_r: r triangles sharing center 0; 2r+1 vertices, 3r edges."""
    if r < 1:
        raise ValueError("windmill needs r >= 1")
    g = MultiGraph([0])
    for i in range(r):
        a, b = 2 * i + 1, 2 * i + 2
        g.add_edge(0, a)
        g.add_edge(0, b)
        g.add_edge(a, b)
    return g


def wall(r: int) -> MultiGraph:
    """r x r grid with every second vertical edge removed.

    Vertex (row i, col j) has id i*r + j, 0-based. All horizontal edges are
    kept; the vertical edge below (i, j) is kept iff i + j is even, which
    anchors the first row's surviving verticals at odd 1-based columns.
    """
    if r < 2:
        raise ValueError("wall needs r >= 2")
    g = MultiGraph(range(r * r))
    for i in range(r):
        for j in range(r - 1):
            g.add_edge(i * r + j, i * r + j + 1)
    for i in range(r - 1):
        for j in range(r):
            if (i + j) % 2 == 0:
                g.add_edge(i * r + j, (i + 1) * r + j)
    return g


def ladder(rungs: int) -> MultiGraph:
    """2 x rungs grid. Top rail 0..rungs-1, bottom rail rungs..2*rungs-1.

    The distinguished spanning tree (full top rail plus all rungs) is
    recorded in meta["spanning_tree"] as a list of normalized edges.
    """
    if rungs < 2:
        raise ValueError("ladder needs at least 2 rungs")
    g = MultiGraph(range(2 * rungs))
    tree = []
    for i in range(rungs - 1):
        g.add_edge(i, i + 1)
        tree.append((i, i + 1))
        g.add_edge(rungs + i, rungs + i + 1)
    for i in range(rungs):
        g.add_edge(i, rungs + i)
        tree.append((i, rungs + i))
    g.meta["spanning_tree"] = tree
    return g


_FAMILIES = {"star": star, "windmill": windmill, "wall": wall, "ladder": ladder}


def make_family(kind: str, r: int) -> MultiGraph:
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}, pick from {sorted(_FAMILIES)}")
    return _FAMILIES[kind](r)
