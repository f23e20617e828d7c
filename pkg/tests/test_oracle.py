import pytest

from treecuts.decomposition import validate, width_report
from treecuts.families import star, windmill
from treecuts.multigraph import MultiGraph
from treecuts.oracle import SizeLimitError, exact_treewidth, exact_width

from conftest import cached_width


def k2():
    return MultiGraph(range(2), [(0, 1)])


def path(n):
    return MultiGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return MultiGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def test_k2_all_variants():
    # suppression keeps a loop vertex alive in every one-vertex torso,
    # so the zero variant sees width 2 on a single edge
    g = k2()
    assert exact_width(g, "tcw")[0] == 1
    assert exact_width(g, "stcw")[0] == 1
    assert exact_width(g, "tcw0")[0] == 2


def test_small_fixed_values():
    assert cached_width(path(3), "tcw")[0] == 1
    assert cached_width(path(3), "stcw")[0] == 1
    assert cached_width(cycle(3), "tcw")[0] == 2
    assert cached_width(cycle(4), "tcw")[0] == 2
    # consolidated degree-2 vertices survive 2-centers, so slim is larger
    assert cached_width(cycle(4), "stcw")[0] == 3


def test_star_separates_variants():
    g = star(4)
    assert cached_width(g, "stcw")[0] == 1
    assert cached_width(g, "tcw0")[0] == 3


def test_windmill_values():
    g = windmill(2)
    assert cached_width(g, "tcw")[0] == 2
    assert cached_width(g, "stcw")[0] >= 2


def test_returned_decomposition_certifies_value():
    for g in (path(4), cycle(4), star(3), windmill(2)):
        for variant in ("tcw", "stcw", "tcw0"):
            val, d = exact_width(g, variant)
            assert validate(d, g) == []
            rep = width_report(d, g)
            got = {"tcw": rep.width, "stcw": rep.slim_width, "tcw0": rep.zero_width}
            assert got[variant] == val


def test_empty_and_edgeless():
    assert exact_width(MultiGraph(), "tcw")[0] == 0
    # a nonempty bag exists in any near-partition, so width is 1 not 0
    val, d = exact_width(MultiGraph(range(3)), "stcw")
    assert val == 1
    assert validate(d, MultiGraph(range(3))) == []


def test_disconnected_graph():
    g = MultiGraph(range(4), [(0, 1), (2, 3)])
    assert exact_width(g, "tcw")[0] == 1


def test_loops_and_parallels():
    g = MultiGraph(range(2), [(0, 1), (0, 1)])
    assert exact_width(g, "tcw")[0] == 2
    h = MultiGraph([0])
    h.add_edge(0, 0)
    val, d = exact_width(h, "tcw")
    assert val == 1
    assert validate(d, h) == []


def test_size_limit():
    g = path(7)
    with pytest.raises(SizeLimitError):
        exact_width(g, "tcw")
    assert exact_width(g, "tcw", max_vertices=7)[0] == 1


def test_bad_variant():
    with pytest.raises(ValueError):
        exact_width(k2(), "width")


def test_deterministic():
    g = cycle(4)
    v1, d1 = exact_width(g, "stcw")
    v2, d2 = exact_width(g, "stcw")
    assert v1 == v2
    assert d1.parent == d2.parent
    assert d1.bags == d2.bags


def test_empty_budget_matters_only_so_much():
    # a larger empty-bag budget can never report a larger width
    g = cycle(5)
    tight = exact_width(g, "stcw", empty_budget=0)[0]
    loose = exact_width(g, "stcw", empty_budget=3)[0]
    assert loose <= tight


def test_exact_treewidth_values():
    assert exact_treewidth(path(5)) == 1
    assert exact_treewidth(cycle(4)) == 2
    k4 = MultiGraph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert exact_treewidth(k4) == 3
    assert exact_treewidth(MultiGraph(range(2))) == 0
    with pytest.raises(SizeLimitError):
        exact_treewidth(path(20))


def test_exact_treewidth_ignores_multiedges():
    g = MultiGraph(range(3), [(0, 1), (1, 2), (0, 2), (0, 1)])
    g.add_edge(2, 2)
    assert exact_treewidth(g) == 2
