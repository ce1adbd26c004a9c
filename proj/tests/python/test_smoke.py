import pytest

import antikit


def triangle():
    return antikit.OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])


def test_graph_and_profile():
    g = triangle()
    assert g.edges() == [(0, 1), (1, 2), (2, 0)]
    assert g.has_edge(0, 1) and not g.has_edge(1, 0)
    p = antikit.degree_profile(g)
    assert p["min_semidegree"] == 1
    assert p["edge_count"] == 3
    assert not antikit.is_antidirected(g)
    assert g == antikit.directed_triangle()


def test_reach_from():
    g = antikit.OrientedGraph(3, [(0, 1), (2, 1)])
    r = antikit.reach_from(g, 0)
    assert r["ood"] == [0, None, 2]
    assert r["oid"] == [None, 1, None]
    assert antikit.is_antiwalk(g, [0, 1, 2])


def test_antimatching():
    g = antikit.OrientedGraph(4, [(0, 1), (2, 3), (2, 1)])
    assert antikit.find_antimatching(g, 2, 0) == [(0, 1), (2, 3)]
    assert antikit.oracle_max_antimatching(g, 0) == 2
    with pytest.raises(antikit.AntikitError) as info:
        antikit.find_antimatching(triangle(), 2, 0)
    assert info.value.code == "SizeNotReached"


def test_embed():
    arc = antikit.OrientedGraph(2, [(0, 1)])
    cherry = antikit.OrientedGraph(3, [(0, 1), (2, 1)])
    assert antikit.embed_exact(arc, triangle()) == [0, 1]
    assert antikit.embed_exact(cherry, triangle()) is None
    assert antikit.embed_exact(arc, triangle(), x=0, allowed=[2]) == [2, 0]
    assert antikit.longest_antipath(antikit.blowup(triangle(), 2)) == 4


def test_peel_and_gadget():
    n, edges, origin = antikit.peel_pseudo(3, [(0, 1), (1, 2), (2, 0)], 3)
    assert (n, edges, origin) == (0, [], [])
    arc = antikit.OrientedGraph(2, [(0, 1)])
    graph, tags, origin, v_star, reversed_ = antikit.four_copy(arc)
    assert len(tags) == graph.n == 4
    assert graph.m == 4 * arc.m
    assert not reversed_
    assert v_star


def test_decompose_and_pack():
    d = antikit.beta_decompose(4, [(0, 1), (0, 2), (0, 3)], 0, True, 0.9)
    assert d["valid"]
    assert d["w"] == [0]
    plan = antikit.pack([(3, 3)], 200, 1, 0.05)
    assert plan == [0]


def test_verify():
    report = antikit.verify("path_conjecture", n_range=[3])
    assert report["verdict"] == "PASS"
    assert report["instances_checked"] > 0
    with pytest.raises(antikit.AntikitError) as info:
        antikit.verify("nope", n_range=[3])
    assert info.value.code == "InvalidArgument"
