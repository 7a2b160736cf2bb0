import pytest

import covernum


def test_graph_roundtrip():
    g = covernum.Graph.parse("Dhc")
    assert g.order == 5 and g.size == 5
    assert covernum.Graph.parse(g.graph6()) == g
    assert covernum.Graph(3, [(0, 1), (1, 2)]).edges() == [(0, 1), (1, 2)]
    assert covernum.Graph.parse("3 2\n0 1\n1 2", "edges").size == 2


def test_invariants():
    g = covernum.Graph.generate("mycielski:4")
    assert covernum.chromatic_number(g) == 4
    assert covernum.clique_number(g) == 2


def test_recognize_and_cover():
    c5 = covernum.Graph.generate("cycle:5")
    verdict = covernum.recognize(c5, "perfect")
    assert verdict["member"] is False
    assert verdict["witness"]["vertices"] == [0, 1, 2, 3, 4]
    cert = covernum.cover(covernum.Graph.generate("complete:4"), "bipartite")
    assert len(cert["parts"]) == 2 and cert["valid"]
    assert covernum.is_member(covernum.Graph.generate("kkl:2,4"), "unipolar")


def test_solve():
    assert covernum.solve(covernum.Graph.generate("kkl:2,4"), "co-unipolar")["value"] == 2
    q3 = covernum.Graph.generate("hypercube:3")
    assert covernum.solve(q3, "unipolar", decision=3)["present"] is True


def test_verify():
    report = covernum.verify("hhm", n_max=4, samples=5)
    assert report["pass"] and report["instances_checked"] == 86
    assert "arithmetic" in covernum.suite_names()


def test_errors():
    with pytest.raises(covernum.CapacityError):
        covernum.Graph.generate("complete:65")
    with pytest.raises(covernum.UnsupportedClass):
        covernum.cover(covernum.Graph.generate("cycle:5"), "gsp")
    with pytest.raises(covernum.BudgetExceeded):
        covernum.solve(covernum.Graph.generate("complete:8"), "bipartite")
    with pytest.raises(covernum.Error):
        covernum.Graph.parse("D")
