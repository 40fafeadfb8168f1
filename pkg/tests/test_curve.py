"""Tree curves: validation, graph views, divisors, flows, enlargements."""
from fractions import Fraction as F

import pytest

from treebundles.curve import (CurveError, Edge, TreeCurve,
                               boundary_of_flow, check_multidegree,
                               coconnected_subtrees, compose_enlargements,
                               decompose_degree_zero, fill_multidegree,
                               identity_enlargement, insert_bridge, md_total,
                               restrict_curve, subtree_divisor_class,
                               validate_tree)
from treebundles.fields import PrimeField


def t2():
    return TreeCurve(("v1", "v2"), (Edge("v1", F(0), "v2", F(0)),))


def star4():
    # hub h with legs a, b, c at distinct hub coordinates
    return TreeCurve(("h", "a", "b", "c"),
                     (Edge("h", F(0), "a", F(0)),
                      Edge("h", F(1), "b", F(0)),
                      Edge("h", F(2), "c", F(0))))


def test_validate_accepts_good_trees():
    assert t2().validate() is not None
    assert star4().validate().components == ("h", "a", "b", "c")


def test_validate_rejects_cycle():
    curve = TreeCurve(("a", "b"),
                      (Edge("a", F(0), "b", F(0)), Edge("a", F(1), "b", F(1))))
    assert any("cycle" in p for p in validate_tree(curve))


def test_validate_rejects_disconnected():
    curve = TreeCurve(("a", "b", "c"), (Edge("a", F(0), "b", F(0)),))
    assert any("not connected" in p for p in validate_tree(curve))


def test_validate_rejects_duplicate_node_coordinate():
    curve = TreeCurve(("a", "b", "c"),
                      (Edge("a", F(0), "b", F(0)), Edge("b", F(0), "c", F(0))))
    with pytest.raises(CurveError, match="share coordinate"):
        curve.validate()


def test_validate_rejects_self_loop_and_unknown_ids():
    loop = TreeCurve(("a",), (Edge("a", F(0), "a", F(1)),))
    assert any("itself" in p for p in validate_tree(loop))
    dangling = TreeCurve(("a",), (Edge("a", F(0), "z", F(0)),))
    assert any("unknown component" in p for p in validate_tree(dangling))


def test_validate_checks_coordinate_field():
    curve = TreeCurve(("a", "b"), (Edge("a", 0, "b", F(0)),))
    assert any("element" in p for p in validate_tree(curve))
    fld = PrimeField(7)
    ok = TreeCurve(("a", "b"), (Edge("a", fld.of(0), "b", fld.of(0)),), fld)
    assert validate_tree(ok) == []


def test_graph_views():
    curve = star4()
    assert curve.neighbors("h") == ["a", "b", "c"]
    assert curve.neighbors("a") == ["h"]
    assert curve.edge_between("b", "h") == 1
    assert curve.edge_between("a", "b") is None
    assert curve.side_of(1, "b") == {"b"}
    assert curve.side_of(1, "h") == {"h", "a", "c"}
    assert curve.path_between("a", "c") == ["a", "h", "c"]
    assert curve.ordered({"c", "a"}) == ("a", "c")


def test_is_connected_subset():
    curve = star4()
    assert curve.is_connected_subset({"a", "h", "b"})
    assert not curve.is_connected_subset({"a", "b"})
    assert not curve.is_connected_subset(set())


def test_multidegree_helpers():
    curve = t2()
    md = {"v1": 2, "v2": -1}
    assert check_multidegree(curve, md) is md
    assert md_total(md) == 1
    with pytest.raises(CurveError, match="keys"):
        check_multidegree(curve, {"v1": 0})
    with pytest.raises(CurveError, match="integer"):
        check_multidegree(curve, {"v1": F(1, 2), "v2": 0})
    assert fill_multidegree(curve, {"v2": 3}) == {"v1": 0, "v2": 3}
    with pytest.raises(CurveError, match="unknown"):
        fill_multidegree(curve, {"zz": 1})


def test_coconnected_subtrees():
    curve = star4()
    subs = coconnected_subtrees(curve)
    # each leg, each leg's complement, and the whole curve
    assert ("a",) in subs and ("b",) in subs and ("c",) in subs
    assert ("h", "a", "b", "c") in subs
    assert ("h", "b", "c") in subs
    assert all(curve.is_connected_subset(s) for s in subs)
    assert len(subs) == len(set(subs))


def test_subtree_divisor_class():
    curve = star4()
    assert subtree_divisor_class(curve, {"a"}) == {"h": 1, "a": -1, "b": 0, "c": 0}
    assert subtree_divisor_class(curve, {"h"}) == {"h": -3, "a": 1, "b": 1, "c": 1}
    # internal edges cancel in a union
    assert subtree_divisor_class(curve, {"h", "a"}) == {"h": -2, "a": 0, "b": 1, "c": 1}
    with pytest.raises(CurveError):
        subtree_divisor_class(curve, set())


def test_flow_decomposition_roundtrip():
    curve = star4()
    md = {"h": -2, "a": 1, "b": 1, "c": 0}
    flow = decompose_degree_zero(curve, md)
    assert boundary_of_flow(curve, flow) == md
    with pytest.raises(CurveError, match="not zero"):
        decompose_degree_zero(curve, {"h": 1, "a": 0, "b": 0, "c": 0})


def test_insert_bridge_layout():
    curve = t2()
    grown, step = insert_bridge(curve, 0)
    assert grown.components == ("v1", "v2", "v1+v2")
    e0, e1 = grown.edges
    # replacement edges go at the end, a-side half first; the bridge chart
    # meets its neighbours at 0 and 1
    assert (e0.a, e0.b, e0.pb) == ("v1", "v1+v2", F(0))
    assert (e1.a, e1.pa, e1.b) == ("v1+v2", F(1), "v2")
    assert e0.pa == curve.edges[0].pa and e1.pb == curve.edges[0].pb
    assert step.contracted == frozenset({"v1+v2"})
    assert step.source == grown and step.target == curve
    assert step.validate() == []


def test_compose_enlargements():
    curve = t2()
    g1, s1 = insert_bridge(curve, 0)
    g2, s2 = insert_bridge(g1, 0)
    total = compose_enlargements(compose_enlargements(identity_enlargement(curve), s1), s2)
    assert total.source == g2
    assert total.target == curve
    assert total.contracted == s1.contracted | s2.contracted
    assert total.validate() == []


def test_restrict_curve():
    curve = star4()
    sub = restrict_curve(curve, {"h", "b"})
    assert sub.components == ("h", "b")
    assert len(sub.edges) == 1 and sub.edges[0].b == "b"
    sub.validate()
