"""Shared builders for the test suite.

The running example everywhere is the two-component tree with the rank-2
bundle O(2,0) + O(0,2) glued by the identity at a single node; its golden
values (h0 = 6, dmax = 3, witness (-2,-2)) are frozen in the tests.
"""
from fractions import Fraction as F

import pytest

from treebundles.bundle import make_bundle
from treebundles.curve import Edge, TreeCurve


def build_ex():
    curve = TreeCurve(("v1", "v2"), (Edge("v1", F(0), "v2", F(0)),))
    return make_bundle(curve, {"v1": (2, 0), "v2": (0, 2)},
                       {0: [[F(1), F(0)], [F(0), F(1)]]})


def build_chain(ids, splittings, gluings, coords=None):
    """Path curve on `ids`; node coordinates default to 1 (right) and 0 (left)."""
    edges = []
    for k in range(len(ids) - 1):
        pa, pb = (F(1), F(0)) if coords is None else coords[k]
        edges.append(Edge(ids[k], pa, ids[k + 1], pb))
    curve = TreeCurve(tuple(ids), tuple(edges))
    return make_bundle(curve, splittings, gluings)


@pytest.fixture
def ex_bundle():
    return build_ex()
