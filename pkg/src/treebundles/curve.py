"""Trees of smooth rational curves and their combinatorics.

A curve is a connected nodal curve whose components are projective lines
and whose dual graph is a tree. Each component carries an affine
coordinate chart; a node is recorded as an edge holding the exact
coordinate of the attachment point on both sides. No node sits at
infinity, which costs nothing (move it by a chart automorphism) and keeps
evaluation at nodes plain polynomial evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .fields import FpElement, PrimeField, RationalField


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    """One node: component `a` at coordinate `pa` meets component `b` at `pb`."""

    a: str
    pa: object
    b: str
    pb: object


@dataclass(frozen=True)
class TreeCurve:
    components: tuple
    edges: tuple
    field: object = dc_field(default_factory=RationalField)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "edges", tuple(self.edges))

    # -- basic graph views ------------------------------------------------

    def adjacency(self):
        """component id -> list of (neighbour id, edge index), in edge order."""
        adj = {v: [] for v in self.components}
        for i, e in enumerate(self.edges):
            adj[e.a].append((e.b, i))
            adj[e.b].append((e.a, i))
        return adj

    def neighbors(self, v):
        return [w for w, _ in self.adjacency()[v]]

    def edge_between(self, x, y):
        for i, e in enumerate(self.edges):
            if {e.a, e.b} == {x, y}:
                return i
        return None

    def side_of(self, edge_index, endpoint):
        """Components reachable from `endpoint` without crossing the edge."""
        e = self.edges[edge_index]
        assert endpoint in (e.a, e.b)
        adj = self.adjacency()
        seen = {endpoint}
        stack = [endpoint]
        while stack:
            v = stack.pop()
            for w, i in adj[v]:
                if i != edge_index and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def path_between(self, x, y):
        """Unique component path from x to y, inclusive."""
        adj = self.adjacency()
        prev = {x: None}
        stack = [x]
        while stack:
            v = stack.pop()
            if v == y:
                break
            for w, _ in adj[v]:
                if w not in prev:
                    prev[w] = v
                    stack.append(w)
        if y not in prev:
            raise CurveError("no path from %r to %r" % (x, y))
        path = [y]
        while path[-1] != x:
            path.append(prev[path[-1]])
        path.reverse()
        return path

    def is_connected_subset(self, members):
        members = set(members)
        if not members:
            return False
        start = next(v for v in self.components if v in members)
        adj = self.adjacency()
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w in members and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == members

    def ordered(self, members):
        """Members as a tuple in component order."""
        members = set(members)
        return tuple(v for v in self.components if v in members)

    def validate(self):
        report = validate_tree(self)
        if report:
            raise CurveError("; ".join(report))
        return self


def _element_ok(x, fld):
    if isinstance(fld, RationalField):
        return isinstance(x, Fraction)
    if isinstance(fld, PrimeField):
        return isinstance(x, FpElement) and x.p == fld.p
    return False


def validate_tree(curve: TreeCurve):
    """Every violation found, as human-readable strings; empty means valid."""
    problems = []
    comps = curve.components
    if not comps:
        return ["curve has no components"]
    if len(set(comps)) != len(comps):
        problems.append("duplicate component ids")
    for v in comps:
        if not isinstance(v, str) or not v:
            problems.append("component id %r is not a nonempty string" % (v,))
    known = set(comps)
    for i, e in enumerate(curve.edges):
        if e.a not in known or e.b not in known:
            problems.append("edge %d references unknown component" % i)
        elif e.a == e.b:
            problems.append("edge %d joins component %r to itself" % (i, e.a))
        for x in (e.pa, e.pb):
            if not _element_ok(x, curve.field):
                problems.append("edge %d coordinate %r is not a %s element"
                                % (i, x, curve.field.name))
    if problems:
        return problems
    # connectivity and acyclicity; a connected graph on n vertices with
    # n-1 edges is a tree, but report the two failures separately
    if len(curve.edges) > len(comps) - 1:
        problems.append("cycle: %d edges on %d components"
                        % (len(curve.edges), len(comps)))
    if len(curve.edges) < len(comps) - 1 or not curve.is_connected_subset(comps):
        problems.append("curve is not connected")
    # distinct node coordinates on every chart
    for v in comps:
        coords = []
        for e in curve.edges:
            if e.a == v:
                coords.append(e.pa)
            if e.b == v:
                coords.append(e.pb)
        for i in range(len(coords)):
            for j in range(i + 1, len(coords)):
                if coords[i] == coords[j]:
                    problems.append("two nodes of %r share coordinate %r" % (v, coords[i]))
    return problems


# -- multidegrees ---------------------------------------------------------

def check_multidegree(curve: TreeCurve, md):
    if set(md) != set(curve.components):
        raise CurveError("multidegree keys %s do not match components %s"
                         % (sorted(md), list(curve.components)))
    for v, d in md.items():
        if not isinstance(d, int):
            raise CurveError("degree on %r is not an integer: %r" % (v, d))
    return md


def md_total(md):
    return sum(md.values())


def fill_multidegree(curve: TreeCurve, partial):
    """Complete a partial component->int map with zeros."""
    unknown = set(partial) - set(curve.components)
    if unknown:
        raise CurveError("unknown components in multidegree: %s" % sorted(unknown))
    return {v: int(partial.get(v, 0)) for v in curve.components}


# -- coconnected subtrees -------------------------------------------------

def coconnected_subtrees(curve: TreeCurve):
    """All nonempty connected subtrees whose complement is connected or empty.

    In a tree these are exactly the two sides of each edge, plus the whole
    curve. Returned in a fixed order: by size, then componentwise.
    """
    out = {tuple(curve.components)}
    for i in range(len(curve.edges)):
        e = curve.edges[i]
        out.add(curve.ordered(curve.side_of(i, e.a)))
        out.add(curve.ordered(curve.side_of(i, e.b)))
    key = {v: i for i, v in enumerate(curve.components)}
    return sorted(out, key=lambda t: (len(t), tuple(key[v] for v in t)))


def subtree_divisor_class(curve: TreeCurve, members):
    """Multidegree of the line bundle attached to a subtree divisor.

    A single component contributes -(number of neighbours) on itself and +1
    on each neighbour; a larger subtree is the sum of its members'
    contributions.
    """
    members = set(members)
    if not members or not members <= set(curve.components):
        raise CurveError("subtree members must be a nonempty subset of components")
    md = {v: 0 for v in curve.components}
    adj = curve.adjacency()
    for v in members:
        md[v] -= len(adj[v])
        for w, _ in adj[v]:
            md[w] += 1
    return md


# -- degree-zero flow decomposition ---------------------------------------

def boundary_of_flow(curve: TreeCurve, flow):
    """Multidegree induced by an integer flow on edges (positive = toward a)."""
    md = {v: 0 for v in curve.components}
    for i, f in flow.items():
        e = curve.edges[i]
        md[e.a] += f
        md[e.b] -= f
    return md


def decompose_degree_zero(curve: TreeCurve, md):
    """The unique integer flow on edges whose boundary is md (total zero)."""
    check_multidegree(curve, md)
    if md_total(md) != 0:
        raise CurveError("total degree %d is not zero" % md_total(md))
    need = dict(md)
    remaining = {v: set() for v in curve.components}
    for i, e in enumerate(curve.edges):
        remaining[e.a].add(i)
        remaining[e.b].add(i)
    flow = {}
    order = [v for v in curve.components if len(remaining[v]) == 1]
    while order:
        v = order.pop()
        if not remaining[v]:
            continue
        (i,) = remaining[v]
        e = curve.edges[i]
        if v == e.a:
            f = need[v]
            other = e.b
            need[other] += f
        else:
            f = -need[v]
            other = e.a
            need[other] -= f
        flow[i] = f
        need[v] = 0
        remaining[v].discard(i)
        remaining[other].discard(i)
        if len(remaining[other]) == 1:
            order.append(other)
    assert all(d == 0 for d in need.values()), "flow peeling left a residue"
    return flow


# -- enlargements ----------------------------------------------------------

@dataclass(frozen=True)
class Enlargement:
    """A tree map source -> target contracting some components to nodes.

    Surviving components keep their ids and map isomorphically; the
    contracted set falls apart into chains, each of which lands on one node
    of the target.
    """

    source: TreeCurve
    target: TreeCurve
    contracted: frozenset

    def survivors(self):
        return tuple(v for v in self.source.components if v not in self.contracted)

    def is_identity(self):
        return not self.contracted and self.source == self.target

    def validate(self):
        problems = validate_tree(self.source) + validate_tree(self.target)
        if problems:
            return problems
        if self.source.field != self.target.field:
            problems.append("source and target coefficient fields differ")
        if not self.contracted <= set(self.source.components):
            problems.append("contracted set contains unknown components")
            return problems
        if set(self.survivors()) != set(self.target.components):
            problems.append("surviving components do not match the target")
            return problems
        derived = []
        for idx, chain in self._chains():
            if idx is None:
                problems.append("contracted chain %s is not a path between two survivors"
                                % (sorted(chain),))
            else:
                derived.append(idx)
        if problems:
            return problems
        # every target edge must be produced exactly once
        for i, e in enumerate(self.target.edges):
            hits = derived.count(i)
            if hits != 1:
                problems.append("target edge %d is matched %d times" % (i, hits))
        return problems

    def _chains(self):
        """Yield (target edge index or None, set of contracted comps or None).

        Surviving-to-surviving source edges and contracted chains both map
        to target edges; unmatched structure yields None for the index.
        """
        src = self.source
        out = []
        # direct edges
        for e in src.edges:
            if e.a not in self.contracted and e.b not in self.contracted:
                out.append((self._find_target_edge(e.a, e.pa, e.b, e.pb), set()))
        # chains of contracted components
        seen = set()
        adj = src.adjacency()
        for v in src.components:
            if v not in self.contracted or v in seen:
                continue
            chain = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for w, _ in adj[x]:
                    if w in self.contracted and w not in chain:
                        chain.add(w)
                        stack.append(w)
            seen |= chain
            boundary = []
            for x in chain:
                for w, i in adj[x]:
                    if w not in self.contracted:
                        boundary.append((w, i))
            if len(boundary) != 2:
                out.append((None, chain))
                continue
            (u, iu), (w, iw) = boundary
            # the survivor-to-survivor walk must use up the whole chain
            interior = set(src.path_between(u, w)[1:-1])
            if interior != chain:
                out.append((None, chain))
                continue
            eu, ew = src.edges[iu], src.edges[iw]
            pu = eu.pa if eu.a == u else eu.pb
            pw = ew.pa if ew.a == w else ew.pb
            out.append((self._find_target_edge(u, pu, w, pw), chain))
        return out

    def _find_target_edge(self, x, px, y, py):
        for i, e in enumerate(self.target.edges):
            if (e.a, e.pa, e.b, e.pb) == (x, px, y, py):
                return i
            if (e.a, e.pa, e.b, e.pb) == (y, py, x, px):
                return i
        return None

    def target_edge_paths(self):
        """For each target edge: the source edge walk from its a-side to its b-side.

        Returns a list (indexed like target.edges) of lists of
        (source edge index, forward) pairs; forward means the source edge is
        traversed from its own a-side to its b-side.
        """
        src = self.source
        paths = []
        for e in self.target.edges:
            comps = src.path_between(e.a, e.b)
            for mid in comps[1:-1]:
                if mid not in self.contracted:
                    raise CurveError("path for target edge %r-%r passes through survivor %r"
                                     % (e.a, e.b, mid))
            walk = []
            for x, y in zip(comps, comps[1:]):
                i = src.edge_between(x, y)
                walk.append((i, src.edges[i].a == x))
            paths.append(walk)
        return paths


def identity_enlargement(curve: TreeCurve):
    return Enlargement(curve, curve, frozenset())


def compose_enlargements(outer: Enlargement, inner: Enlargement):
    """outer after inner: inner.source -> inner.target == outer.source -> outer.target."""
    if inner.target != outer.source:
        raise CurveError("enlargements do not chain")
    return Enlargement(inner.source, outer.target, inner.contracted | outer.contracted)


def fresh_bridge_id(curve: TreeCurve, edge_index, explicit=None):
    e = curve.edges[edge_index]
    name = explicit if explicit is not None else "%s+%s" % (e.a, e.b)
    while name in curve.components:
        name += "'"
    return name


def insert_bridge(curve: TreeCurve, edge_index, bridge_id=None):
    """Replace one node with a bridge component glued at coordinates 0 and 1.

    The two replacement edges are appended at the end of the edge list, the
    half touching the old a-side first. Returns the new curve and the
    enlargement contracting the bridge back.
    """
    if not 0 <= edge_index < len(curve.edges):
        raise CurveError("no edge %r" % (edge_index,))
    e = curve.edges[edge_index]
    bid = fresh_bridge_id(curve, edge_index, bridge_id)
    zero, one = curve.field.zero, curve.field.one
    edges = tuple(x for i, x in enumerate(curve.edges) if i != edge_index)
    edges = edges + (Edge(e.a, e.pa, bid, zero), Edge(bid, one, e.b, e.pb))
    bigger = TreeCurve(curve.components + (bid,), edges, curve.field)
    return bigger, Enlargement(bigger, curve, frozenset({bid}))


def restrict_curve(curve: TreeCurve, members):
    """Induced subtree on a connected set of components."""
    members = set(members)
    if not curve.is_connected_subset(members):
        raise CurveError("restriction target %s is not connected" % sorted(members))
    comps = tuple(v for v in curve.components if v in members)
    edges = tuple(e for e in curve.edges if e.a in members and e.b in members)
    return TreeCurve(comps, edges, curve.field)
