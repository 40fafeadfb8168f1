"""Vector bundles on tree curves, presented by splittings and node gluings.

On each component the bundle is a fixed direct sum of line bundles, in a
recorded order; at each node an invertible matrix identifies the two
fibers, written in those summand trivializations. The summand order per
component is significant because the gluing matrices index into it.

Global sections are solved as one exact block linear system: a summand of
twisted degree m contributes max(0, m+1) polynomial coefficients, and each
node contributes rank-many matching equations (a-side values through the
gluing equal b-side values).
"""
from __future__ import annotations

from . import poly
from .curve import (CurveError, TreeCurve, check_multidegree, md_total,
                    restrict_curve)
from .linalg import (bareiss_rank, invert_matrix, kernel_basis, mat_mul,
                     matrix_rank_over, modular_rank, rref)
from .splitting import SplittingType


class BundleError(ValueError):
    pass


class GluedBundle:
    """curve + per-component ordered summand degrees + per-edge gluings."""

    def __init__(self, curve: TreeCurve, rank: int, splittings, gluings):
        self.curve = curve
        self.rank = int(rank)
        self.splittings = {v: tuple(int(d) for d in splittings[v])
                           for v in curve.components}
        self.gluings = {int(i): [list(row) for row in gluings[i]]
                        for i in range(len(curve.edges))}

    @property
    def field(self):
        return self.curve.field

    def degree_on(self, v):
        return sum(self.splittings[v])

    def degree(self):
        return sum(self.degree_on(v) for v in self.curve.components)

    def multidegree(self):
        return {v: self.degree_on(v) for v in self.curve.components}

    def splitting_type(self, v):
        return SplittingType(self.splittings[v])

    def euler(self):
        return self.degree() + self.rank

    def __eq__(self, other):
        if not isinstance(other, GluedBundle):
            return NotImplemented
        return (self.curve == other.curve and self.rank == other.rank
                and self.splittings == other.splittings
                and self.gluings == other.gluings)

    def __repr__(self):
        return "GluedBundle(rank=%d, %s)" % (
            self.rank,
            ", ".join("%s:%s" % (v, list(self.splittings[v]))
                      for v in self.curve.components))


def make_bundle(curve: TreeCurve, splittings, gluings) -> GluedBundle:
    """Validating constructor; `gluings` maps edge index -> square matrix."""
    curve.validate()
    if set(splittings) != set(curve.components):
        raise BundleError("splittings must cover the components exactly")
    ranks = {len(tuple(splittings[v])) for v in curve.components}
    if len(ranks) != 1:
        raise BundleError("components disagree on the rank: %s" % sorted(ranks))
    (rank,) = ranks
    if rank < 1:
        raise BundleError("rank must be at least 1")
    if set(gluings) != set(range(len(curve.edges))):
        raise BundleError("gluings must cover the edges exactly")
    zero, one = curve.field.zero, curve.field.one
    for i in range(len(curve.edges)):
        m = gluings[i]
        if len(m) != rank or any(len(row) != rank for row in m):
            raise BundleError("gluing %d is not %dx%d" % (i, rank, rank))
        if invert_matrix([list(r) for r in m], zero, one) is None:
            raise BundleError("gluing %d is singular" % i)
    return GluedBundle(curve, rank, splittings, gluings)


def twist(bundle: GluedBundle, md) -> GluedBundle:
    """Tensor by the line bundle of the given multidegree.

    On a tree any line bundle is determined by its multidegree (the gluing
    scalars can be absorbed component by component), so a plain integer map
    is the whole datum.
    """
    check_multidegree(bundle.curve, md)
    new = {v: tuple(d + md[v] for d in bundle.splittings[v])
           for v in bundle.curve.components}
    return GluedBundle(bundle.curve, bundle.rank, new, bundle.gluings)


def restrict_bundle(bundle: GluedBundle, members) -> GluedBundle:
    """Restriction to a connected subtree; only internal gluings survive."""
    sub = restrict_curve(bundle.curve, members)
    members = set(members)
    glue = {}
    j = 0
    for i, e in enumerate(bundle.curve.edges):
        if e.a in members and e.b in members:
            glue[j] = bundle.gluings[i]
            j += 1
    spl = {v: bundle.splittings[v] for v in sub.components}
    return GluedBundle(sub, bundle.rank, spl, glue)


def pullback(bundle: GluedBundle, enl) -> GluedBundle:
    """Pull back along an enlargement: new components carry the trivial
    summand tuple, and each old node's matrix rides on the first edge of its
    replacement walk (identity on the rest)."""
    if enl.target != bundle.curve:
        raise BundleError("enlargement target is not this bundle's curve")
    problems = enl.validate()
    if problems:
        raise BundleError("invalid enlargement: " + "; ".join(problems))
    src = enl.source
    zero, one = src.field.zero, src.field.one
    r = bundle.rank
    spl = {}
    for v in src.components:
        spl[v] = (0,) * r if v in enl.contracted else bundle.splittings[v]
    glue = {}
    ident = [[one if i == j else zero for j in range(r)] for i in range(r)]
    for ti, walk in enumerate(enl.target_edge_paths()):
        m = bundle.gluings[ti]
        for step, (si, forward) in enumerate(walk):
            if step > 0:
                glue[si] = [row[:] for row in ident]
            elif forward:
                glue[si] = [row[:] for row in m]
            else:
                glue[si] = invert_matrix([row[:] for row in m], zero, one)
    return GluedBundle(src, r, spl, glue)


def contract_pushforward(bundle: GluedBundle, enl) -> GluedBundle:
    """Inverse of pullback: push down along an enlargement whose contracted
    components all carry the zero summand tuple. Matrices along each
    replacement walk compose (first edge applied first)."""
    if enl.source != bundle.curve:
        raise BundleError("enlargement source is not this bundle's curve")
    problems = enl.validate()
    if problems:
        raise BundleError("invalid enlargement: " + "; ".join(problems))
    for v in enl.contracted:
        if any(d != 0 for d in bundle.splittings[v]):
            raise BundleError("component %r is contracted but not trivial" % v)
    zero, one = bundle.field.zero, bundle.field.one
    r = bundle.rank
    glue = {}
    for ti, walk in enumerate(enl.target_edge_paths()):
        acc = [[one if i == j else zero for j in range(r)] for i in range(r)]
        for si, forward in walk:
            m = [row[:] for row in bundle.gluings[si]]
            eff = m if forward else invert_matrix(m, zero, one)
            acc = mat_mul(eff, acc, zero)
        glue[ti] = acc
    spl = {v: bundle.splittings[v] for v in enl.target.components}
    return GluedBundle(enl.target, r, spl, glue)


# -- the section linear system ---------------------------------------------

def _column_layout(bundle: GluedBundle):
    """(component, summand, twisted degree, first column) per polynomial block."""
    layout = []
    ncols = 0
    for v in bundle.curve.components:
        for i, m in enumerate(bundle.splittings[v]):
            if m >= 0:
                layout.append((v, i, m, ncols))
                ncols += m + 1
    return layout, ncols

def _block_index(layout):
    return {(v, i): (m, start) for v, i, m, start in layout}


def _matching_rows(bundle: GluedBundle, ncols, blocks):
    """One row per (edge, summand): gluing * a-side values - b-side values = 0."""
    zero = bundle.field.zero
    rows = []
    for ei, e in enumerate(bundle.curve.edges):
        m = bundle.gluings[ei]
        for out in range(bundle.rank):
            row = [zero] * ncols
            for j in range(bundle.rank):
                if (e.a, j) in blocks and m[out][j] != 0:
                    deg, start = blocks[(e.a, j)]
                    p = bundle.field.one
                    for k in range(deg + 1):
                        row[start + k] = row[start + k] + m[out][j] * p
                        p = p * e.pa
            if (e.b, out) in blocks:
                deg, start = blocks[(e.b, out)]
                p = bundle.field.one
                for k in range(deg + 1):
                    row[start + k] = row[start + k] - p
                    p = p * e.pb
            rows.append(row)
    return rows


def _int_rows(bundle: GluedBundle, ncols, blocks):
    """Matching rows over plain machine integers, or None.

    Residues stand in for prime field entries, integral rationals for
    char 0 ones; any non-integral coordinate or gluing entry sends the
    caller back to the generic field arithmetic.
    """
    char = bundle.field.char

    def as_int(x):
        if isinstance(x, int):
            return x
        v = getattr(x, "val", None)
        if v is not None:
            return v
        if getattr(x, "denominator", 0) == 1:
            return int(x)
        return None

    rows = []
    for ei, e in enumerate(bundle.curve.edges):
        pa, pb = as_int(e.pa), as_int(e.pb)
        if pa is None or pb is None:
            return None
        m = [[as_int(x) for x in mrow] for mrow in bundle.gluings[ei]]
        if any(x is None for mrow in m for x in mrow):
            return None
        for out in range(bundle.rank):
            row = [0] * ncols
            for j in range(bundle.rank):
                if (e.a, j) in blocks and m[out][j]:
                    deg, start = blocks[(e.a, j)]
                    p = 1
                    for k in range(deg + 1):
                        row[start + k] += m[out][j] * p
                        p = p * pa % char if char else p * pa
            if (e.b, out) in blocks:
                deg, start = blocks[(e.b, out)]
                p = 1
                for k in range(deg + 1):
                    row[start + k] -= p
                    p = p * pb % char if char else p * pb
            rows.append(row)
    return rows


def h0(bundle: GluedBundle) -> int:
    layout, ncols = _column_layout(bundle)
    if ncols == 0:
        return 0
    blocks = _block_index(layout)
    char = bundle.field.char
    rows = _int_rows(bundle, ncols, blocks)
    if rows is not None:
        rank = (modular_rank(rows, ncols, char) if char
                else bareiss_rank(rows, ncols))
        return ncols - rank
    rows = _matching_rows(bundle, ncols, blocks)
    return ncols - matrix_rank_over(rows, ncols, bundle.field)


def h1(bundle: GluedBundle) -> int:
    # h0 - h1 is the Euler characteristic, degree + rank on a tree
    return h0(bundle) - bundle.euler()


class SectionBasis:
    """Global sections as per-component, per-summand coefficient lists."""

    def __init__(self, bundle, sections):
        self.bundle = bundle
        self.sections = sections

    @property
    def dimension(self):
        return len(self.sections)


def section_basis(bundle: GluedBundle) -> SectionBasis:
    layout, ncols = _column_layout(bundle)
    blocks = _block_index(layout)
    zero, one = bundle.field.zero, bundle.field.one
    if ncols == 0:
        return SectionBasis(bundle, [])
    rows = _matching_rows(bundle, ncols, blocks)
    vecs = kernel_basis(rows, ncols, zero, one)
    sections = []
    for vec in vecs:
        sec = {}
        for v in bundle.curve.components:
            polys = []
            for i, m in enumerate(bundle.splittings[v]):
                if m < 0:
                    polys.append([])
                else:
                    _, start = blocks[(v, i)]
                    polys.append(poly.trim(vec[start:start + m + 1]))
            sec[v] = polys
        sections.append(sec)
    return SectionBasis(bundle, sections)


def evaluate_section(bundle: GluedBundle, section, v, at):
    """Fiber value of a section on component v at a chart point."""
    zero = bundle.field.zero
    return [poly.evaluate(p, at, zero) for p in section[v]]


# -- independent recomputation of h0 ----------------------------------------

def h0_oracle(bundle: GluedBundle) -> int:
    """Second route to h0 for cross-checking.

    Sections are represented by their values at m+1 integer sample points
    per summand instead of coefficients, node values are reconstructed by
    Lagrange interpolation, and the elimination scans columns right to left
    with pivot rows taken from the bottom. Nothing here is shared with the
    primary path except the field.
    """
    fld = bundle.field
    zero, one = fld.zero, fld.one
    cols = []  # (component, summand, sample index)
    offsets = {}
    for v in bundle.curve.components:
        for i, m in enumerate(bundle.splittings[v]):
            if m >= 0:
                offsets[(v, i)] = (m, len(cols))
                for j in range(m + 1):
                    cols.append((v, i, j))
    if not cols:
        return 0

    def lagrange_weights(m, at):
        # weight of sample j in the value at `at`; samples are 0..m
        pts = [fld.of(j) for j in range(m + 1)]
        ws = []
        for j in range(m + 1):
            num, den = one, one
            for k in range(m + 1):
                if k != j:
                    num = num * (at - pts[k])
                    den = den * (pts[j] - pts[k])
            ws.append(num / den)
        return ws

    rows = []
    for ei, e in enumerate(bundle.curve.edges):
        m = bundle.gluings[ei]
        for out in range(bundle.rank):
            row = [zero] * len(cols)
            for j in range(bundle.rank):
                if (e.a, j) in offsets and m[out][j] != 0:
                    deg, start = offsets[(e.a, j)]
                    for k, w in enumerate(lagrange_weights(deg, e.pa)):
                        row[start + k] = row[start + k] + m[out][j] * w
            if (e.b, out) in offsets:
                deg, start = offsets[(e.b, out)]
                for k, w in enumerate(lagrange_weights(deg, e.pb)):
                    row[start + k] = row[start + k] - w
            rows.append(row)

    # right-to-left, bottom-up elimination
    work = [r[:] for r in rows]
    used = [False] * len(work)
    rank = 0
    for c in range(len(cols) - 1, -1, -1):
        sel = None
        for i in range(len(work) - 1, -1, -1):
            if not used[i] and work[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        used[sel] = True
        rank += 1
        inv = work[sel][c]
        srow = [x / inv for x in work[sel]]
        for i in range(len(work)):
            if not used[i] and work[i][c] != 0:
                f = work[i][c]
                work[i] = [work[i][t] - f * srow[t] for t in range(len(cols))]
    return len(cols) - rank


# -- clamp boxes and the positivity threshold --------------------------------

def vanishing_floor(bundle: GluedBundle):
    """Per component, the twist below which sections die on that component."""
    return {v: -max(bundle.splittings[v]) - 1 for v in bundle.curve.components}


def clamp_box(bundle: GluedBundle, e: int):
    """All multidegrees of total e within the stabilization box.

    Below lo_v = -(largest summand degree on v) - 1 every section vanishes
    identically on v, so h0 is constant in that direction; any positivity or
    semicontinuity failure therefore clamps onto this finite box. Returned
    in ascending lexicographic order along the component order.
    """
    comps = list(bundle.curve.components)
    lo = vanishing_floor(bundle)
    suffix = [0] * (len(comps) + 1)
    for i in range(len(comps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + lo[comps[i]]
    out = []

    def rec(i, prefix, remaining):
        if i == len(comps) - 1:
            if remaining >= lo[comps[i]]:
                out.append(dict(zip(comps, prefix + [remaining])))
            return
        v = comps[i]
        top = remaining - suffix[i + 1]
        for val in range(lo[v], top + 1):
            rec(i + 1, prefix + [val], remaining - val)

    if comps:
        rec(0, [], e)
    return out


def clamp_multidegree(bundle: GluedBundle, md):
    """Raise coordinates below the vanishing floor up to it (h0-preserving)."""
    lo = vanishing_floor(bundle)
    return {v: max(md[v], lo[v]) for v in bundle.curve.components}


def dmax(bundle: GluedBundle):
    """Largest d such that every twist of total degree -d has a section.

    Returns (d, witness) with the witness the first multidegree in the
    total-degree -(d+1) clamp box without sections. Positive chi forces
    sections at one end, the all-floors twist is sectionless at the other,
    and losing a coordinate of any in-box multidegree lands in the box one
    level down, so the all-pass property is monotone across levels and the
    threshold binary searches.
    """
    deg, r = bundle.degree(), bundle.rank
    lo_d = (deg + r - 1) // r
    hi_d = sum(max(ds) + 1 for ds in bundle.splittings.values())
    floors = vanishing_floor(bundle)
    floor_sum = sum(floors.values())

    def level_fails(cand):
        # corners first: the whole budget on one component is the cheap
        # way to expose a sectionless twist
        for v in bundle.curve.components:
            md = dict(floors)
            md[v] += -cand - floor_sum
            if h0(twist(bundle, md)) == 0:
                return True
        return any(h0(twist(bundle, md)) == 0
                   for md in clamp_box(bundle, -cand))

    while hi_d - lo_d > 1:
        mid = (lo_d + hi_d) // 2
        if level_fails(mid):
            hi_d = mid
        else:
            lo_d = mid
    for md in clamp_box(bundle, -hi_d):
        if h0(twist(bundle, md)) == 0:
            return hi_d - 1, md
    raise AssertionError("no sectionless twist up to the all-floors point")
