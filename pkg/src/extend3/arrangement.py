"""
The exact self-intersection arrangement of an immersed surface: winding
numbers by signed ray casting, transversality validation, and the strata
D_k(f), G_k(f) with their embedded graphs.
"""
from fractions import Fraction

from .basecomplex import BaseComplex, BudgetError, UNBOUNDED
from .geometry import (Plane, centroid, cross, dot, point_in_triangle,
                       point_on_segment, triangle_normal,
                       triangle_pair_intersection, vadd, vscale, vsub)
from .surface import InputError

# Deterministic generic ray directions; degenerate hits fall through to the
# next entry.
RAY_DIRECTIONS = [
    (1, 2, 3), (3, 1, 2), (2, 3, 1), (5, 1, 7), (7, 5, 1), (1, 7, 5),
    (3, 7, 2), (2, 3, 7), (11, 5, 3), (3, 11, 5), (5, 3, 11), (13, 7, 5),
]


class TransversalityError(ValueError):
    """Raised when a pipeline stage requires a transverse immersion."""


class NoExtensionError(ValueError):
    """A region of negative winding number: f cannot extend."""


class TransversalityReport:
    """Outcome of validate_transversality: ok flag plus violation records,
    each a (kind, witness) pair naming the offending cells."""

    def __init__(self, violations, double_edges, triple_vertices):
        self.violations = violations
        self.double_edges = double_edges      # base 1-cell ids, 2 sheets
        self.triple_vertices = triple_vertices  # base 0-cell ids, 3 sheets

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        if self.ok:
            return ("TransversalityReport(ok, %d double edges, %d triple "
                    "points)" % (len(self.double_edges),
                                 len(self.triple_vertices)))
        return "TransversalityReport(%d violations: %s)" % (
            len(self.violations), "; ".join(v[0] for v in self.violations))


def winding_number(surface, p, ray_index=0):
    """Signed crossing count of a generic rational ray from p with f(Sigma).

    The ray direction walks the deterministic direction table starting at
    ray_index until a ray avoids all degeneracies.  Raises InputError if p
    lies on the image (exact incidence test).
    """
    for ti in range(len(surface.triangles)):
        pl = surface.triangle_plane(ti)
        if pl.side(p) == 0 and \
                point_in_triangle(p, surface.triangle_points(ti)) != "out":
            raise InputError("point lies on the image surface")
    tried = 0
    idx = ray_index
    while tried < len(RAY_DIRECTIONS):
        d = tuple(Fraction(c) for c in RAY_DIRECTIONS[idx % len(RAY_DIRECTIONS)])
        total = _ray_crossings(surface, p, d)
        if total is not None:
            return total
        idx += 1
        tried += 1
    raise InputError("no generic ray found for point %r" % (p,))


def _ray_crossings(surface, p, d):
    """Signed crossings along p + t*d, t > 0, or None on a degenerate hit."""
    total = 0
    for ti in range(len(surface.triangles)):
        tri = surface.triangle_points(ti)
        n = triangle_normal(*tri)
        denom = dot(n, d)
        num = dot(n, vsub(tri[0], p))
        if denom == 0:
            if num == 0:
                return None  # ray parallel and coplanar with the triangle
            continue
        t = Fraction(num, denom)
        if t <= 0:
            continue
        x = vadd(p, vscale(t, d))
        pos = point_in_triangle(x, tri)
        if pos == "in":
            total += 1 if denom > 0 else -1
        elif pos != "out":
            return None  # hits an edge or vertex
    return total


def winding_number_multiray(surface, p, rays=5):
    """Winding number checked across `rays` independent generic directions;
    asserts agreement.  Serves the ray-independence invariant."""
    values = []
    idx = 0
    while len(values) < rays and idx < 4 * len(RAY_DIRECTIONS):
        d = tuple(Fraction(c) for c in RAY_DIRECTIONS[idx % len(RAY_DIRECTIONS)])
        v = _ray_crossings(surface, p, d)
        idx += 1
        if v is not None:
            values.append(v)
    if not values:
        raise InputError("no generic ray found")
    assert all(v == values[0] for v in values), \
        "ray dependence detected at %r: %r" % (p, values)
    return values[0]


class ArrangementComplex:
    """Exact cell complex of R^3 cut along f(Sigma), on a padded bounding box.

    `base` is the working BaseComplex (cone-subdivided once, globally);
    `raw` the unsubdivided BSP complex.  Image 2-cells carry their covering
    surface triangles and stratum level; 3-cells carry winding and region.
    """

    def __init__(self, surface, raw, base, regions, sheets1, sheets0):
        self.surface = surface
        self.raw = raw
        self.base = base
        self.regions = regions              # region id -> [raw c3 ids]
        self.sheet_count_1 = sheets1        # raw 1-cell id -> sheets
        self.sheet_count_0 = sheets0        # raw 0-cell id -> sheets
        self.double_edges = sorted(e for e, s in sheets1.items() if s == 2)
        self.triple_vertices = sorted(v for v, s in sheets0.items() if s == 3)

    @property
    def max_winding(self):
        return max(c.winding for c in self.raw.c3[1:])

    def image_faces(self, complexes=None):
        bc = complexes or self.base
        return [fi for fi, f in enumerate(bc.c2) if f.is_image]

    def region_of_point(self, p):
        """Raw 3-cell containing p strictly inside, or None."""
        for ci in range(1, len(self.raw.c3)):
            inside = True
            for fi in self.raw.c3[ci].faces:
                f = self.raw.c2[fi]
                s = f.plane.side(p)
                if s == 0:
                    inside = False
                    break
                slot = 0 if s < 0 else 1
                if f.cells[slot] != ci:
                    inside = False
                    break
            if inside:
                return ci
        return None


def build_arrangement(surface, cell_budget=50000, subdivide=True,
                      require_transverse=True):
    """Build the exact arrangement: BSP over all supporting planes inside the
    padded bounding box, winding numbers, image marking, transversality
    validation, then one global cone subdivision.
    """
    planes = []
    tri_plane = []
    for ti in range(len(surface.triangles)):
        tri = surface.triangle_points(ti)
        pl = Plane.through(*tri)
        tri_plane.append(pl)
        planes.append(pl)
    lo, hi = surface.bounds()
    pad = Fraction(1)
    lo = tuple(c - pad for c in lo)
    hi = tuple(c + pad for c in hi)
    raw = BaseComplex.from_planes(planes, lo, hi, cell_budget)

    _mark_image(surface, raw, tri_plane)
    regions = _flood_regions(raw)
    _compute_windings(surface, raw, regions)
    sheets1, sheets0 = _sheet_counts(surface, raw)

    report = _validate(surface, raw, sheets1, sheets0)
    if require_transverse and not report.ok:
        raise TransversalityError(str(report))
    if report.ok:
        _assign_levels(raw)

    base = raw.cone_subdivide() if subdivide else raw
    arr = ArrangementComplex(surface, raw, base, regions, sheets1, sheets0)
    arr.report = report
    return arr


def validate_transversality(surface, cell_budget=50000):
    """Build the raw arrangement without rejecting and report violations."""
    try:
        arr = build_arrangement(surface, cell_budget, subdivide=False,
                                require_transverse=False)
    except BudgetError:
        raise
    return arr.report


# -- construction passes -----------------------------------------------------

def _mark_image(surface, raw, tri_plane):
    by_plane = {}
    for ti, pl in enumerate(tri_plane):
        by_plane.setdefault(pl.key, []).append(ti)
    for f in raw.c2:
        cand = by_plane.get(f.plane.key)
        if not cand:
            continue
        pt = centroid([raw.verts[v] for v in f.poly])
        covering = []
        for ti in cand:
            tri = surface.triangle_points(ti)
            if point_in_triangle(pt, tri) != "out":
                covering.append(ti)
        f.triangles = tuple(covering)


def _compute_windings(surface, raw, regions):
    """One exact ray cast per region (winding is constant on regions; the
    multiray invariant test exercises per-cell agreement separately)."""
    for rid, members in enumerate(regions):
        rep = next(ci for ci in members if ci != UNBOUNDED) \
            if members != [UNBOUNDED] else None
        if rep is None:
            w = 0
        else:
            w = winding_number(surface, raw.c3[rep].point)
        for ci in members:
            raw.c3[ci].winding = w
    assert raw.c3[UNBOUNDED].winding == 0, \
        "unbounded region has nonzero winding"


def _flood_regions(raw):
    """Connected components of cells across non-image 2-cells."""
    n = len(raw.c3)
    region = [None] * n
    regions = []
    order = [UNBOUNDED] + list(range(1, n))
    for start in order:
        if region[start] is not None:
            continue
        rid = len(regions)
        stack = [start]
        members = []
        region[start] = rid
        while stack:
            ci = stack.pop()
            members.append(ci)
            for fi in raw.c3[ci].faces:
                f = raw.c2[fi]
                if f.is_image:
                    continue
                for other in f.cells:
                    if region[other] is None:
                        region[other] = rid
                        stack.append(other)
        regions.append(sorted(members))
    for ci, c3 in enumerate(raw.c3):
        c3.region = region[ci]
    return regions


def _assign_levels(raw):
    """Image 2-cells get stratum level = max of the two side windings; the
    sides of an image cell must differ by exactly 1."""
    for fi, f in enumerate(raw.c2):
        if not f.is_image:
            continue
        wm = raw.c3[f.cells[0]].winding
        wp = raw.c3[f.cells[1]].winding
        if abs(wm - wp) != 1:
            raise TransversalityError(
                "image 2-cell %d separates windings %d/%d" % (fi, wm, wp))
        f.level = max(wm, wp)


def _sigma_point_groups(surface, point):
    """Distinct Sigma-points over an image point: closed triangles containing
    it, grouped through shared simplices carrying the same preimage."""
    hits = []
    for ti in range(len(surface.triangles)):
        bb = surface.triangle_bbox(ti)
        if not all(bb[k][0] <= point[k] <= bb[k][1] for k in range(3)):
            continue
        if surface.triangle_plane(ti).side(point) != 0:
            continue
        pos = point_in_triangle(point, surface.triangle_points(ti))
        if pos == "out":
            continue
        hits.append((ti, pos))
    # group triangles hit on shared simplices: same Sigma point iff they share
    # the simplex (vertex index or edge) the point lies on
    parent = {ti: ti for ti, _ in hits}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for i in range(len(hits)):
        for j in range(i + 1, len(hits)):
            ti, pi = hits[i]
            tj, pj = hits[j]
            si = _carrier(surface, ti, point, pi)
            sj = _carrier(surface, tj, point, pj)
            if si == sj and si is not None:
                union(ti, tj)
    return len({find(ti) for ti, _ in hits}), hits


def _carrier(surface, ti, point, pos):
    """The Sigma simplex carrying `point` inside triangle ti: a vertex index,
    a sorted edge pair, or None for the open interior."""
    t = surface.triangles[ti]
    if pos == "vertex":
        for i in t:
            if surface.vertices[i] == point:
                return ("v", i)
        return None
    if pos == "edge":
        for k in range(3):
            a, b = t[k], t[(k + 1) % 3]
            if point_on_segment(point, surface.vertices[a],
                                surface.vertices[b]):
                return ("e", min(a, b), max(a, b))
        return None
    return ("t", ti)


def _sheet_counts(surface, raw):
    sheets1 = {}
    sheets0 = {}
    for e, c1 in enumerate(raw.c1):
        faces = [fi for fi in raw.faces_of_edge(e) if raw.c2[fi].is_image]
        if not faces:
            continue
        mid = raw.edge_point(e)
        count, _ = _sigma_point_groups(surface, mid)
        sheets1[e] = count
    for v, p in enumerate(raw.verts):
        count, hits = _sigma_point_groups(surface, p)
        if count:
            sheets0[v] = count
    return sheets1, sheets0


def _validate(surface, raw, sheets1, sheets0):
    violations = []
    # V1: no multi-sheet 2-cells (2-dimensional overlap)
    for fi, f in enumerate(raw.c2):
        if not f.is_image:
            continue
        pt = centroid([raw.verts[v] for v in f.poly])
        count, _ = _sigma_point_groups(surface, pt)
        if count > 1:
            violations.append(("2-dimensional overlap",
                               {"face": fi, "triangles": f.triangles}))
    for fi, f in enumerate(raw.c2):
        if f.is_image:
            wm = raw.c3[f.cells[0]].winding
            wp = raw.c3[f.cells[1]].winding
            if abs(wm - wp) != 1:
                violations.append(
                    ("image 2-cell with winding jump %d" % abs(wm - wp),
                     {"face": fi}))
    # V2: image 1-cells carry at most 2 sheets
    for e, s in sorted(sheets1.items()):
        if s > 2:
            violations.append(("edge with %d sheets" % s, {"edge": e}))
    # V3: 0-cell local structure
    for v, s in sorted(sheets0.items()):
        if s > 3:
            violations.append(("point with %d sheets" % s, {"vertex": v}))
            continue
        germs = [e for e in range(len(raw.c1))
                 if v in raw.c1[e].ends and sheets1.get(e, 0) == 2]
        if s == 2 and len(germs) != 2:
            violations.append(
                ("tangential double point (%d double-curve germs)"
                 % len(germs), {"vertex": v}))
        if s == 3:
            if len(germs) != 6:
                violations.append(
                    ("triple point with %d double-curve germs" % len(germs),
                     {"vertex": v}))
            local = [ci for ci in range(1, len(raw.c3))
                     if v in raw.verts_of_cell(ci)]
            if len(local) != 8:
                violations.append(
                    ("triple point with %d local cells" % len(local),
                     {"vertex": v}))
    # V4: adjacent triangles meet exactly in their shared simplex; vertex
    # images of one triangle may not lie on a non-adjacent one.
    violations.extend(_validate_pairs(surface))
    doubles = sorted(e for e, s in sheets1.items() if s == 2)
    triples = sorted(v for v, s in sheets0.items() if s == 3)
    return TransversalityReport(violations, doubles, triples)


def _validate_pairs(surface):
    out = []
    nt = len(surface.triangles)
    for i in range(nt):
        bi = surface.triangle_bbox(i)
        for j in range(i + 1, nt):
            bj = surface.triangle_bbox(j)
            if any(bi[k][1] < bj[k][0] or bj[k][1] < bi[k][0]
                   for k in range(3)):
                continue
            ti, tj = surface.triangles[i], surface.triangles[j]
            shared = set(ti) & set(tj)
            inter = triangle_pair_intersection(surface.triangle_points(i),
                                               surface.triangle_points(j))
            if inter[0] == "poly":
                out.append(("2-dimensional overlap",
                            {"triangles": (i, j)}))
                continue
            if len(shared) == 2:
                a, b = sorted(shared)
                pa, pb = surface.vertices[a], surface.vertices[b]
                if inter[0] != "segment" or \
                        set(inter[1:]) != {pa, pb}:
                    out.append(("adjacent triangles fold or overlap",
                                {"triangles": (i, j)}))
            elif len(shared) == 1:
                pv = surface.vertices[next(iter(shared))]
                if inter[0] == "segment" or \
                        (inter[0] == "point" and inter[1] != pv):
                    out.append(("vertex-adjacent triangles touch again",
                                {"triangles": (i, j)}))
    return out


# -- strata -------------------------------------------------------------------

class EmbeddedGraph:
    """A graph embedded in a base complex: sets of 1-cells and 0-cells with
    computable degrees.  `host` is the BaseComplex carrying the cells."""

    def __init__(self, host, edges, vertices=None):
        self.host = host
        self.edges = sorted(set(edges))
        if vertices is None:
            vertices = set()
            for e in self.edges:
                vertices.update(host.c1[e].ends)
        self.vertices = sorted(vertices)

    @property
    def is_empty(self):
        return not self.edges

    def degree(self, v):
        return sum(1 for e in self.edges if v in self.host.c1[e].ends)

    def degrees(self):
        return {v: self.degree(v) for v in self.vertices}

    def components(self):
        adj = {}
        for e in self.edges:
            a, b = self.host.c1[e].ends
            adj.setdefault(a, []).append((e, b))
            adj.setdefault(b, []).append((e, a))
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, members = [v], set()
            seen.add(v)
            edges = set()
            while stack:
                u = stack.pop()
                members.add(u)
                for e, w in adj.get(u, ()):
                    edges.add(e)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(EmbeddedGraph(self.host, sorted(edges),
                                       sorted(members)))
        return comps

    def topological_vertices(self):
        """Vertices of degree != 2 (graph vertices in the embedded sense)."""
        return [v for v in self.vertices if self.degree(v) != 2]


class Stratum:
    """D_k(f) with its boundary surface and interface graph G_k(f), living in
    the working (subdivided) complex."""

    def __init__(self, k, cells, boundary_faces, graph, components):
        self.k = k
        self.cells = cells                  # 3-cell ids, working complex
        self.boundary_faces = boundary_faces
        self.graph = graph                  # EmbeddedGraph (G_k)
        self.components = components        # list of 3-cell id lists


def strata(arr):
    """The strata D_k for k = 1..n on the working complex.

    Raises NoExtensionError when some region has negative winding.
    """
    base = arr.base
    for ci in range(1, len(base.c3)):
        if base.c3[ci].winding < 0:
            raise NoExtensionError(
                "region with winding %d (cell %d): no immersed 3-manifold "
                "extends f" % (base.c3[ci].winding, ci))
    n = arr.max_winding
    out = []
    bd_cells = {}
    for k in range(1, n + 1):
        cells = [ci for ci in range(1, len(base.c3))
                 if base.c3[ci].winding >= k]
        bfaces = [fi for fi, f in enumerate(base.c2) if f.level == k]
        bd_cells[k] = bfaces
        out.append((k, cells, bfaces))
    result = []
    closure_edges = {}
    for k, cells, bfaces in out:
        edges = set()
        for fi in bfaces:
            edges.update(base.c2[fi].edges)
        closure_edges[k] = edges
    for k, cells, bfaces in out:
        # G_k = bd D_k cap bd D_{k-1}; G_1 is empty by definition
        if k >= 2:
            g_edges = sorted(closure_edges[k] & closure_edges[k - 1])
        else:
            g_edges = []
        graph = EmbeddedGraph(base, g_edges)
        comps = _cell_components(base, cells)
        result.append(Stratum(k, cells, bfaces, graph, comps))
    _check_strata(arr, result)
    return result


def _cell_components(base, cells):
    """Components of the closed union of cells: adjacency through any 2-cell
    whose two sides both belong to the set (image 2-cells interior to D_k
    do not separate the closure)."""
    cells = set(cells)
    seen = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        stack, members = [start], []
        seen.add(start)
        while stack:
            ci = stack.pop()
            members.append(ci)
            for fi in base.c3[ci].faces:
                for other in base.c2[fi].cells:
                    if other in cells and other not in seen:
                        seen.add(other)
                        stack.append(other)
        comps.append(sorted(members))
    return comps


def _check_strata(arr, result):
    base = arr.base
    for i in range(len(result) - 1):
        assert set(result[i + 1].cells) <= set(result[i].cells), "nesting"
    # S(f) cap bd D_k = G_k u G_{k+1} as edge sets, computed on the
    # subdivided complex: S(f) edges are the double-locus edges.
    s_edges = set()
    for e, c1 in enumerate(base.c1):
        img = [fi for fi in base.faces_of_edge(e) if base.c2[fi].is_image]
        if not img:
            continue
        mid = base.edge_point(e)
        count, _ = _sigma_point_groups(arr.surface, mid)
        if count >= 2:
            s_edges.add(e)
    n = len(result)
    for idx, st in enumerate(result):
        k = st.k
        bd_edges = set()
        for fi in st.boundary_faces:
            bd_edges.update(base.c2[fi].edges)
        lhs = s_edges & bd_edges
        rhs = set(st.graph.edges)
        if idx + 1 < n:
            rhs |= set(result[idx + 1].graph.edges)
        assert lhs == rhs, \
            "S(f) cap bdD_%d != G_%d u G_%d" % (k, k, k + 1)
        for v in st.graph.vertices:
            d = st.graph.degree(v)
            assert d in (2, 3), "G_%d vertex %d has degree %d" % (k, v, d)
            raw_v = _raw_vertex(arr, v)
            is_triple = raw_v in arr.triple_vertices
            assert (d == 3) == is_triple, \
                "G_%d degree-3 vertices must be the triple points" % k


def _raw_vertex(arr, v):
    """Working-complex vertex id -> raw vertex id (cones append vertices)."""
    if not hasattr(arr, "_raw_vid"):
        arr._raw_vid = {p: i for i, p in enumerate(arr.raw.verts)}
    return arr._raw_vid.get(arr.base.verts[v])


# -- thin trivalent graphs -----------------------------------------------------

def surface_cyclic_order(base, surface_faces, v):
    """Cyclic order of the surface edges around vertex v inside the surface
    2-complex given by `surface_faces` (a set of 2-cell ids forming a
    surface).  Returns the edge ids in cyclic order."""
    faces = [fi for fi in sorted(surface_faces)
             if v in base.c2[fi].poly]
    if not faces:
        return []
    # each face contributes an arc between its two corner edges at v
    arcs = []
    for fi in faces:
        e1, e2 = base.face_corner_edges(fi, v)
        arcs.append((e1, e2, fi))
    adj = {}
    for e1, e2, fi in arcs:
        adj.setdefault(e1, []).append(e2)
        adj.setdefault(e2, []).append(e1)
    for e, nbrs in adj.items():
        assert len(nbrs) == 2, "vertex %d is not a surface point" % v
    start = min(adj)
    cycle = [start]
    prev = None
    cur = start
    while True:
        nbrs = adj[cur]
        nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(adj):
            raise AssertionError("corner arcs do not close at vertex %d" % v)
    return cycle


def is_thin_trivalent(g_fine, g_coarse, base, host_faces):
    """True iff g_fine is a thin trivalent graph of g_coarse inside the
    surface spanned by host_faces: common points are degree-3 vertices of
    both graphs and the six edges alternate in the cyclic order."""
    fine_e, coarse_e = set(g_fine.edges), set(g_coarse.edges)
    if fine_e & coarse_e:
        return False
    common = set(g_fine.vertices) & set(g_coarse.vertices)
    for v in sorted(common):
        if g_fine.degree(v) != 3 or g_coarse.degree(v) != 3:
            return False
        cycle = surface_cyclic_order(base, host_faces, v)
        labels = []
        for e in cycle:
            if e in fine_e:
                labels.append("f")
            elif e in coarse_e:
                labels.append("c")
        if len(labels) != 6:
            return False
        if any(labels[i] == labels[(i + 1) % 6] for i in range(6)):
            return False
    return True
