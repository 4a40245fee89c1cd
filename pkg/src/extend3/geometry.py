"""
Exact rational 3D primitives: vectors, planes, predicates, polygon and
convex-cell splitting.  Everything here works over fractions.Fraction;
no floating point is used anywhere in the pipeline.
"""
from fractions import Fraction
from math import gcd


def vec(x, y, z):
    return (Fraction(x), Fraction(y), Fraction(z))


def vadd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vscale(s, a):
    return (s * a[0], s * a[1], s * a[2])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def is_zero(a):
    return a == (0, 0, 0)


def centroid(points):
    n = len(points)
    sx = sum(p[0] for p in points)
    sy = sum(p[1] for p in points)
    sz = sum(p[2] for p in points)
    return (Fraction(sx, n), Fraction(sy, n), Fraction(sz, n))


def _int_normalize(nums):
    """Scale a tuple of Fractions to coprime integers (same ratios)."""
    denom_lcm = 1
    for q in nums:
        d = Fraction(q).denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(Fraction(q) * denom_lcm) for q in nums]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


class Plane:
    """Oriented plane a*x + b*y + c*z + d = 0 with coprime integer coefficients.

    The canonical form fixes the sign so that the first nonzero of (a, b, c)
    is positive; `key` identifies the unoriented supporting plane while
    instances remember whether canonicalization flipped the input normal.
    """

    __slots__ = ("a", "b", "c", "d", "flipped")

    def __init__(self, a, b, c, d):
        a, b, c, d = _int_normalize((a, b, c, d))
        if (a, b, c) == (0, 0, 0):
            raise ValueError("degenerate plane")
        flipped = False
        for v in (a, b, c):
            if v != 0:
                if v < 0:
                    a, b, c, d = -a, -b, -c, -d
                    flipped = True
                break
        self.a, self.b, self.c, self.d = a, b, c, d
        self.flipped = flipped

    @property
    def key(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def normal(self):
        return (Fraction(self.a), Fraction(self.b), Fraction(self.c))

    def side(self, p):
        """-1, 0 or +1: which side of the plane p lies on."""
        v = self.a * p[0] + self.b * p[1] + self.c * p[2] + self.d
        return (v > 0) - (v < 0)

    def value(self, p):
        return self.a * p[0] + self.b * p[1] + self.c * p[2] + self.d

    @staticmethod
    def through(p, q, r):
        """Plane through three points, normal = (q-p) x (r-p) before
        canonicalization.  Raises on collinear input."""
        n = cross(vsub(q, p), vsub(r, p))
        if is_zero(n):
            raise ValueError("collinear points")
        d = -dot(n, p)
        return Plane(n[0], n[1], n[2], d)

    def __repr__(self):
        return "Plane(%d,%d,%d,%d)" % self.key

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


def segment_plane_point(p, q, plane):
    """The unique point of segment pq on the plane; requires opposite sides."""
    vp, vq = plane.value(p), plane.value(q)
    t = Fraction(vp, vp - vq)
    return vadd(p, vscale(t, vsub(q, p)))


def triangle_normal(p, q, r):
    return cross(vsub(q, p), vsub(r, p))


def point_in_triangle(x, tri):
    """Classify point x against closed triangle (p,q,r), all coplanar assumed.

    Returns 'in' (open interior), 'edge', 'vertex' or 'out'.
    """
    p, q, r = tri
    n = triangle_normal(p, q, r)
    if x in (p, q, r):
        return "vertex"
    s1 = dot(cross(vsub(q, p), vsub(x, p)), n)
    s2 = dot(cross(vsub(r, q), vsub(x, q)), n)
    s3 = dot(cross(vsub(p, r), vsub(x, r)), n)
    if s1 > 0 and s2 > 0 and s3 > 0:
        return "in"
    if s1 < 0 or s2 < 0 or s3 < 0:
        return "out"
    # On the boundary: on a supporting line with nonnegative other signs.
    return "edge"


def point_on_segment(x, a, b):
    """True if x lies on the closed segment ab."""
    if x == a or x == b:
        return True
    u, v = vsub(x, a), vsub(b, a)
    if not is_zero(cross(u, v)):
        return False
    t = dot(u, v)
    return 0 <= t <= dot(v, v)


def segments_intersect_point(a, b, c, d):
    """Intersection point of coplanar segments ab and cd if it is a single
    point, else None.  Collinear overlaps return None."""
    u = vsub(b, a)
    v = vsub(d, c)
    w = vsub(c, a)
    n = cross(u, v)
    if is_zero(n):
        return None
    if dot(w, n) != 0:
        return None  # skew
    nn = dot(n, n)
    t = Fraction(dot(cross(w, v), n), nn)
    s = Fraction(dot(cross(w, u), n), nn)
    if 0 <= t <= 1 and 0 <= s <= 1:
        return vadd(a, vscale(t, u))
    return None


def triangle_pair_intersection(t1, t2):
    """Exact intersection of two closed triangles.

    Returns one of
      ('empty',), ('point', p), ('segment', p, q), ('poly', [pts...]).
    'poly' covers every intersection of positive area (including coplanar
    overlaps and collinear fat contacts reported with >= 3 points).
    """
    pl1 = Plane.through(*t1)
    pl2 = Plane.through(*t2)
    if pl1.key == pl2.key:
        poly = _coplanar_triangle_clip(t1, t2, pl1)
        if not poly:
            return ("empty",)
        if len(poly) == 1:
            return ("point", poly[0])
        if len(poly) == 2:
            return ("segment", poly[0], poly[1])
        return ("poly", poly)
    seg1 = _triangle_plane_section(t1, pl2)
    if seg1 is None:
        return ("empty",)
    seg2 = _triangle_plane_section(t2, pl1)
    if seg2 is None:
        return ("empty",)
    pts = _collinear_overlap(seg1, seg2)
    if not pts:
        return ("empty",)
    if len(pts) == 1:
        return ("point", pts[0])
    return ("segment", pts[0], pts[1])


def _triangle_plane_section(tri, plane):
    """Closed triangle cap plane -> None, (p,) degenerate, or (p, q)."""
    sides = [plane.side(v) for v in tri]
    if all(s > 0 for s in sides) or all(s < 0 for s in sides):
        return None
    pts = []
    for i, v in enumerate(tri):
        if sides[i] == 0:
            pts.append(v)
    for i in range(3):
        j = (i + 1) % 3
        if sides[i] * sides[j] < 0:
            pts.append(segment_plane_point(tri[i], tri[j], plane))
    uniq = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    if not uniq:
        return None
    return tuple(uniq[:2]) if len(uniq) >= 2 else (uniq[0],)


def _collinear_overlap(seg1, seg2):
    """Overlap of two collinear-or-point segments given as tuples of points."""
    if len(seg1) == 1:
        p = seg1[0]
        if len(seg2) == 1:
            return [p] if p == seg2[0] else []
        return [p] if point_on_segment(p, seg2[0], seg2[1]) else []
    if len(seg2) == 1:
        p = seg2[0]
        return [p] if point_on_segment(p, seg1[0], seg1[1]) else []
    a, b = seg1
    c, d = seg2
    u = vsub(b, a)
    if not is_zero(cross(u, vsub(d, c))):
        q = segments_intersect_point(a, b, c, d)
        return [q] if q is not None else []
    if not is_zero(cross(u, vsub(c, a))):
        return []  # parallel, not collinear
    uu = dot(u, u)
    tc = Fraction(dot(vsub(c, a), u), uu)
    td = Fraction(dot(vsub(d, a), u), uu)
    lo, hi = min(tc, td), max(tc, td)
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return []
    if lo == hi:
        return [vadd(a, vscale(lo, u))]
    return [vadd(a, vscale(lo, u)), vadd(a, vscale(hi, u))]


def _coplanar_triangle_clip(t1, t2, plane):
    """Intersection polygon of coplanar closed triangles (may be degenerate)."""
    poly = list(t1)
    n = plane.normal
    for i in range(3):
        a, b = t2[i], t2[(i + 1) % 3]
        edge_n = cross(n, vsub(b, a))
        # keep side: edge_n . (x - a) >= 0 for x = third vertex
        ref = dot(edge_n, vsub(t2[(i + 2) % 3], a))
        if ref < 0:
            edge_n = vscale(-1, edge_n)
        out = []
        for j in range(len(poly)):
            p, q = poly[j], poly[(j + 1) % len(poly)]
            sp = dot(edge_n, vsub(p, a))
            sq = dot(edge_n, vsub(q, a))
            if sp >= 0:
                out.append(p)
            if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
                t = Fraction(sp, sp - sq)
                out.append(vadd(p, vscale(t, vsub(q, p))))
            # points exactly on the line are emitted once via sp >= 0
        dedup = []
        for p in out:
            if not dedup or dedup[-1] != p:
                dedup.append(p)
        if len(dedup) > 1 and dedup[0] == dedup[-1]:
            dedup.pop()
        poly = dedup
        if not poly:
            return []
    return poly


def convex_polygon_area2(poly, plane):
    """Twice the (unsigned, rational) area measure n.(sum of cross products);
    zero iff the polygon is degenerate."""
    if len(poly) < 3:
        return Fraction(0)
    n = plane.normal
    acc = Fraction(0)
    for i in range(1, len(poly) - 1):
        acc += dot(n, cross(vsub(poly[i], poly[0]), vsub(poly[i + 1], poly[0])))
    return abs(acc)


def split_polygon(poly, plane):
    """Split a convex polygon (vertex cycle) by a plane.

    Returns (neg, pos, section) where neg/pos are the vertex cycles of the
    closed halves (empty list when the polygon misses that side) and section
    is the ordered pair of section points when the plane genuinely crosses,
    else None.
    """
    sides = [plane.side(p) for p in poly]
    if all(s <= 0 for s in sides) or all(s >= 0 for s in sides):
        # no crossing, but an edge lying on the plane still contributes a
        # section edge (the plane grazes the polygon)
        zeros = [p for p, s in zip(poly, sides) if s == 0]
        section = tuple(zeros) if len(zeros) == 2 else None
        if all(s <= 0 for s in sides):
            return list(poly), [], section
        return [], list(poly), section
    neg, pos, sect = [], [], []
    m = len(poly)
    for i in range(m):
        p, sp = poly[i], sides[i]
        q, sq = poly[(i + 1) % m], sides[(i + 1) % m]
        if sp <= 0:
            neg.append(p)
        if sp >= 0:
            pos.append(p)
        if sp == 0:
            sect.append(p)
        if sp * sq < 0:
            x = segment_plane_point(p, q, plane)
            neg.append(x)
            pos.append(x)
            sect.append(x)
    uniq = []
    for p in sect:
        if p not in uniq:
            uniq.append(p)
    section = tuple(uniq) if len(uniq) == 2 else None
    return neg, pos, section


class ConvexCell:
    """A bounded convex polytope as a list of faces (plane, vertex cycle)."""

    __slots__ = ("faces",)

    def __init__(self, faces):
        self.faces = faces  # list of (Plane, [points])

    @staticmethod
    def box(lo, hi):
        x0, y0, z0 = lo
        x1, y1, z1 = hi
        v = {
            (0, 0, 0): vec(x0, y0, z0), (1, 0, 0): vec(x1, y0, z0),
            (0, 1, 0): vec(x0, y1, z0), (1, 1, 0): vec(x1, y1, z0),
            (0, 0, 1): vec(x0, y0, z1), (1, 0, 1): vec(x1, y0, z1),
            (0, 1, 1): vec(x0, y1, z1), (1, 1, 1): vec(x1, y1, z1),
        }
        quads = [
            [(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
            [(1, 0, 0), (1, 0, 1), (1, 1, 1), (1, 1, 0)],
            [(0, 0, 0), (0, 0, 1), (1, 0, 1), (1, 0, 0)],
            [(0, 1, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1)],
            [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)],
            [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 0, 1)],
        ]
        faces = []
        for quad in quads:
            pts = [v[k] for k in quad]
            faces.append((Plane.through(pts[0], pts[1], pts[2]), pts))
        return ConvexCell(faces)

    def vertices(self):
        seen = []
        for _, poly in self.faces:
            for p in poly:
                if p not in seen:
                    seen.append(p)
        return seen

    def interior_point(self):
        return centroid(self.vertices())

    def plane_keys(self):
        return {pl.key for pl, _ in self.faces}

    def split(self, plane):
        """Split by a plane; returns (neg_cell, pos_cell), either may be None.

        If the plane supports a face the cell is classified whole (convex
        cells are never tangent to a splitting plane along their interior).
        """
        if plane.key in self.plane_keys():
            pt = self.interior_point()
            s = plane.side(pt)
            return (self, None) if s < 0 else (None, self)
        neg_faces, pos_faces, section_edges = [], [], []
        any_neg = any_pos = False
        for pl, poly in self.faces:
            neg, pos, section = split_polygon(poly, plane)
            if neg and len(neg) >= 3:
                neg_faces.append((pl, neg))
                any_neg = True
            if pos and len(pos) >= 3:
                pos_faces.append((pl, pos))
                any_pos = True
            if section is not None:
                section_edges.append(section)
        if not any_neg:
            return None, self
        if not any_pos:
            return self, None
        cycle = _chain_cycle(section_edges)
        neg_faces.append((plane, cycle))
        pos_faces.append((plane, list(reversed(cycle))))
        return ConvexCell(neg_faces), ConvexCell(pos_faces)


def _chain_cycle(edges):
    """Order a set of segments (pairs of points) into a single closed cycle."""
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = next(iter(adj))
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
        if len(cycle) > len(adj) + 1:
            raise ValueError("section edges do not close into a cycle")
    return cycle


def perp_basis(d):
    """An exact basis (e1, e2) of the plane orthogonal to direction d."""
    ax = max(range(3), key=lambda i: abs(d[i]))
    unit = [vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)][(ax + 1) % 3]
    e1 = cross(d, unit)
    e2 = cross(d, e1)
    return e1, e2


def angular_key(d):
    """Total-order key for exact angular sorting of a nonzero 2D direction:
    8 sectors (the four axes are their own sectors) and within each open
    quadrant the slope v/u increases strictly with the angle."""
    u, v = d
    if v == 0:
        return (0 if u > 0 else 4, Fraction(0))
    if u == 0:
        return (2 if v > 0 else 6, Fraction(0))
    if u > 0 and v > 0:
        sector = 1
    elif u < 0 and v > 0:
        sector = 3
    elif u < 0 and v < 0:
        sector = 5
    else:
        sector = 7
    return (sector, Fraction(v, u))


def sort_directions_around(axis, items, direction_of):
    """Sort items cyclically around `axis` by exact angle.

    direction_of(item) must return a rational 3-vector not parallel to axis;
    its component along axis is projected away exactly.
    """
    e1, e2 = perp_basis(axis)
    dd = dot(axis, axis)

    def key(item):
        w = direction_of(item)
        w = vsub(w, vscale(Fraction(dot(w, axis), dd), axis))
        u, v = dot(w, e1), dot(w, e2)
        if u == 0 and v == 0:
            raise ValueError("direction parallel to axis")
        return angular_key((u, v))

    return sorted(items, key=key)
