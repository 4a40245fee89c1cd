"""
Sample immersed surfaces used by the test suite and handy for demos: an
embedded octahedron, an embedded box torus, a two-sheet immersed sphere
(a cube inside a cube joined by an elbow tube through the wall), three
transverse slabs with triple points, and degenerate inputs.
"""
from fractions import Fraction

from .surface import ImmersedSurface

H = Fraction(1, 2)


class _MeshBuilder:
    """Axis-aligned rectangle mesh builder.  All rectangles are grid-cut by
    the global per-axis cut lists so that adjacent faces always share whole
    mesh edges."""

    def __init__(self, cuts=((), (), ())):
        self.vertices = []
        self.vid = {}
        self.triangles = []
        self.cuts = tuple(tuple(Fraction(c) for c in cs) for cs in cuts)

    def vertex(self, p):
        p = tuple(Fraction(c) for c in p)
        i = self.vid.get(p)
        if i is None:
            i = len(self.vertices)
            self.vid[p] = i
            self.vertices.append(p)
        return i

    def tri(self, a, b, c):
        self.triangles.append((self.vertex(a), self.vertex(b),
                               self.vertex(c)))

    def quad(self, a, b, c, d):
        self.tri(a, b, c)
        self.tri(a, c, d)

    def _subdiv(self, axis_for, lo, hi):
        vals = [Fraction(lo)] + \
            [c for c in self.cuts[axis_for] if lo < c < hi] + [Fraction(hi)]
        return vals

    def axis_rect(self, axis, level, u0, u1, v0, v1, outward, holes=()):
        """Grid-cut rectangle on the plane {axis = level}; (u, v) are the
        other two coordinates in axis order.  Normal along +axis when
        outward=True.  `holes` lists (hu0, hu1, hv0, hv1) boxes to omit."""
        u_axis, v_axis = {0: (1, 2), 1: (0, 2), 2: (0, 1)}[axis]
        ucs = self._subdiv(u_axis, u0, u1)
        vcs = self._subdiv(v_axis, v0, v1)
        for i in range(len(ucs) - 1):
            for j in range(len(vcs) - 1):
                a0, a1 = ucs[i], ucs[i + 1]
                b0, b1 = vcs[j], vcs[j + 1]
                cu, cv = (a0 + a1) / 2, (b0 + b1) / 2
                if any(h[0] <= cu <= h[1] and h[2] <= cv <= h[3]
                       for h in holes):
                    continue
                self._emit(axis, level, a0, a1, b0, b1, outward)

    def _emit(self, axis, level, u0, u1, v0, v1, outward):
        def pt(u, v):
            if axis == 0:
                return (level, u, v)
            if axis == 1:
                return (u, level, v)
            return (u, v, level)
        a, b, c, d = pt(u0, v0), pt(u1, v0), pt(u1, v1), pt(u0, v1)
        # (a,b,c) has normal +axis for x and z; for y the same order gives -y
        if axis == 1:
            outward = not outward
        if outward:
            self.quad(a, b, c, d)
        else:
            self.quad(a, d, c, b)

    def box(self, lo, hi, skip=(), flip=False):
        """Outward-oriented box boundary (inward when flip=True); `skip`
        lists (axis, level) faces the caller meshes separately."""
        (x0, y0, z0), (x1, y1, z1) = lo, hi
        faces = [
            (0, x0, False, y0, y1, z0, z1), (0, x1, True, y0, y1, z0, z1),
            (1, y0, False, x0, x1, z0, z1), (1, y1, True, x0, x1, z0, z1),
            (2, z0, False, x0, x1, y0, y1), (2, z1, True, x0, x1, y0, y1),
        ]
        for axis, level, pos, u0, u1, v0, v1 in faces:
            if (axis, level) in skip:
                continue
            self.axis_rect(axis, level, u0, u1, v0, v1,
                           pos if not flip else not pos)

    def surface(self):
        return ImmersedSurface(self.vertices, self.triangles)


def octahedron():
    """Embedded round sphere: the octahedron |x|+|y|+|z| = 1, oriented
    outward."""
    mb = _MeshBuilder()
    px, nx = (1, 0, 0), (-1, 0, 0)
    py, ny = (0, 1, 0), (0, -1, 0)
    pz, nz = (0, 0, 1), (0, 0, -1)
    for a, b in ((px, py), (py, nx), (nx, ny), (ny, px)):
        mb.tri(a, b, pz)
        mb.tri(b, a, nz)
    return mb.surface()


def reversed_octahedron():
    return octahedron().reversed_orientation()


def box_torus():
    """Embedded genus-1 surface: boundary of the square donut
    [-3,3]^2 x [-1,1] minus the column [-1,1]^2, oriented outward."""
    mb = _MeshBuilder(cuts=((-1, 1), (-1, 1), ()))
    mb.box((-3, -3, -1), (3, 3, 1), skip=((2, -1), (2, 1)))
    # inner walls, outward from the solid = toward the axis
    mb.axis_rect(0, -1, -1, 1, -1, 1, True)
    mb.axis_rect(0, 1, -1, 1, -1, 1, False)
    mb.axis_rect(1, -1, -1, 1, -1, 1, True)
    mb.axis_rect(1, 1, -1, 1, -1, 1, False)
    hole = [(-1, 1, -1, 1)]
    mb.axis_rect(2, 1, -3, 3, -3, 3, True, holes=hole)
    mb.axis_rect(2, -1, -3, 3, -3, 3, False, holes=hole)
    return mb.surface()


def two_sheet_sphere():
    """The two-sheet immersed sphere (n = 2): a small cube s = [-1,1]^3
    inside a large cube B = [-4,4]^3, joined by a square elbow tube that
    leaves the top of s, crosses the top face of B transversally, bends over
    and re-enters a hole in the top of B from outside.  Winding number 2
    inside s, 1 in the shell, 0 outside; the double locus is one loop."""
    # No global z-cut at 4: the tube walls must cross the top face of B with
    # the crossing loop interior to their mesh cells (coordinates coincide
    # there without the sheets being adjacent).
    mb = _MeshBuilder(cuts=((-H, H, 2, 3), (-H, H), (5,)))
    mb.box((-4, -4, -4), (4, 4, 4), skip=((2, 4),))
    mb.axis_rect(2, 4, -4, 4, -4, 4, True, holes=[(2, 3, -H, H)])
    mb.box((-1, -1, -1), (1, 1, 1), skip=((2, 1),))
    mb.axis_rect(2, 1, -1, 1, -1, 1, True, holes=[(-H, H, -H, H)])
    # tube = d(up u over u down) minus the two attachment caps, outward:
    #   up   = [-H,H] x [-H,H] x [1,6]
    #   over = [-H,3] x [-H,H] x [5,6]
    #   down = [ 2,3] x [-H,H] x [4,6]
    mb.axis_rect(0, -H, -H, H, 1, 6, False)          # full west wall
    mb.axis_rect(0, H, -H, H, 1, 5, True)            # east wall of up-leg
    mb.axis_rect(0, 2, -H, H, 4, 5, False)           # west wall of down-leg
    mb.axis_rect(0, 3, -H, H, 4, 6, True)            # full east wall
    for level, pos in ((-H, False), (H, True)):      # y walls: 3 rectangles
        mb.axis_rect(1, level, -H, H, 1, 5, pos)
        mb.axis_rect(1, level, -H, 3, 5, 6, pos)
        mb.axis_rect(1, level, 2, 3, 4, 5, pos)
    mb.axis_rect(2, 6, -H, 3, -H, H, True)           # roof
    mb.axis_rect(2, 5, H, 2, -H, H, False)           # underside of the elbow
    return mb.surface()


def well_sphere():
    """Embedded sphere with a blind well: the big cube with a square channel
    drilled from its top face down into an interior cavity cube.  Winding 1
    on the solid, 0 in the well; a useful embedded non-convex case."""
    mb = _MeshBuilder(cuts=((-1, -H, H, 1), (-1, -H, H, 1), (-1, 1)))
    mb.box((-4, -4, -4), (4, 4, 4), skip=((2, 4),))
    mb.axis_rect(2, 4, -4, 4, -4, 4, True, holes=[(-H, H, -H, H)])
    # channel walls, oriented into the channel (outward from the solid)
    mb.axis_rect(0, -H, -H, H, 1, 4, True)
    mb.axis_rect(0, H, -H, H, 1, 4, False)
    mb.axis_rect(1, -H, -H, H, 1, 4, True)
    mb.axis_rect(1, H, -H, H, 1, 4, False)
    # cavity cube walls bound the solid from inside: normals into the cavity
    mb.box((-1, -1, -1), (1, 1, 1), skip=((2, 1),), flip=True)
    mb.axis_rect(2, 1, -1, 1, -1, 1, False, holes=[(-H, H, -H, H)])
    return mb.surface()


def three_slabs():
    """Three pairwise-transverse thin boxes (a disconnected surface with
    winding 3 at the center and eight genuine triple points)."""
    mb = _MeshBuilder()
    t = H
    mb.box((-t, -4, -4), (t, 4, 4))
    mb.box((-5, -t, -5), (5, t, 5))
    mb.box((-6, -6, -t), (6, 6, t))
    return mb.surface()


def doubled_octahedron():
    """Two octahedron sheets sharing a facet rim and covering the same image:
    structurally a closed oriented surface, transversally a 2-dimensional
    overlap everywhere off the shared face."""
    base = octahedron()
    verts = list(base.vertices)
    tris = list(base.triangles)
    shared_face = tris[0]
    dup = {}
    for i in range(len(verts)):
        if i in shared_face:
            dup[i] = i
        else:
            dup[i] = len(verts)
            verts.append(base.vertices[i])
    out_tris = [t for t in tris if t != shared_face]
    for t in tris:
        if t == shared_face:
            continue
        a, b, c = t
        out_tris.append((dup[a], dup[c], dup[b]))
    return ImmersedSurface(verts, out_tris)
