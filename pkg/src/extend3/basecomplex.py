"""
Polyhedral base complexes: the exact cell decomposition of a rational box by
a set of planes, with full 0/1/2/3 incidence, cyclic edge fans and the cone
(star) subdivision.  Both the surface arrangement and all synthetic test
complexes are instances of BaseComplex.
"""
from fractions import Fraction

from .geometry import (ConvexCell, Plane, centroid, vsub,
                       sort_directions_around)


class BudgetError(RuntimeError):
    """A configured combinatorial budget was exceeded."""


UNBOUNDED = 0  # id of the unbounded 3-cell, always present


class Cell3:
    __slots__ = ("faces", "point", "bounded", "winding", "region", "parent")

    def __init__(self, faces, point, bounded):
        self.faces = faces          # sorted list of 2-cell ids
        self.point = point          # interior point (None for unbounded)
        self.bounded = bounded
        self.winding = None
        self.region = None
        self.parent = None          # raw cell id after subdivision


class Cell2:
    __slots__ = ("plane", "poly", "cells", "edges", "triangles", "level")

    def __init__(self, plane, poly):
        self.plane = plane          # supporting Plane (canonical orientation)
        self.poly = poly            # vertex-id cycle
        self.cells = [None, None]   # [minus-side c3, plus-side c3]
        self.edges = []             # 1-cell ids, aligned with poly cycle
        self.triangles = ()         # covering surface triangles (image cells)
        self.level = None           # stratum level k (image cells only)

    @property
    def is_image(self):
        return bool(self.triangles)


class Cell1:
    __slots__ = ("ends", "faces", "fan")

    def __init__(self, ends):
        self.ends = ends            # sorted vertex-id pair
        self.faces = []             # incident 2-cell ids
        self.fan = None             # cyclic fan [(c2, c3), ...] around edge


class BaseComplex:
    """An exact polyhedral decomposition of a box in R^3 (plus the unbounded
    complement cell), with incidence in all dimensions."""

    def __init__(self):
        self.verts = []             # vertex id -> coordinate triple
        self.c1 = []
        self.c2 = []
        self.c3 = []                # c3[0] is the unbounded cell

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_planes(planes, lo, hi, cell_budget=50000):
        """Cut the box [lo, hi] by every plane; build the full complex."""
        cells = [ConvexCell.box(lo, hi)]
        seen = set()
        ordered = []
        for pl in planes:
            if pl.key not in seen:
                seen.add(pl.key)
                ordered.append(pl)
        for pl in ordered:
            out = []
            for cell in cells:
                neg, pos = cell.split(pl)
                if neg is not None:
                    out.append(neg)
                if pos is not None:
                    out.append(pos)
            cells = out
            if len(cells) > cell_budget:
                raise BudgetError(
                    "arrangement exceeds cell budget (%d cells > %d)"
                    % (len(cells), cell_budget))
        return BaseComplex._assemble(cells)

    @staticmethod
    def _assemble(cells):
        bc = BaseComplex()
        vid = {}

        def vert_id(p):
            i = vid.get(p)
            if i is None:
                i = len(bc.verts)
                vid[p] = i
                bc.verts.append(p)
            return i

        # Gather facets keyed by (plane, vertex set); remember per-cell lists.
        raw_faces = []              # list of (plane, [vertex ids])
        face_index = {}
        cell_faces = []
        for cell in cells:
            ids = []
            for pl, poly in cell.faces:
                pids = [vert_id(p) for p in poly]
                key = (pl.key, frozenset(pids))
                fi = face_index.get(key)
                if fi is None:
                    fi = len(raw_faces)
                    face_index[key] = fi
                    raw_faces.append((pl, pids))
                ids.append(fi)
            cell_faces.append(sorted(set(ids)))

        # Split facet polygon edges at every vertex lying in their interior
        # (a plane can graze a cell along an edge without cutting the facet).
        on_line = _vertices_on_segments(bc.verts, raw_faces)
        bc.c3 = [Cell3([], None, False)]  # unbounded placeholder
        order = sorted(range(len(cells)),
                       key=lambda i: centroid_key(cells[i].interior_point()))
        cell_id_of = {}
        for ci in order:
            cell_id_of[ci] = len(bc.c3)
            bc.c3.append(Cell3(cell_faces[ci], cells[ci].interior_point(),
                               True))

        face_order = sorted(
            range(len(raw_faces)),
            key=lambda fi: (raw_faces[fi][0].key,
                            sorted(bc.verts[v] for v in raw_faces[fi][1])))
        fmap = {}
        for fi in face_order:
            pl, pids = raw_faces[fi]
            poly = _refine_polygon(pids, bc.verts, on_line)
            fmap[fi] = len(bc.c2)
            bc.c2.append(Cell2(pl, poly))
        for ci, c3 in enumerate(bc.c3):
            if ci == UNBOUNDED:
                continue
            c3.faces = sorted(fmap[fi] for fi in c3.faces)

        # Cell sides of each facet by exact plane sign of interior points.
        for ci, c3 in enumerate(bc.c3):
            if ci == UNBOUNDED:
                continue
            for fi in c3.faces:
                f = bc.c2[fi]
                s = f.plane.side(c3.point)
                assert s != 0
                slot = 0 if s < 0 else 1
                assert f.cells[slot] is None, "three cells on one facet"
                f.cells[slot] = ci
        hull = []
        for fi, f in enumerate(bc.c2):
            for slot in (0, 1):
                if f.cells[slot] is None:
                    f.cells[slot] = UNBOUNDED
                    hull.append(fi)
        bc.c3[UNBOUNDED].faces = sorted(hull)

        bc._build_edges()
        bc._build_fans()
        return bc

    def _build_edges(self):
        eid = {}
        for fi, f in enumerate(self.c2):
            cyc = f.poly
            ids = []
            for i in range(len(cyc)):
                a, b = cyc[i], cyc[(i + 1) % len(cyc)]
                key = (a, b) if a < b else (b, a)
                e = eid.get(key)
                if e is None:
                    e = len(self.c1)
                    eid[key] = e
                    self.c1.append(Cell1(key))
                self.c1[e].faces.append(fi)
                ids.append(e)
            f.edges = ids

    def _build_fans(self):
        """Cyclic fan of (2-cell, 3-cell) pairs around every 1-cell.

        Using the unbounded cell, every edge fan closes into a single cycle;
        the fan starts at the lowest incident 2-cell id.
        """
        for e, c1 in enumerate(self.c1):
            a, b = c1.ends
            pa, pb = self.verts[a], self.verts[b]
            axis = vsub(pb, pa)
            faces = sorted(set(c1.faces))

            def direction(fi):
                f = self.c2[fi]
                pts = [self.verts[v] for v in f.poly]
                return vsub(centroid(pts), pa)

            ring = sort_directions_around(axis, faces, direction)
            # walk the ring: between consecutive faces sits exactly one cell
            fan = []
            m = len(ring)
            start = ring.index(min(ring))
            ring = ring[start:] + ring[:start]
            for i in range(m):
                f1, f2 = ring[i], ring[(i + 1) % m]
                shared = set(self.c2[f1].cells) & set(self.c2[f2].cells)
                if len(shared) == 1:
                    cell = shared.pop()
                elif m == 2:
                    # two faces, two shared cells: orient by position
                    cells = sorted(set(self.c2[f1].cells))
                    cell = cells[0] if i == 0 else cells[1]
                else:
                    raise AssertionError("ambiguous fan at edge %d" % e)
                fan.append((ring[i], cell))
            c1.fan = fan

    # -- incidence helpers ---------------------------------------------------

    def edge_ends(self, e):
        return self.c1[e].ends

    def faces_of_edge(self, e):
        return sorted(set(self.c1[e].faces))

    def edges_of_face(self, fi):
        return self.c2[fi].edges

    def verts_of_face(self, fi):
        return self.c2[fi].poly

    def cells_of_face(self, fi):
        return self.c2[fi].cells

    def face_point(self, fi):
        return centroid([self.verts[v] for v in self.c2[fi].poly])

    def edge_point(self, e):
        a, b = self.c1[e].ends
        return centroid([self.verts[a], self.verts[b]])

    def edges_of_cell(self, ci):
        out = set()
        for fi in self.c3[ci].faces:
            out.update(self.c2[fi].edges)
        return sorted(out)

    def verts_of_cell(self, ci):
        out = set()
        for fi in self.c3[ci].faces:
            out.update(self.c2[fi].poly)
        return sorted(out)

    def face_corner_edges(self, fi, v):
        """The two edges of face fi meeting vertex v."""
        out = [e for e in self.c2[fi].edges if v in self.c1[e].ends]
        assert len(out) == 2
        return out

    def cell_count(self):
        return len(self.c3) - 1

    # -- cone subdivision ----------------------------------------------------

    def cone_subdivide(self):
        """Star-subdivide every bounded 3-cell from its interior point.

        The 2-skeleton is preserved cell-for-cell (base 2-cells keep their
        ids); each bounded 3-cell becomes one pyramid per face, and one new
        interior triangle appears per (cell, edge) incidence.  Windings,
        regions and image data are inherited.
        """
        out = BaseComplex()
        out.verts = list(self.verts)
        out.c1 = [Cell1(c.ends) for c in self.c1]
        out.c2 = []
        for f in self.c2:
            nf = Cell2(f.plane, list(f.poly))
            nf.triangles = f.triangles
            nf.level = f.level
            out.c2.append(nf)
        out.c3 = [Cell3([], None, False)]
        out.c3[UNBOUNDED].faces = list(self.c3[UNBOUNDED].faces)

        apex_of = {}
        for ci in range(1, len(self.c3)):
            v = len(out.verts)
            out.verts.append(self.c3[ci].point)
            apex_of[ci] = v
        cone_edge = {}   # (ci, vertex) -> new 1-cell id
        cone_face = {}   # (ci, edge) -> new 2-cell id

        def get_cone_edge(ci, v):
            key = (ci, v)
            e = cone_edge.get(key)
            if e is None:
                e = len(out.c1)
                a = apex_of[ci]
                out.c1.append(Cell1((min(a, v), max(a, v))))
                cone_edge[key] = e
            return e

        for ci in range(1, len(self.c3)):
            old = self.c3[ci]
            for e in self.edges_of_cell(ci):
                a, b = self.c1[e].ends
                fi = len(out.c2)
                apex = apex_of[ci]
                pa, pb = self.verts[a], self.verts[b]
                pl = Plane.through(self.c3[ci].point, pa, pb)
                nf = Cell2(pl, [apex, a, b])
                nf.edges = [get_cone_edge(ci, a), e, get_cone_edge(ci, b)]
                out.c2.append(nf)
                cone_face[(ci, e)] = fi
            for bfi in old.faces:
                f = self.c2[bfi]
                pyramid = [bfi] + [cone_face[(ci, e)] for e in f.edges]
                pt = centroid([self.c3[ci].point]
                              + [self.verts[v] for v in f.poly])
                nc = Cell3(sorted(pyramid), pt, True)
                nc.winding = old.winding
                nc.region = old.region
                nc.parent = ci
                out.c3.append(nc)

        # rebuild incidences (base 2-cells recompute their edge cycles; cone
        # faces already carry edge ids)
        for e in out.c1:
            e.faces = []
        n_base = len(self.c2)
        eid = {c.ends: i for i, c in enumerate(out.c1)}
        for fi, f in enumerate(out.c2):
            if fi < n_base:
                ids = []
                for i in range(len(f.poly)):
                    a, b = f.poly[i], f.poly[(i + 1) % len(f.poly)]
                    key = (a, b) if a < b else (b, a)
                    ids.append(eid[key])
                f.edges = ids
            for e in f.edges:
                out.c1[e].faces.append(fi)
        for f in out.c2:
            f.cells = [None, None]
        for ci in range(1, len(out.c3)):
            c3 = out.c3[ci]
            for fi in c3.faces:
                f = out.c2[fi]
                s = f.plane.side(c3.point)
                assert s != 0
                slot = 0 if s < 0 else 1
                assert f.cells[slot] is None
                f.cells[slot] = ci
        for fi, f in enumerate(out.c2):
            for slot in (0, 1):
                if f.cells[slot] is None:
                    f.cells[slot] = UNBOUNDED
        out._build_fans()
        return out


def centroid_key(p):
    return (p[0], p[1], p[2])


def _vertices_on_segments(verts, raw_faces):
    """Map (a, b) sorted vertex pair -> interior vertices on the segment,
    for every polygon edge occurring in raw_faces."""
    from .geometry import point_on_segment
    pairs = set()
    for _, pids in raw_faces:
        m = len(pids)
        for i in range(m):
            a, b = pids[i], pids[(i + 1) % m]
            pairs.add((a, b) if a < b else (b, a))
    order = sorted(range(len(verts)), key=lambda v: verts[v])
    coords = [verts[v] for v in order]
    xs = [p[0] for p in coords]
    from bisect import bisect_left, bisect_right
    out = {}
    for (a, b) in pairs:
        pa, pb = verts[a], verts[b]
        lo = tuple(min(pa[k], pb[k]) for k in range(3))
        hi = tuple(max(pa[k], pb[k]) for k in range(3))
        inside = []
        for idx in range(bisect_left(xs, lo[0]), bisect_right(xs, hi[0])):
            p = coords[idx]
            if not (lo[1] <= p[1] <= hi[1] and lo[2] <= p[2] <= hi[2]):
                continue
            v = order[idx]
            if v != a and v != b and point_on_segment(p, pa, pb):
                inside.append(v)
        if inside:
            d = vsub(pb, pa)
            ax = max(range(3), key=lambda i: abs(d[i]))
            inside.sort(key=lambda v: (verts[v][ax] - pa[ax]) / d[ax])
            out[(a, b)] = inside
    return out


def _refine_polygon(pids, verts, on_line):
    """Insert interior vertices into a polygon cycle."""
    out = []
    m = len(pids)
    for i in range(m):
        a, b = pids[i], pids[(i + 1) % m]
        out.append(a)
        key = (a, b) if a < b else (b, a)
        mid = on_line.get(key)
        if mid:
            out.extend(mid if a < b else list(reversed(mid)))
    return out
