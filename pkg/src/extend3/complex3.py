"""
Instance complexes: compact 3-complexes whose 3-cells are instances of base
arrangement cells glued along geometrically identical 2-cells.  Strata views,
cut complexes, assembled extensions and the branched manifolds of the
cancellation calculus are all Manifold3Complex objects.

A face slot is (instance index, base 2-cell id); a gluing is an involution on
slots pairing two slots over the same base 2-cell (every gluing in the
pipeline identifies points with equal coordinates).
"""
from .groups import Presentation


class Manifold3Complex:
    """A 3-complex of glued base-cell instances with derived 2/1/0-cell
    instances, boundary surface, vertex links and a dual fundamental-group
    presentation.  allow_cones=True admits branched 3-manifolds (interior
    vertex links may be closed surfaces other than spheres)."""

    def __init__(self, base, insts, glue, allow_cones=False):
        self.base = base
        self.insts = list(insts)            # (base_c3, tag)
        self.glue = dict(glue)              # slot -> slot
        self.allow_cones = allow_cones
        for s, t in self.glue.items():
            assert s != t, "face instance glued to itself"
            assert self.glue.get(t) == s, "gluing is not an involution"
            assert s[1] == t[1], "gluing must preserve the base 2-cell"
        self._build()

    @staticmethod
    def from_base_cells(base, cells, tag=0, allow_cones=False):
        """The subcomplex of the base spanned by `cells`, glued along every
        base 2-cell interior to the set."""
        cells = sorted(cells)
        idx = {c: i for i, c in enumerate(cells)}
        glue = {}
        for c in cells:
            for f in base.c3[c].faces:
                cm, cp = base.c2[f].cells
                if cm in idx and cp in idx:
                    glue[(idx[cm], f)] = (idx[cp], f)
                    glue[(idx[cp], f)] = (idx[cm], f)
        return Manifold3Complex(base, [(c, tag) for c in cells], glue,
                                allow_cones)

    # -- construction ---------------------------------------------------------

    def _build(self):
        base = self.base
        self.inst_of = {}
        for i, (c, tag) in enumerate(self.insts):
            assert (c, tag) not in self.inst_of, "duplicate instance"
            self.inst_of[(c, tag)] = i

        # 2-cell instances
        self.faces = []                     # ('int', slot_a, slot_b) / ('bd', slot, None)
        self.face_id = {}                   # slot -> face instance id
        for i in range(len(self.insts)):
            c = self.insts[i][0]
            for f in base.c3[c].faces:
                slot = (i, f)
                if slot in self.face_id:
                    continue
                other = self.glue.get(slot)
                if other is None:
                    self.face_id[slot] = len(self.faces)
                    self.faces.append(("bd", slot, None))
                else:
                    assert other[0] < len(self.insts), "glue to missing instance"
                    fid = len(self.faces)
                    self.face_id[slot] = fid
                    self.face_id[other] = fid
                    a, b = sorted((slot, other))
                    self.faces.append(("int", a, b))

        self._build_edges()
        self._build_vertices()

    def _edge_side_faces(self, i, e):
        """The two base 2-cells of instance i's base cell bounding its wedge
        at base edge e, in fan order."""
        c = self.insts[i][0]
        fan = self.base.c1[e].fan
        for k, (f, cc) in enumerate(fan):
            if cc == c:
                return (f, fan[(k + 1) % len(fan)][0])
        raise AssertionError("cell not in fan")

    def _build_edges(self):
        base = self.base
        by_edge = {}
        for i in range(len(self.insts)):
            c = self.insts[i][0]
            for e in base.edges_of_cell(c):
                by_edge.setdefault(e, []).append(i)
        self.edges = []     # (base_e, kind, chain); chain = [(inst, f_in, f_out)]
        self.edge_id = {}   # (inst, base_e) -> edge instance id
        for e in sorted(by_edge):
            nodes = sorted(set(by_edge[e]))
            sides = {i: self._edge_side_faces(i, e) for i in nodes}
            seen = set()
            for start in nodes:
                if start in seen:
                    continue
                kind, chain = _trace_chain(start, sides, self.glue.get)
                members = [n for n, _, _ in chain]
                assert len(members) == len(set(members))
                seen.update(members)
                eid = len(self.edges)
                for n in members:
                    self.edge_id[(n, e)] = eid
                self.edges.append((e, kind, chain))

    def _build_vertices(self):
        base = self.base
        by_vert = {}
        for i in range(len(self.insts)):
            c = self.insts[i][0]
            for v in base.verts_of_cell(c):
                by_vert.setdefault(v, []).append(i)
        self.vertices = []      # (base_v, [inst...])
        self.vertex_id = {}     # (inst, base_v) -> vertex instance id
        for v in sorted(by_vert):
            nodes = sorted(set(by_vert[v]))
            adj = {i: [] for i in nodes}
            for i in nodes:
                c = self.insts[i][0]
                for f in base.c3[c].faces:
                    if v not in base.c2[f].poly:
                        continue
                    other = self.glue.get((i, f))
                    if other is not None:
                        adj[i].append(other[0])
            seen = set()
            for start in nodes:
                if start in seen:
                    continue
                stack, comp = [start], []
                seen.add(start)
                while stack:
                    cur = stack.pop()
                    comp.append(cur)
                    for nb in adj[cur]:
                        if nb not in seen:
                            seen.add(nb)
                            stack.append(nb)
                vid = len(self.vertices)
                for i in comp:
                    self.vertex_id[(i, v)] = vid
                self.vertices.append((v, sorted(comp)))

    # -- basic queries ----------------------------------------------------------

    def cell_counts(self):
        return {0: len(self.vertices), 1: len(self.edges),
                2: len(self.faces), 3: len(self.insts)}

    def euler_characteristic(self):
        c = self.cell_counts()
        return c[0] - c[1] + c[2] - c[3]

    def boundary_faces(self):
        return [i for i, f in enumerate(self.faces) if f[0] == "bd"]

    def interior_faces(self):
        return [i for i, f in enumerate(self.faces) if f[0] == "int"]

    def face_base(self, fid):
        return self.faces[fid][1][1]

    def face_insts(self, fid):
        f = self.faces[fid]
        return (f[1][0],) if f[0] == "bd" else (f[1][0], f[2][0])

    def is_boundary_face(self, fid):
        return self.faces[fid][0] == "bd"

    def crossing_sign(self, inst, base_f):
        """+1 when leaving `inst` through base_f along the plane normal."""
        c = self.insts[inst][0]
        cells = self.base.c2[base_f].cells
        return 1 if cells[0] == c else -1

    def edge_base(self, eid):
        return self.edges[eid][0]

    def is_boundary_edge(self, eid):
        return self.edges[eid][1] == "path"

    def edge_faces(self, eid):
        """Face instance ids around the edge instance, in fan order (for a
        path the first and last entries are the boundary faces)."""
        base_e, kind, chain = self.edges[eid]
        out = []
        if kind == "path":
            out.append(self.face_id[(chain[0][0], chain[0][1])])
        for (i, f_in, f_out) in chain:
            out.append(self.face_id[(i, f_out)])
        return out

    def boundary_edge_profile(self, eid):
        """(first boundary face, [(interior face, sign)...], last boundary
        face) across a path edge instance; sign +1 when the fan walk crosses
        the interior face from its base minus side."""
        base_e, kind, chain = self.edges[eid]
        assert kind == "path"
        first = self.face_id[(chain[0][0], chain[0][1])]
        last = self.face_id[(chain[-1][0], chain[-1][2])]
        interior = []
        for (i, f_in, f_out) in chain[:-1]:
            fid = self.face_id[(i, f_out)]
            interior.append((fid, self.crossing_sign(i, f_out)))
        return first, interior, last

    def edge_relator_crossings(self, eid):
        """[(interior face id, sign)] around a cycle edge instance."""
        base_e, kind, chain = self.edges[eid]
        assert kind == "cycle"
        out = []
        for (i, f_in, f_out) in chain:
            out.append((self.face_id[(i, f_out)],
                        self.crossing_sign(i, f_out)))
        return out

    def vertex_base(self, vid):
        return self.vertices[vid][0]

    # -- links -------------------------------------------------------------------

    def vertex_link(self, vid):
        """('sphere'|'disk'|'cone'|'invalid', chi, boundary_edge_count)."""
        v, comp = self.vertices[vid]
        base = self.base
        link_faces = 0
        link_edges = set()
        link_verts = set()
        bd_edges = 0
        for i in comp:
            c = self.insts[i][0]
            link_faces += 1
            for f in base.c3[c].faces:
                if v in base.c2[f].poly:
                    link_edges.add(self.face_id[(i, f)])
            for e in base.edges_of_cell(c):
                if v in base.c1[e].ends:
                    link_verts.add(self.edge_id[(i, e)])
        for fid in link_edges:
            if self.faces[fid][0] == "bd":
                bd_edges += 1
        chi = len(link_verts) - len(link_edges) + link_faces
        if bd_edges == 0:
            kind = "sphere" if chi == 2 else "cone"
        else:
            kind = "disk" if chi == 1 else "invalid"
        return kind, chi, bd_edges

    def manifold_defects(self):
        """Vertex instances whose links violate the (branched) manifold
        conditions.  Empty list == valid."""
        out = []
        for vid in range(len(self.vertices)):
            kind, chi, bd = self.vertex_link(vid)
            if kind == "invalid":
                out.append((vid, "boundary link with chi=%d" % chi))
            elif kind == "cone" and not self.allow_cones:
                out.append((vid, "interior link with chi=%d" % chi))
        return out

    def cone_points(self):
        """Vertex instances whose links are closed surfaces != S^2 (B(K))."""
        out = []
        for vid in range(len(self.vertices)):
            kind, chi, bd = self.vertex_link(vid)
            if kind == "cone":
                out.append(vid)
        return out

    # -- connectivity --------------------------------------------------------------

    def components(self):
        """Connected components as lists of instance indices."""
        n = len(self.insts)
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                c = self.insts[i][0]
                for f in self.base.c3[c].faces:
                    other = self.glue.get((i, f))
                    if other is not None and not seen[other[0]]:
                        seen[other[0]] = True
                        stack.append(other[0])
            comps.append(sorted(comp))
        return comps

    def restrict(self, inst_subset):
        """Subcomplex on a set of instances; gluings to outside instances are
        severed (become boundary).  Returns (complex, old->new index map)."""
        inst_subset = sorted(inst_subset)
        remap = {old: new for new, old in enumerate(inst_subset)}
        insts = [self.insts[i] for i in inst_subset]
        glue = {}
        for (i, f), (j, g) in self.glue.items():
            if i in remap and j in remap:
                glue[(remap[i], f)] = (remap[j], g)
        return Manifold3Complex(self.base, insts, glue,
                                self.allow_cones), remap

    def cut(self, face_ids):
        """Sever the given interior face instances; returns the cut complex
        (same instance indexing)."""
        severed = set()
        for fid in face_ids:
            f = self.faces[fid]
            assert f[0] == "int", "cannot cut a boundary face"
            severed.add(f[1])
            severed.add(f[2])
        glue = {s: t for s, t in self.glue.items()
                if s not in severed}
        return Manifold3Complex(self.base, self.insts, glue,
                                self.allow_cones)

    # -- fundamental group -----------------------------------------------------------

    def pi1_data(self):
        """Dual presentation of pi_1: generators are interior face instances
        off a spanning tree of the dual graph, one relator per interior
        (cycle) edge instance.  Returns (Presentation, letter_of_face) where
        letter_of_face maps face instance -> signed generator index or 0."""
        if getattr(self, "_pi1_cache", None) is not None:
            return self._pi1_cache
        n = len(self.insts)
        tree_faces = set()
        seen = [False] * n
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = True
            frontier = [root]
            while frontier:
                nxt = []
                for i in frontier:
                    c = self.insts[i][0]
                    for f in sorted(self.base.c3[c].faces):
                        other = self.glue.get((i, f))
                        if other is not None and not seen[other[0]]:
                            seen[other[0]] = True
                            tree_faces.add(self.face_id[(i, f)])
                            nxt.append(other[0])
                frontier = nxt
        letter = {}
        gen = 0
        for fid in self.interior_faces():
            if fid in tree_faces:
                letter[fid] = 0
            else:
                gen += 1
                letter[fid] = gen
        relators = []
        for eid in range(len(self.edges)):
            if self.edges[eid][1] != "cycle":
                continue
            word = []
            for fid, sign in self.edge_relator_crossings(eid):
                g = letter[fid]
                if g:
                    word.append(g * sign)
            relators.append(tuple(word))
        pres = Presentation(gen, relators)
        self._pi1_cache = (pres, letter)
        return self._pi1_cache

    def word_for_crossings(self, crossings):
        """Word in the pi1 presentation for a face-crossing sequence
        [(face instance, sign), ...]."""
        _, letter = self.pi1_data()
        out = []
        for fid, sign in crossings:
            g = letter[fid]
            if g:
                out.append(g * sign)
        return tuple(out)


def _trace_chain(start, sides, glue_get):
    """Normalized wedge chain through `start`.

    Every chain entry is (inst, f_in, f_out): the two side faces of the wedge
    oriented along the walk.  For a path the first f_in and last f_out are
    unglued (boundary) faces; a cycle is glued throughout.  The walk operates
    on darts (inst, exit-slot), which handles 2-cycles and double gluings.
    """
    def partner(i, slot):
        f = sides[i][slot]
        o = glue_get((i, f))
        if o is None:
            return None
        j = o[0]
        t = 0 if sides[j][0] == f else 1
        return (j, t)

    n_guard = 0
    state = (start, 1)
    first = state
    while True:
        i, x = state
        p = partner(i, 1 - x)
        if p is None:
            break
        state = p
        n_guard += 1
        if state == first:
            return _collect_chain(state, sides, partner, cycle=True)
        if n_guard > 2 * len(sides) + 2:
            raise AssertionError("wedge rewind does not terminate")
    return _collect_chain(state, sides, partner, cycle=False)


def _collect_chain(state0, sides, partner, cycle):
    chain = []
    state = state0
    while True:
        i, x = state
        chain.append((i, sides[i][1 - x], sides[i][x]))
        p = partner(i, x)
        if p is None:
            assert not cycle
            return ("path", chain)
        j, t = p
        state = (j, 1 - t)
        if cycle and state == state0:
            return ("cycle", chain)
        if len(chain) > 2 * len(sides) + 2:
            raise AssertionError("chain walk does not terminate")
