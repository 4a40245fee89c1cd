"""
Immersed-surface input: parsing, structural validation and the optional
deterministic jitter utility.
"""
import json
from fractions import Fraction

from .geometry import triangle_normal, is_zero


class InputError(ValueError):
    """Malformed or structurally invalid input document."""


def _parse_number(x):
    if isinstance(x, bool):
        raise InputError("boolean is not a coordinate")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise InputError("floating point coordinates are not accepted; "
                         "use ints, decimal strings or \"p/q\"")
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise InputError("cannot parse coordinate %r" % (x,))
    raise InputError("cannot parse coordinate %r" % (x,))


class ImmersedSurface:
    """A triangulated closed oriented surface with a simplexwise-linear map
    into rational R^3.

    vertices: list of rational 3-vectors (tuples of Fraction).
    triangles: list of oriented (i, j, k) vertex index triples.
    Construction validates all structural invariants: closed surface,
    coherent orientation, no degenerate triangle.  Transversality of the
    induced immersion is checked separately (see arrangement module).
    """

    def __init__(self, vertices, triangles):
        self.vertices = [tuple(Fraction(c) for c in v) for v in vertices]
        self.triangles = [tuple(t) for t in triangles]
        self._validate_structure()

    # -- structure ---------------------------------------------------------

    def _validate_structure(self):
        nv = len(self.vertices)
        if nv < 4:
            raise InputError("need at least 4 vertices")
        for v in self.vertices:
            if len(v) != 3:
                raise InputError("vertices must have 3 coordinates")
        # Duplicate vertex coordinates are structurally legal (the immersion
        # may identify points); transversality validation rejects the
        # resulting sheet contacts.
        for t in self.triangles:
            if len(t) != 3 or len(set(t)) != 3:
                raise InputError("triangle %r is not a proper triple" % (t,))
            for i in t:
                if not (0 <= i < nv):
                    raise InputError("triangle index %d out of range" % i)
            p, q, r = (self.vertices[i] for i in t)
            if is_zero(triangle_normal(p, q, r)):
                raise InputError("degenerate triangle %r" % (t,))
        # closed surface: every edge in exactly two triangles ...
        directed = {}
        for ti, (a, b, c) in enumerate(self.triangles):
            for u, v in ((a, b), (b, c), (c, a)):
                if (u, v) in directed:
                    raise InputError(
                        "edge (%d,%d) repeated with equal direction; "
                        "incoherent orientation" % (u, v))
                directed[(u, v)] = ti
        for (u, v) in directed:
            if (v, u) not in directed:
                raise InputError(
                    "edge (%d,%d) borders only one triangle; not closed"
                    % (u, v))
        # ... and vertex links are single circles.
        star = {}
        for a, b, c in self.triangles:
            star.setdefault(a, []).append((b, c))
            star.setdefault(b, []).append((c, a))
            star.setdefault(c, []).append((a, b))
        for v in range(nv):
            arcs = star.get(v)
            if not arcs:
                raise InputError("isolated vertex %d" % v)
            nxt = {}
            for b, c in arcs:
                if b in nxt:
                    raise InputError("vertex %d link is not a circle" % v)
                nxt[b] = c
            start = arcs[0][0]
            cur, count = start, 0
            while True:
                cur = nxt[cur]
                count += 1
                if cur == start:
                    break
                if count > len(arcs):
                    raise InputError("vertex %d link does not close" % v)
            if count != len(arcs):
                raise InputError("vertex %d link is not connected" % v)

    # -- derived data ------------------------------------------------------

    def triangle_points(self, ti):
        a, b, c = self.triangles[ti]
        return (self.vertices[a], self.vertices[b], self.vertices[c])

    def triangle_plane(self, ti):
        """Supporting plane of triangle ti (canonical form, cached)."""
        cache = getattr(self, "_plane_cache", None)
        if cache is None:
            from .geometry import Plane
            cache = [Plane.through(*self.triangle_points(i))
                     for i in range(len(self.triangles))]
            self._plane_cache = cache
        return cache[ti]

    def triangle_bbox(self, ti):
        cache = getattr(self, "_bbox_cache", None)
        if cache is None:
            cache = []
            for i in range(len(self.triangles)):
                pts = self.triangle_points(i)
                cache.append(tuple((min(p[k] for p in pts),
                                    max(p[k] for p in pts))
                                   for k in range(3)))
            self._bbox_cache = cache
        return cache[ti]

    def edges(self):
        """Undirected edges as sorted index pairs."""
        out = set()
        for a, b, c in self.triangles:
            for u, v in ((a, b), (b, c), (c, a)):
                out.add((min(u, v), max(u, v)))
        return sorted(out)

    def euler_characteristic(self):
        return len(self.vertices) - len(self.edges()) + len(self.triangles)

    def component_count(self):
        parent = list(range(len(self.triangles)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        by_edge = {}
        for ti, (a, b, c) in enumerate(self.triangles):
            for u, v in ((a, b), (b, c), (c, a)):
                by_edge.setdefault((min(u, v), max(u, v)), []).append(ti)
        for pair in by_edge.values():
            r = find(pair[0])
            for t in pair[1:]:
                parent[find(t)] = r
        return len({find(i) for i in range(len(self.triangles))})

    def bounds(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        zs = [v[2] for v in self.vertices]
        return (min(xs), min(ys), min(zs)), (max(xs), max(ys), max(zs))

    def reversed_orientation(self):
        return ImmersedSurface(self.vertices,
                               [(a, c, b) for a, b, c in self.triangles])

    def to_document(self):
        def num(q):
            return int(q) if q.denominator == 1 else "%d/%d" % (q.numerator,
                                                                q.denominator)
        return {"vertices": [[num(c) for c in v] for v in self.vertices],
                "triangles": [list(t) for t in self.triangles]}


def parse_surface(document):
    """Parse and validate an input document (dict or JSON text).

    Schema: {"vertices": [[num,num,num], ...], "triangles": [[i,j,k], ...]}
    where num is an integer, a decimal string, or "p/q".
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise InputError("not valid JSON: %s" % e)
    if not isinstance(document, dict):
        raise InputError("document must be a JSON object")
    try:
        raw_vertices = document["vertices"]
        raw_triangles = document["triangles"]
    except (KeyError, TypeError):
        raise InputError("document needs 'vertices' and 'triangles'")
    if not isinstance(raw_vertices, list) or not isinstance(raw_triangles, list):
        raise InputError("'vertices' and 'triangles' must be lists")
    vertices = []
    for v in raw_vertices:
        if not isinstance(v, list) or len(v) != 3:
            raise InputError("vertex %r is not a 3-vector" % (v,))
        vertices.append(tuple(_parse_number(c) for c in v))
    triangles = []
    for t in raw_triangles:
        if not isinstance(t, list) or len(t) != 3:
            raise InputError("triangle %r is not an index triple" % (t,))
        for i in t:
            if not isinstance(i, int) or isinstance(i, bool):
                raise InputError("triangle index %r is not an integer" % (i,))
        triangles.append(tuple(t))
    return ImmersedSurface(vertices, triangles)


def jitter_surface(surface, seed, magnitude_exp=20):
    """Deterministic rational jitter: each coordinate moves by
    h * size / 2**magnitude_exp with h in {-1..1} drawn from a seeded
    linear congruential sequence.  The result is re-validated structurally;
    transversality must be re-checked by the caller.
    """
    lo, hi = surface.bounds()
    size = max(hi[i] - lo[i] for i in range(3))
    if size == 0:
        raise InputError("degenerate bounding box")
    step = size / Fraction(2 ** magnitude_exp)
    state = (seed * 6364136223846793005 + 1442695040888963407) % (2 ** 64)
    out = []
    for v in surface.vertices:
        coords = []
        for c in v:
            state = (state * 6364136223846793005 + 1442695040888963407) % (2 ** 64)
            h = (state >> 33) % 2003 - 1001  # in [-1001, 1001]
            coords.append(c + Fraction(h, 1001) * step)
        out.append(tuple(coords))
    return ImmersedSurface(out, surface.triangles)
