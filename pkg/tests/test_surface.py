"""Input parsing and structural validation."""
import json

import pytest

from extend3 import samples
from extend3.surface import ImmersedSurface, InputError, jitter_surface, \
    parse_surface


def test_parse_octahedron_roundtrip():
    s = samples.octahedron()
    doc = s.to_document()
    s2 = parse_surface(json.dumps(doc))
    assert s2.vertices == s.vertices
    assert s2.triangles == s.triangles
    assert len(s2.triangles) == 8


def test_parse_rational_strings():
    doc = {"vertices": [["1/2", 0, 0], [0, "1/2", 0], [0, 0, "1/2"],
                        ["-1/6", "-1/6", "-1/6"]],
           "triangles": [[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]]}
    s = parse_surface(doc)
    assert s.euler_characteristic() == 2


def test_reject_floats():
    doc = {"vertices": [[0.5, 0, 0]], "triangles": []}
    with pytest.raises(InputError):
        parse_surface(doc)


def test_reject_reversed_triangle():
    s = samples.octahedron()
    tris = [list(t) for t in s.triangles]
    tris[0] = [tris[0][0], tris[0][2], tris[0][1]]
    doc = {"vertices": [[str(c) for c in v] for v in s.vertices],
           "triangles": tris}
    with pytest.raises(InputError, match="orientation|borders"):
        parse_surface(doc)


def test_reject_open_surface():
    doc = {"vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0]],
           "triangles": [[0, 1, 2]]}
    with pytest.raises(InputError, match="not closed|at least"):
        parse_surface(doc)


def test_reject_degenerate_triangle():
    doc = {"vertices": [[0, 0, 0], [1, 0, 0], [2, 0, 0], [0, 1, 0]],
           "triangles": [[0, 1, 2], [0, 2, 1], [0, 1, 3], [0, 3, 1]]}
    with pytest.raises(InputError, match="degenerate|orientation|borders"):
        parse_surface(doc)


def test_torus_euler_characteristic():
    s = samples.box_torus()
    assert s.euler_characteristic() == 0
    assert s.component_count() == 1


def test_sphere_samples_euler():
    assert samples.octahedron().euler_characteristic() == 2
    assert samples.two_sheet_sphere().euler_characteristic() == 2
    assert samples.well_sphere().euler_characteristic() == 2


def test_three_slabs_disconnected():
    s = samples.three_slabs()
    assert s.component_count() == 3
    assert s.euler_characteristic() == 6


def test_doubled_octahedron_structurally_closed():
    s = samples.doubled_octahedron()
    assert s.euler_characteristic() == 2
    assert len(s.triangles) == 14


def test_jitter_deterministic_and_valid():
    s = samples.octahedron()
    j1 = jitter_surface(s, seed=7)
    j2 = jitter_surface(s, seed=7)
    assert j1.vertices == j2.vertices
    j3 = jitter_surface(s, seed=8)
    assert j3.vertices != j1.vertices
    assert j1.euler_characteristic() == 2
    # magnitude bound: 2^-20 of the bbox size times |h| <= 1
    for v, w in zip(s.vertices, j1.vertices):
        for c, d in zip(v, w):
            assert abs(c - d) <= 2 * 2 ** -20
