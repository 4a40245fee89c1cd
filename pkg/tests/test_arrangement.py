"""Arrangement, winding numbers, transversality and strata."""
import random
from fractions import Fraction

import pytest

from extend3 import samples
from extend3.arrangement import (NoExtensionError, build_arrangement,
                                 is_thin_trivalent, strata,
                                 validate_transversality, winding_number,
                                 winding_number_multiray)
from extend3.geometry import vec
from extend3.surface import InputError


def random_rational_point(rng, span=9):
    def q():
        return Fraction(rng.randint(-span * 8, span * 8), 8)
    return vec(q(), q(), q())


# -- winding numbers ----------------------------------------------------------

def test_octahedron_winding_values():
    s = samples.octahedron()
    assert winding_number(s, vec(0, 0, 0)) == 1
    assert winding_number(s, vec(10, 0, 0)) == 0
    assert winding_number(s, vec(Fraction(1, 3), Fraction(1, 3),
                                 Fraction(1, 5))) == 1


def test_octahedron_point_on_image_rejected():
    s = samples.octahedron()
    with pytest.raises(InputError):
        winding_number(s, vec(1, 0, 0))
    with pytest.raises(InputError):
        winding_number(s, vec(Fraction(1, 2), Fraction(1, 2), 0))


def test_reversed_octahedron_winding():
    s = samples.reversed_octahedron()
    assert winding_number(s, vec(0, 0, 0)) == -1


def test_two_sheet_winding_levels():
    s = samples.two_sheet_sphere()
    assert winding_number(s, vec(0, 0, 0)) == 2            # inside s
    assert winding_number(s, vec(3, 3, 0)) == 1            # shell
    assert winding_number(s, vec(0, 0, 10)) == 0           # outside
    assert winding_number(s, vec(0, 0, 3)) == 2            # tube bore, z<4
    assert winding_number(s, vec(0, 0, Fraction(9, 2))) == 1  # chimney z>4


def test_winding_ray_independence_on_corpus():
    rng = random.Random(20240)
    for s in (samples.octahedron(), samples.two_sheet_sphere()):
        done = 0
        while done < 12:
            p = random_rational_point(rng, span=5)
            try:
                w0 = winding_number(s, p)
                w = winding_number_multiray(s, p, rays=5)
            except InputError:
                continue
            assert w == w0
            done += 1


def oracle_winding(surface, p, rng):
    """Independent signed-ray oracle: random rational directions, 5 rays in
    agreement, crossing signs computed from scratch."""
    from extend3.geometry import dot, triangle_normal, vadd, vscale, vsub, \
        point_in_triangle
    values = []
    attempts = 0
    while len(values) < 5 and attempts < 400:
        attempts += 1
        d = vec(rng.randint(-999, 999), rng.randint(-999, 999),
                rng.randint(-999, 999))
        if d == (0, 0, 0):
            continue
        total = 0
        ok = True
        for ti in range(len(surface.triangles)):
            tri = surface.triangle_points(ti)
            n = triangle_normal(*tri)
            den = dot(n, d)
            num = dot(n, vsub(tri[0], p))
            if den == 0:
                if num == 0:
                    ok = False
                    break
                continue
            t = Fraction(num, den)
            if t <= 0:
                continue
            x = vadd(p, vscale(t, d))
            pos = point_in_triangle(x, tri)
            if pos == "in":
                total += 1 if den > 0 else -1
            elif pos != "out":
                ok = False
                break
        if ok:
            values.append(total)
    assert values and all(v == values[0] for v in values)
    return values[0]


def test_winding_oracle_agreement_100_points():
    s = samples.two_sheet_sphere()
    rng = random.Random(424242)
    done = 0
    while done < 100:
        p = random_rational_point(rng, span=6)
        try:
            w = winding_number(s, p)
        except InputError:
            continue
        assert w == oracle_winding(s, p, rng)
        done += 1


# -- transversality -----------------------------------------------------------

def test_octahedron_transversality_ok():
    rep = validate_transversality(samples.octahedron())
    assert rep.ok
    assert rep.double_edges == [] and rep.triple_vertices == []


def test_two_sheet_double_locus_one_loop():
    rep = validate_transversality(samples.two_sheet_sphere())
    assert rep.ok
    assert rep.triple_vertices == []
    # the crossing loop is a single cycle of double edges
    assert len(rep.double_edges) >= 4


def test_doubled_octahedron_overlap_violation():
    rep = validate_transversality(samples.doubled_octahedron())
    assert not rep.ok
    kinds = {v[0] for v in rep.violations}
    assert any("overlap" in k for k in kinds)


def test_slabs_triple_points():
    rep = validate_transversality(samples.three_slabs())
    assert rep.ok
    assert len(rep.triple_vertices) == 8


# -- arrangement structure ----------------------------------------------------

def test_octahedron_regions(octahedron_arr):
    assert len(octahedron_arr.regions) == 2
    assert octahedron_arr.max_winding == 1


def test_two_sheet_regions(two_sheet_arr):
    assert len(two_sheet_arr.regions) == 3
    ws = sorted({two_sheet_arr.raw.c3[c].winding
                 for r in two_sheet_arr.regions for c in r})
    assert ws == [0, 1, 2]


def test_image_cells_single_sheet(two_sheet_arr):
    raw = two_sheet_arr.raw
    for f in raw.c2:
        if f.is_image:
            assert len(f.triangles) >= 1
            wm = raw.c3[f.cells[0]].winding
            wp = raw.c3[f.cells[1]].winding
            assert abs(wm - wp) == 1
            assert f.level == max(wm, wp)


def test_incidence_boundary_of_boundary(octahedron_arr):
    base = octahedron_arr.base
    for ci in range(1, len(base.c3)):
        # every edge of the cell lies in exactly two of its faces
        counts = {}
        for fi in base.c3[ci].faces:
            for e in base.c2[fi].edges:
                counts[e] = counts.get(e, 0) + 1
        assert set(counts.values()) == {2}


def test_fans_are_cycles(octahedron_arr):
    base = octahedron_arr.base
    for e, c1 in enumerate(base.c1):
        fan = c1.fan
        faces = [f for f, _ in fan]
        assert sorted(faces) == sorted(set(c1.faces))
        for i in range(len(fan)):
            f_cur, cell = fan[i]
            f_next = fan[(i + 1) % len(fan)][0]
            assert cell in base.c2[f_cur].cells
            assert cell in base.c2[f_next].cells


# -- strata ---------------------------------------------------------------------

def test_octahedron_strata(octahedron_arr):
    st = strata(octahedron_arr)
    assert len(st) == 1
    assert st[0].graph.is_empty
    assert len(st[0].components) == 1


def test_reversed_octahedron_no_extension():
    arr = build_arrangement(samples.reversed_octahedron())
    with pytest.raises(NoExtensionError, match="winding -1"):
        strata(arr)


def test_torus_strata(torus_arr):
    st = strata(torus_arr)
    assert len(st) == 1
    assert len(st[0].cells) == 48  # 8 donut boxes x 6 pyramids


def test_two_sheet_strata(two_sheet_strata):
    st = two_sheet_strata
    assert [x.k for x in st] == [1, 2]
    d1, d2 = st
    assert set(d2.cells) <= set(d1.cells)
    assert d2.graph.is_empty is False
    # G_2 is one loop: every vertex degree 2, single component
    assert all(d == 2 for d in d2.graph.degrees().values())
    assert len(d2.graph.components()) == 1
    assert d1.graph.is_empty


def test_slabs_strata_structure(slabs_strata):
    st = slabs_strata
    assert [x.k for x in st] == [1, 2, 3]
    g3 = st[2].graph
    degs = sorted(g3.degrees().values())
    # G_3 is the edge graph of the center box: 8 corners of degree 3
    assert degs.count(3) == 8
    assert set(degs) <= {2, 3}


def test_slabs_thin_trivalent(slabs_arr, slabs_strata):
    st = slabs_strata
    host = set(st[1].boundary_faces)
    # G_3 restricted to bd D_2 must be a thin trivalent graph of G_2
    ok = is_thin_trivalent(st[2].graph, st[1].graph, slabs_arr.base, host)
    assert ok


def test_thin_trivalent_vacuous(two_sheet_arr, two_sheet_strata):
    st = two_sheet_strata
    from extend3.arrangement import EmbeddedGraph
    empty = EmbeddedGraph(two_sheet_arr.base, [])
    host = set(st[0].boundary_faces)
    assert is_thin_trivalent(empty, st[0].graph, two_sheet_arr.base, host)


def test_thin_trivalent_degree2_rejected(two_sheet_arr, two_sheet_strata):
    st = two_sheet_strata
    host = set(st[1].boundary_faces)
    g2 = st[1].graph
    # G_2 against itself: shares degree-2 points -> not thin trivalent
    assert not is_thin_trivalent(g2, g2, two_sheet_arr.base, host)
