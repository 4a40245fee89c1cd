"""Exact predicates and convex splitting."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extend3.geometry import (ConvexCell, Plane, point_in_triangle,
                              split_polygon, triangle_pair_intersection, vec,
                              sort_directions_around)

rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=8)


def test_plane_canonical_form():
    p1 = Plane(2, -4, 6, 8)
    assert p1.key == (1, -2, 3, 4)
    p2 = Plane(-1, 2, -3, -4)
    assert p2.key == (1, -2, 3, 4) and p2.flipped


def test_plane_through_orientation():
    pl = Plane.through(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
    assert pl.side(vec(0, 0, 1)) == 1
    assert pl.side(vec(0, 0, -1)) == -1
    assert pl.side(vec(Fraction(1, 3), Fraction(1, 3), 0)) == 0


def test_point_in_triangle_classes():
    tri = (vec(0, 0, 0), vec(4, 0, 0), vec(0, 4, 0))
    assert point_in_triangle(vec(1, 1, 0), tri) == "in"
    assert point_in_triangle(vec(2, 0, 0), tri) == "edge"
    assert point_in_triangle(vec(0, 0, 0), tri) == "vertex"
    assert point_in_triangle(vec(5, 0, 0), tri) == "out"
    assert point_in_triangle(vec(3, 3, 0), tri) == "out"


def test_triangle_pair_segment_crossing():
    t1 = (vec(-2, -2, 0), vec(2, -2, 0), vec(0, 2, 0))
    t2 = (vec(0, -3, -1), vec(0, -3, 1), vec(0, 3, 0))
    kind = triangle_pair_intersection(t1, t2)
    assert kind[0] == "segment"
    for p in kind[1:]:
        assert p[0] == 0 and p[2] == 0


def test_triangle_pair_coplanar_overlap():
    t1 = (vec(0, 0, 0), vec(4, 0, 0), vec(0, 4, 0))
    t2 = (vec(1, 1, 0), vec(3, 1, 0), vec(1, 3, 0))
    assert triangle_pair_intersection(t1, t2)[0] == "poly"


def test_triangle_pair_point_touch():
    t1 = (vec(0, 0, 0), vec(4, 0, 0), vec(0, 4, 0))
    t2 = (vec(0, 0, 0), vec(-4, 0, 1), vec(0, -4, 1))
    kind = triangle_pair_intersection(t1, t2)
    assert kind[0] == "point" and kind[1] == vec(0, 0, 0)


def test_split_polygon_square():
    poly = [vec(0, 0, 0), vec(2, 0, 0), vec(2, 2, 0), vec(0, 2, 0)]
    pl = Plane(1, 0, 0, -1)  # x = 1
    neg, pos, section = split_polygon(poly, pl)
    assert len(neg) == 4 and len(pos) == 4
    assert section is not None
    assert {p[0] for p in section} == {1}


def test_box_split_counts():
    box = ConvexCell.box(vec(0, 0, 0), vec(2, 2, 2))
    neg, pos = box.split(Plane(1, 1, 1, -5))
    assert neg is not None and pos is not None
    assert len(neg.faces) == 7
    assert len(pos.faces) == 4  # corner simplex at (2,2,2): 3 faces + section
    neg2, pos2 = box.split(Plane(1, 1, 1, -3))
    assert len(neg2.faces) == 7 and len(pos2.faces) == 7  # hexagonal section


def test_box_split_supporting_plane_no_cut():
    box = ConvexCell.box(vec(0, 0, 0), vec(2, 2, 2))
    neg, pos = box.split(Plane(1, 0, 0, 0))  # x = 0 supports a face
    assert (neg is None) != (pos is None)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(rationals, rationals, rationals),
                min_size=3, max_size=3))
def test_plane_sides_partition_triangle_vertices(pts):
    a, b, c = (vec(*p) for p in pts)
    try:
        pl = Plane.through(a, b, c)
    except ValueError:
        return
    assert pl.side(a) == pl.side(b) == pl.side(c) == 0


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_box_split_preserves_vertices_sidewise(a, b, d):
    box = ConvexCell.box(vec(-2, -2, -2), vec(2, 2, 2))
    if a == 0 and b == 0:
        return
    pl = Plane(a, b, 1, d)
    neg, pos = box.split(pl)
    parts = [p for p in (neg, pos) if p is not None]
    for part in parts:
        for v in part.vertices():
            assert pl.side(v) <= 0 if part is neg else pl.side(v) >= 0
    # every original vertex survives on its own side
    for v in box.vertices():
        s = pl.side(v)
        if s < 0:
            assert neg is not None and v in neg.vertices()
        if s > 0:
            assert pos is not None and v in pos.vertices()


def test_angular_sort_full_circle():
    axis = vec(0, 0, 1)
    dirs = {
        "e": vec(1, 0, 0), "ne": vec(1, 1, 0), "n": vec(0, 1, 0),
        "nw": vec(-1, 1, 0), "w": vec(-1, 0, 0), "sw": vec(-1, -1, 0),
        "s": vec(0, -1, 0), "se": vec(1, -1, 0),
    }
    items = sorted(dirs)
    ring = sort_directions_around(axis, items, lambda k: dirs[k])
    i = ring.index("e")
    ring = ring[i:] + ring[:i]
    expected = ["e", "ne", "n", "nw", "w", "sw", "s", "se"]
    assert ring == expected or ring == ["e"] + expected[:0:-1]
