import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vertex_extrema import GenSpec, build_polygon, random_generic_convex
from vertex_extrema.errors import NotGeneric, UnsupportedSize
from vertex_extrema.extremality import (CurvatureOrder, Extremum, NeighborCircleClass, analyze,
                                        classify_neighbor_circle, curvature_compare,
                                        global_classification, local_by_circle_criterion,
                                        local_classification)
from vertex_extrema.polygon import VertexSign, check_genericity, vertex_sign

from .conftest import inside_by_distance

seeds = st.integers(0, 2**64 - 1)


def xy(P, i):
    v = P[i]
    return (v.x, v.y)


def global_oracle(P):
    """Global labels straight from the empty/full definition, via circumcentre distances."""
    labels = []
    for i in range(P.n):
        tri = (xy(P, i - 1), xy(P, i), xy(P, i + 1))
        sides = [inside_by_distance(*tri, xy(P, k)) for k in range(i + 2, i + P.n - 1)]
        assert 0 not in sides
        if all(s < 0 for s in sides):
            labels.append(Extremum.MAX)
        elif all(s > 0 for s in sides):
            labels.append(Extremum.MIN)
        else:
            labels.append(Extremum.NONE)
    return tuple(labels)


def test_q1_neighbor_circles(q1):
    assert classify_neighbor_circle(q1, 1) is NeighborCircleClass.FULL
    assert classify_neighbor_circle(q1, 2) is NeighborCircleClass.EMPTY


def test_q1_global(q1):
    r = global_classification(q1)
    assert r.global_labels == (Extremum.MAX, Extremum.MIN, Extremum.MAX, Extremum.MIN)
    assert (r.s_minus, r.s_plus) == (2, 2)
    assert r.l_minus is None


def test_q1_curvature(q1):
    assert curvature_compare(q1, 1) is CurvatureOrder.LESS
    assert curvature_compare(q1, 2) is CurvatureOrder.GREATER


def test_q1_analyze(q1):
    r = analyze(q1)
    assert (r.s_minus, r.s_plus, r.l_minus, r.l_plus) == (2, 2, 2, 2)
    assert all(label is not Extremum.NONE for label in r.local_labels)


def test_report_json(q1):
    doc = analyze(q1).to_json()
    assert doc["n"] == 4 and doc["s_plus"] == 2 and doc["l_minus"] == 2
    assert doc["vertices"][0] == {"index": 0, "global": "max", "local": "max"}
    assert doc["vertices"][1] == {"index": 1, "global": "min", "local": "min"}


def test_non_generic_square_raises():
    with pytest.raises(NotGeneric):
        analyze(build_polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))


def test_triangle_rejected():
    with pytest.raises(UnsupportedSize):
        analyze(build_polygon([(0, 0), (1, 0), (0, 1)]))


def test_quadrilateral_never_neither():
    for seed in range(50):
        P = random_generic_convex(GenSpec(4, seed))
        assert NeighborCircleClass.NEITHER not in {classify_neighbor_circle(P, i) for i in range(4)}


def test_generated_examples():
    hexagon = analyze(random_generic_convex(GenSpec(6, 1)))
    assert hexagon.s_plus + hexagon.s_minus >= 4
    octagon = analyze(random_generic_convex(GenSpec(8, 7)))
    assert octagon.s_plus + octagon.s_minus >= 4
    assert octagon.l_plus + octagon.l_minus >= 4


def test_negative_vertex_row_of_curvature_table():
    # generic pentagon with a reflex vertex at index 3
    P = build_polygon([(0, 0), (7, 1), (6, 5), (3, 2), (1, 6)])
    assert check_genericity(P).is_generic
    assert vertex_sign(P, 3) is VertexSign.NEGATIVE
    for i in range(P.n):
        inside = inside_by_distance(xy(P, i - 1), xy(P, i), xy(P, i + 1), xy(P, i + 2)) > 0
        next_positive = vertex_sign(P, i + 1) is VertexSign.POSITIVE
        greater = (not inside) if next_positive else inside
        assert (curvature_compare(P, i) is CurvatureOrder.GREATER) == greater


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 12), seeds)
def test_global_labels_match_definition_oracle(n, seed):
    P = random_generic_convex(GenSpec(n, seed))
    assert global_classification(P).global_labels == global_oracle(P)


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 12), seeds)
def test_convex_properties(n, seed):
    P = random_generic_convex(GenSpec(n, seed))
    r = analyze(P)
    assert r.l_plus == r.l_minus
    for g, loc in zip(r.global_labels, r.local_labels):
        if g is not Extremum.NONE:
            assert loc is g
    assert local_by_circle_criterion(P) == r.local_labels
    for i in range(n):
        if r.local_labels[i] is not Extremum.NONE:
            assert r.local_labels[i] is not r.local_labels[(i + 1) % n]
    if n == 4:
        assert (r.s_plus, r.s_minus, r.l_plus, r.l_minus) == (2, 2, 2, 2)


def test_local_and_global_parts_are_separate(q1):
    assert local_classification(q1).global_labels is None
