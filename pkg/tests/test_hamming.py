from math import comb

import pytest
from hypothesis import given, strategies as st

from qcube.hamming import (
    FaceSpec,
    SpaceParams,
    add,
    distance,
    face_vertices,
    index_of,
    neighbor_indices,
    orthogonal_face,
    sphere,
    vertex_of,
    weight,
)


@pytest.mark.parametrize(
    "q,n,v,idx",
    [(3, 2, (0, 0), 0), (3, 2, (1, 2), 5), (2, 3, (1, 0, 1), 5)],
)
def test_index_of(q, n, v, idx):
    p = SpaceParams(q, n)
    assert index_of(v, p) == idx
    assert vertex_of(idx, p) == v


def test_index_of_rejects_bad_digit():
    with pytest.raises(ValueError):
        index_of((0, 3), SpaceParams(3, 2))
    with pytest.raises(ValueError):
        index_of((0,), SpaceParams(3, 2))


@pytest.mark.parametrize("q,n", [(1, 2), (2, 0), (2.5, 2)])
def test_space_params_validation(q, n):
    with pytest.raises(ValueError):
        SpaceParams(q, n)


def test_weight():
    assert weight((0, 0, 0)) == 0
    assert weight((1, 2, 0)) == 2
    assert weight((4, 4, 4, 4)) == 4


def test_distance():
    assert distance((1, 2), (1, 2)) == 0
    assert distance((0, 1, 1), (1, 1, 0)) == 2
    assert distance((1, 2), (2, 2)) == 1
    with pytest.raises(ValueError):
        distance((0, 1), (0, 1, 2))


def test_sphere_examples():
    p = SpaceParams(2, 3)
    assert list(sphere((0, 1, 1), 0, p)) == [(0, 1, 1)]
    assert [index_of(v, p) for v in sphere(p.zero(), 1, p)] == [1, 2, 4]
    assert len(list(sphere((0, 0, 0), 2, SpaceParams(3, 3)))) == 12
    assert list(sphere(p.zero(), 4, p)) == []


def test_spheres_partition_space():
    p = SpaceParams(3, 3)
    center = (1, 0, 2)
    seen = []
    for i in range(p.n + 1):
        shell = list(sphere(center, i, p))
        assert len(shell) == comb(p.n, i) * (p.q - 1) ** i
        assert [index_of(v, p) for v in shell] == sorted(index_of(v, p) for v in shell)
        seen.extend(shell)
    assert sorted(seen) == sorted(p.vertices())


def test_face_vertices_examples():
    assert list(face_vertices(FaceSpec((1, 2), ()), SpaceParams(3, 2))) == [(1, 2)]
    assert list(face_vertices(FaceSpec((0, 0), (2,)), SpaceParams(2, 2))) == [(0, 0), (0, 1)]
    assert list(face_vertices(FaceSpec((1, 0), (1,)), SpaceParams(3, 2))) == [(0, 0), (1, 0), (2, 0)]


def test_face_order_smallest_free_index_most_significant():
    p = SpaceParams(2, 3)
    got = list(face_vertices(FaceSpec((0, 1, 0), (3, 1)), p))
    assert got == [(0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)]


def test_face_validation():
    p = SpaceParams(2, 3)
    with pytest.raises(ValueError):
        FaceSpec((0, 0, 0), (1, 1))
    with pytest.raises(ValueError):
        list(face_vertices(FaceSpec((0, 0, 0), (4,)), p))


def test_orthogonal_face():
    p = SpaceParams(3, 3)
    assert orthogonal_face(FaceSpec((0, 0, 0), (1, 3)), p).free_set == (2,)
    assert orthogonal_face(FaceSpec((0, 0, 0), ()), p).free_set == (1, 2, 3)
    anchor = (2, 1, 0)
    face = FaceSpec(anchor, (2,))
    common = set(face_vertices(face, p)) & set(face_vertices(orthogonal_face(face, p), p))
    assert common == {anchor}


def test_neighbor_indices_match_distance():
    p = SpaceParams(3, 2)
    verts = list(p.vertices())
    for i, nb in enumerate(neighbor_indices(p)):
        assert sorted(nb) == [j for j, w in enumerate(verts) if distance(verts[i], w) == 1]


spaces = st.sampled_from([(2, 4), (3, 3), (4, 2), (5, 2), (6, 2)])


@st.composite
def space_and_vertices(draw, k=3):
    q, n = draw(spaces)
    vs = [tuple(draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))) for _ in range(k)]
    return SpaceParams(q, n), vs


@given(space_and_vertices())
def test_distance_metric_properties(data):
    p, (u, v, w) = data
    assert distance(u, v) == distance(v, u)
    assert distance(u, v) <= distance(u, w) + distance(w, v)
    assert distance(add(u, w, p.q), add(v, w, p.q)) == distance(u, v)


@given(space_and_vertices(k=1))
def test_index_codec_roundtrip(data):
    p, (v,) = data
    assert vertex_of(index_of(v, p), p) == v


@given(space_and_vertices(k=1), st.data())
def test_face_size_and_radius(data, extra):
    p, (anchor,) = data
    free = extra.draw(st.sets(st.integers(1, p.n)))
    face = FaceSpec(anchor, tuple(free))
    verts = list(face_vertices(face, p))
    assert len(set(verts)) == p.q ** len(free)
    assert anchor in verts
    assert all(distance(v, anchor) <= len(free) for v in verts)
