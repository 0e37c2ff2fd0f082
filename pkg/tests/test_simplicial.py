import random

import pytest
from hypothesis import given, settings, strategies as st

from srdepth.simplicial import (
    Complex,
    IRRELEVANT,
    ORDINARY,
    VOID,
    face_mask,
    mask_vertices,
)


def brute_faces(cx: Complex) -> set:
    """Oracle: all faces by enumerating subsets of every facet."""
    out = set()
    for f in cx.facets:
        for k in range(len(f) + 1):
            from itertools import combinations

            out.update(combinations(f, k))
    return out


# -- strategies -------------------------------------------------------------------

@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    nfacets = draw(st.integers(min_value=1, max_value=5))
    facets = [
        draw(st.sets(st.integers(min_value=1, max_value=n), max_size=n))
        for _ in range(nfacets)
    ]
    return Complex(n, facets)


# -- construction and normalization ------------------------------------------------

def test_maximality_normalization():
    cx = Complex(4, [(1, 2), (1,), (3, 4)])
    assert cx.facets == ((1, 2), (3, 4))


def test_fourcycle_from_candidates():
    cx = Complex(4, [(1, 2), (1, 4), (2, 3), (3, 4)])
    assert cx.facets == ((1, 2), (2, 3), (1, 4), (3, 4))
    assert cx.kind == ORDINARY


def test_irrelevant_and_void():
    irr = Complex(3, [()])
    assert irr.kind == IRRELEVANT
    assert irr.dim == -1
    void = Complex(3, [])
    assert void.kind == VOID
    assert void.dim == -2
    assert void.is_pure and irr.is_pure


def test_vertex_out_of_range():
    with pytest.raises(ValueError):
        Complex(3, [(1, 4)])
    with pytest.raises(ValueError):
        Complex(0, [()])


def test_empty_face_dropped_when_dominated():
    cx = Complex(3, [(), (1,)])
    assert cx.facets == ((1,),)


@given(complexes())
@settings(max_examples=60)
def test_constructor_idempotent(cx):
    assert Complex(cx.n, cx.facets) == cx


# -- queries ------------------------------------------------------------------------

def test_dimension_and_purity(fourcycle):
    assert fourcycle.dim == 1
    assert fourcycle.is_pure
    assert not Complex(5, [(1, 2, 3), (4, 5)]).is_pure


def test_face_enumeration_fourcycle(fourcycle):
    assert fourcycle.faces(0) == [(1,), (2,), (3,), (4,)]
    assert fourcycle.faces(1) == [(1, 2), (2, 3), (1, 4), (3, 4)]
    assert fourcycle.faces(-1) == [()]


def test_face_enumeration_is_colex():
    cx = Complex(4, [(1, 2, 3), (2, 3, 4)])
    masks = cx.face_masks_of_dim(1)
    assert masks == sorted(masks)


@given(complexes())
@settings(max_examples=60)
def test_face_counts_match_brute_force(cx):
    if cx.kind != ORDINARY:
        return
    oracle = brute_faces(cx)
    for i in range(-1, cx.dim + 1):
        assert set(cx.faces(i)) == {f for f in oracle if len(f) == i + 1}


# -- link / star / skeleton -----------------------------------------------------------

def test_link_of_empty_face_is_identity(fourcycle):
    assert fourcycle.link(()) == fourcycle
    assert fourcycle.star(()) == fourcycle


def test_link_star_fourcycle(fourcycle):
    # oracle: directly enumerate faces satisfying the definitions
    faces = brute_faces(fourcycle)
    link1 = {g for g in faces if not set(g) & {1} and tuple(sorted(set(g) | {1})) in faces}
    assert set(brute_faces(fourcycle.link((1,)))) == link1
    assert fourcycle.link((1,)).facets == ((2,), (4,))
    assert fourcycle.star((1,)).facets == ((1, 2), (1, 4))


def test_link_of_simplex_vertex():
    cx = Complex.full_simplex(3)
    assert cx.link((3,)).facets == ((1, 2),)


def test_star_of_facet_is_simplex(fourcycle):
    assert fourcycle.star((1, 2)).facets == ((1, 2),)


def test_link_requires_face(fourcycle):
    with pytest.raises(ValueError):
        fourcycle.link((1, 3))


def test_skeleton_cases(fourcycle):
    simplex = Complex.full_simplex(3)
    assert simplex.skeleton(1).facets == ((1, 2), (1, 3), (2, 3))
    assert fourcycle.skeleton(fourcycle.dim) == fourcycle
    assert simplex.skeleton(-1).kind == IRRELEVANT


def test_skeleton_of_mixed_dimensions():
    cx = Complex(5, [(1, 2, 3), (4, 5)])
    sk = cx.skeleton(1)
    assert sk.facets == ((1, 2), (1, 3), (2, 3), (4, 5))


def test_big_skeleton(two_big_facets):
    sk = two_big_facets.skeleton(3)
    from itertools import combinations

    expected = set(combinations((1, 2, 3, 4, 5), 4)) | set(
        combinations((1, 2, 6, 7, 8), 4)
    )
    assert set(sk.facets) == expected


def test_skeleton_out_of_range(fourcycle):
    with pytest.raises(ValueError):
        fourcycle.skeleton(2)
    with pytest.raises(ValueError):
        fourcycle.skeleton(-2)


@given(complexes(), st.integers(min_value=-1, max_value=5), st.integers(min_value=-1, max_value=5))
@settings(max_examples=60)
def test_skeleton_composition(cx, i, j):
    if cx.kind == VOID or i > cx.dim or j > cx.dim:
        return
    assert cx.skeleton(i).skeleton(min(i, j)) == cx.skeleton(min(i, j))


@given(complexes())
@settings(max_examples=60)
def test_link_subset_star_subset_complex(cx):
    if cx.kind != ORDINARY:
        return
    rng = random.Random(17)
    faces = sorted(brute_faces(cx))
    f = rng.choice(faces)
    link_faces = brute_faces(cx.link(f))
    star_faces = brute_faces(cx.star(f))
    assert link_faces <= star_faces <= brute_faces(cx)


# -- facet subcomplexes -----------------------------------------------------------------

def test_facet_subcomplex(fourcycle):
    assert fourcycle.facet_subcomplex(range(4)) == fourcycle
    pair = fourcycle.facet_subcomplex([0, 3])
    assert pair.facets == ((1, 2), (3, 4))
    single = fourcycle.facet_subcomplex([1])
    assert single.facets == ((2, 3),)


def test_facet_subcomplex_errors(fourcycle):
    with pytest.raises(ValueError):
        fourcycle.facet_subcomplex([])
    with pytest.raises(ValueError):
        fourcycle.facet_subcomplex([7])


# -- serialization ------------------------------------------------------------------------

@given(complexes())
@settings(max_examples=60)
def test_json_round_trip(cx):
    assert Complex.from_json_dict(cx.to_json_dict()) == cx


def test_json_normalizes_on_load():
    cx = Complex.from_json_dict({"n": 4, "facets": [[1, 2], [1], [3, 4]]})
    assert cx.facets == ((1, 2), (3, 4))


def test_masks_round_trip():
    m = face_mask((2, 5, 7), 8)
    assert mask_vertices(m) == (2, 5, 7)
