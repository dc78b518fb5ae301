"""Lattice geometry: duality, cones, face lattices, points, subdivisions."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from stringcone import fixtures as fx
from stringcone import lattice as lat
from stringcone.errors import (
    DimensionBudgetExceeded,
    InvalidSubdivision,
    NotComplete,
    NotGorenstein,
    NotReflexivePair,
    OriginNotInterior,
)


def poly(name):
    return fx.polytope(name)


# -- polar duality -----------------------------------------------------------

def test_dual_polytope_examples():
    assert lat.dual_polytope(poly("diamond")).to_lattice() == poly("square")
    assert lat.dual_polytope(poly("square")).to_lattice() == poly("diamond")
    assert lat.dual_polytope(poly("p2")).to_lattice() == poly("p2_dual")


def test_dual_requires_interior_origin():
    shifted = lat.lattice_polytope([(0, 0), (2, 0), (0, 2)])
    with pytest.raises(OriginNotInterior):
        lat.dual_polytope(shifted)


@pytest.mark.parametrize("name", fx.REFLEXIVE_NAMES)
def test_dual_dual_is_identity(name):
    p = poly(name)
    assert lat.dual_polytope(lat.dual_polytope(p).to_lattice()).to_lattice() == p


def test_rational_dual_roundtrip():
    # a non-reflexive polytope with 0 interior still dualizes exactly
    p = lat.lattice_polytope([(-1,), (2,)])
    d = lat.dual_polytope(p)
    assert not d.is_integral()
    back = lat.dual_polytope(d)
    assert back.is_integral() and back.to_lattice() == p


# -- reflexivity ---------------------------------------------------------------

def test_is_reflexive_examples():
    assert lat.is_reflexive(poly("diamond"))
    assert lat.is_reflexive(poly("p2"))
    assert not lat.is_reflexive(poly("segment_m1_2"))


@pytest.mark.parametrize("name", fx.REFLEXIVE_NAMES)
def test_fixture_reflexivity(name):
    assert lat.is_reflexive(poly(name))


def test_interior_point_uniqueness():
    assert lat.interior_lattice_points(poly("cube")) == [(0, 0, 0)]


# -- Gorenstein cones ----------------------------------------------------------

def test_gorenstein_cone_over():
    k = lat.gorenstein_cone_over(poly("diamond"))
    assert k.dim == 3 and k.deg == (0, 0, 1) and len(k.generators) == 4
    k1 = lat.gorenstein_cone_over(lat.lattice_polytope([(-1,), (1,)]))
    assert k1.dim == 2 and sorted(k1.generators) == [(-1, 1), (1, 1)]
    kq = lat.gorenstein_cone_over(poly("quintic_mirror"))
    assert kq.dim == 5 and len(kq.generators) == 5


def test_deg_functional_examples():
    assert lat.deg_functional([(0, 1), (2, 1)]) == (0, 1)
    verts = [v + (1,) for v in poly("diamond").vertices]
    assert lat.deg_functional(verts) == (0, 0, 1)
    with pytest.raises(NotGorenstein):
        lat.deg_functional([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 2)])


def test_non_gorenstein_cone_rejected():
    with pytest.raises(NotGorenstein):
        lat.cone_from_generators([(2, 1), (2, -1)])


def test_generator_canonicalization():
    # redundant interior ray is dropped, non-primitive input reduced
    c = lat.cone_from_generators([(0, 2), (2, 2), (1, 1), (2, 1)])
    assert c.generators == ((0, 1), (2, 1))


# -- face lattices ---------------------------------------------------------------

def test_face_lattice_counts():
    a1 = lat.cone_from_generators([(0, 1), (2, 1)])
    assert len(lat.face_lattice(a1).faces) == 4
    square_cone = lat.cone_from_generators(
        [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert len(lat.face_lattice(square_cone).faces) == 10
    k = lat.gorenstein_cone_over(poly("diamond"))
    assert len(lat.face_lattice(k).faces) == 10
    kq = lat.gorenstein_cone_over(poly("quintic_mirror"))
    assert len(lat.face_lattice(kq).faces) == 32


def test_face_dims_and_covers():
    fl = lat.face_lattice(lat.gorenstein_cone_over(poly("diamond")))
    dims = sorted(f.dim for f in fl.faces)
    assert dims == [0, 1, 1, 1, 1, 2, 2, 2, 2, 3]
    for i, j in fl.covers:
        assert fl.faces[j].dim == fl.faces[i].dim + 1
        assert fl.faces[i].gen_indices < fl.faces[j].gen_indices


def test_dimension_budget():
    with pytest.raises(DimensionBudgetExceeded):
        lat.cone_from_generators(
            [tuple(int(i == j) for j in range(9)) for i in range(9)])


# -- dual faces -------------------------------------------------------------------

def test_dual_face_example():
    pair = fx.reflexive_pair("diamond")
    fl = lat.face_lattice(pair.cone)
    ray = fl.face_of_gens([i for i, g in enumerate(pair.cone.generators)
                           if g == (1, 0, 1)])
    dual = pair.dual_face(ray)
    assert set(dual.generator_vectors()) == {(-1, 1, 1), (-1, -1, 1)}
    assert pair.dual_face(dual) == ray


@pytest.mark.parametrize("name", ["diamond", "p2", "cube", "quartic"])
def test_dual_face_is_order_reversing_bijection(name):
    pair = fx.reflexive_pair(name)
    fl = lat.face_lattice(pair.cone)
    seen = set()
    for face in fl.faces:
        dual = pair.dual_face(face)
        assert face.dim + dual.dim == pair.cone.dim
        assert pair.dual_face(dual) == face
        seen.add(dual.gen_indices)
    assert len(seen) == len(fl.faces)
    # order reversal on a sample of comparable pairs
    for f1 in fl.faces:
        for f2 in fl.faces:
            if f1.gen_indices < f2.gen_indices:
                d1, d2 = pair.dual_face(f1), pair.dual_face(f2)
                assert d2.gen_indices < d1.gen_indices


def test_dual_face_rejects_foreign_cone():
    pair = fx.reflexive_pair("diamond")
    other = fx.reflexive_pair("p2")
    face = lat.face_lattice(other.cone).faces[0]
    with pytest.raises(NotReflexivePair):
        pair.dual_face(face)


def test_reflexive_pair_requires_reflexive():
    with pytest.raises(NotReflexivePair):
        lat.reflexive_pair(poly("segment_m1_2"))


# -- lattice point enumeration ------------------------------------------------------

def test_points_at_degree_examples():
    a1 = lat.cone_from_generators([(0, 1), (2, 1)])
    assert lat.lattice_points_at_degree(a1, 1) == ((0, 1), (1, 1), (2, 1))
    assert lat.lattice_points_at_degree(a1, 0) == ((0, 0),)
    square_cone = lat.cone_from_generators(
        [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert len(lat.lattice_points_at_degree(square_cone, 2)) == 9


def test_counts_match_enumeration():
    k = lat.gorenstein_cone_over(poly("cube"))
    for deg in range(4):
        for interior in (False, True):
            pts = lat.lattice_points_at_degree(k, deg, interior)
            assert lat.count_lattice_points_at_degree(k, deg, interior) == len(pts)


@pytest.mark.parametrize("name", ["diamond", "p2", "cube", "quartic"])
def test_interior_points_are_face_complement(name):
    # relative interior = all points minus the union over proper faces
    cone = lat.gorenstein_cone_over(poly(name))
    fl = lat.face_lattice(cone)
    for deg in range(min(cone.dim, 4) + 1):
        allpts = set(lat.lattice_points_at_degree(cone, deg))
        interior = set(lat.lattice_points_at_degree(cone, deg, True))
        boundary = set()
        for face in fl.faces[:-1]:
            boundary |= set(lat.lattice_points_at_degree(face.as_cone(), deg))
        assert interior == allpts - boundary


def test_ehrhart_counts():
    k = lat.gorenstein_cone_over(poly("diamond"))
    got = [lat.count_lattice_points_at_degree(k, d) for d in range(5)]
    assert got == [2 * d * d + 2 * d + 1 for d in range(5)]


# -- subdivisions ----------------------------------------------------------------

def test_trivial_subdivision_from_zero_heights():
    square_cone = lat.cone_from_generators(
        [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    sub = lat.regular_subdivision(square_cone, [0, 0, 0, 0])
    assert sub.is_trivial()


def test_square_splits_into_two_triangles():
    square_cone = lat.cone_from_generators(
        [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    sub = lat.regular_subdivision(square_cone, [0, 0, 0, 1])
    assert len(sub.max_cones) == 2
    assert all(c.is_simplicial() for c in sub.max_cones)


def test_generic_heights_give_simplicial_cells():
    pair = fx.reflexive_pair("diamond")
    rng = random.Random(3)
    pts = lat.lattice_points_at_degree(pair.dual, 1)
    heights = [rng.randint(0, 30) for _ in pts]
    sub = lat.regular_subdivision(pair.dual, heights, force_generic=True)
    assert all(c.is_simplicial() for c in sub.max_cones)
    assert str(sub.provenance[0]).startswith("heights")


def test_stellar_subdivision():
    k = lat.gorenstein_cone_over(poly("cube"))
    sub = lat.stellar_subdivision(k)
    assert len(sub.max_cones) == 6  # one cell per facet of the cube
    lat.validate_subdivision(sub)


@given(st.lists(st.integers(0, 12), min_size=9, max_size=9))
@settings(max_examples=25, deadline=None)
def test_random_heights_always_give_valid_subdivision(heights):
    cone = lat.gorenstein_cone_over(poly("square"))
    sub = lat.regular_subdivision(cone, heights)
    # validate_subdivision already ran; degree-2 points all covered
    for p in lat.lattice_points_at_degree(cone, 2):
        assert any(lat.point_in_cone(c, p) for c in sub.max_cones)


def test_invalid_subdivision_detected():
    cone = lat.gorenstein_cone_over(poly("square"))
    half = lat.cone_from_generators(
        [(1, 1, 1), (1, -1, 1), (-1, 1, 1)], deg=cone.deg)
    bad = lat.FanSubdivision(parent=cone, max_cones=(half,),
                             provenance=("explicit",))
    with pytest.raises(InvalidSubdivision):
        lat.validate_subdivision(bad)


def test_restrict_subdivision_to_face():
    k = lat.gorenstein_cone_over(poly("square"))
    sub = lat.stellar_subdivision(k)
    face = lat.face_lattice(k).faces[-2].as_cone()  # a facet
    induced = sub.restrict_to_face(face)
    assert all(c.dim == face.dim for c in induced.max_cones)
    for cell in induced.max_cones:
        assert all(lat.point_in_cone(face, g) for g in cell.generators)


# -- fans ---------------------------------------------------------------------------

def test_fan_completeness():
    lat.check_complete(fx.fan("p1"))
    lat.check_complete(fx.fan("p2"))
    lat.check_complete(fx.fan("p112"))
    incomplete = lat.fan_from_rays(2, [(1, 0), (0, 1)], [[0, 1]])
    with pytest.raises(NotComplete):
        lat.check_complete(incomplete)


def test_fan_cones_share_faces():
    fan = fx.fan("p2")
    assert len(fan.cones) == 7  # origin + 3 rays + 3 maximal cones
    assert sorted(c.dim for c in fan.cones) == [0, 1, 1, 1, 2, 2, 2]


# -- unimodular invariance (strong independent oracle) -------------------------------

def unimodular_transforms(rank, rng):
    mat = [[int(i == j) for j in range(rank)] for i in range(rank)]
    for _ in range(6):
        i, j = rng.randrange(rank), rng.randrange(rank)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for k in range(rank):
            mat[i][k] += c * mat[j][k]
    return mat


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_reflexivity_is_unimodular_invariant(seed):
    rng = random.Random(seed)
    p = poly(rng.choice(["diamond", "square", "p2"]))
    mat = unimodular_transforms(p.rank, rng)
    image = lat.lattice_polytope(
        [tuple(sum(mat[i][k] * v[k] for k in range(p.rank))
               for i in range(p.rank)) for v in p.vertices])
    assert lat.is_reflexive(image)
