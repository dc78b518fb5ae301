"""Deformed semigroup-ring quotients, regularity, pairings."""

import pytest

from stringcone import fixtures as fx
from stringcone import lattice as lat
from stringcone import semigroup as sg
from stringcone import stringy as st
from stringcone.errors import (
    FieldCharacteristicTooSmall,
    NotRegular,
    PointOutsideCone,
)

A1 = lat.cone_from_generators([(0, 1), (2, 1)])
SQUARE_CONE = lat.cone_from_generators(
    [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])


def k_cone(name):
    return lat.gorenstein_cone_over(fx.polytope(name))


def expected_vectors(cone):
    return (tuple(st.s_polynomial(cone).coeff_list(cone.dim)),
            tuple(st.tilde_s_polynomial(cone).coeff_list(cone.dim)))


# -- elements and derivatives -----------------------------------------------------

def test_field_descriptor_validation():
    assert sg.parse_field("rational") == ("rational", None)
    assert sg.parse_field("prime:2097169") == ("prime", 2097169)
    with pytest.raises(FieldCharacteristicTooSmall):
        sg.parse_field("prime:65537")
    with pytest.raises(ValueError):
        sg.parse_field("float")


def test_degree_one_element_validation():
    with pytest.raises(PointOutsideCone):
        sg.degree_one_element(A1, {(5, 1): 1})
    g = sg.degree_one_element(A1, {(0, 1): 1, (1, 1): 0})
    assert g.coefficient_map() == {(0, 1): 1}


def test_random_element_is_reproducible_and_full_support():
    g1 = sg.random_degree_one(A1, seed=42)
    g2 = sg.random_degree_one(A1, seed=42)
    assert g1 == g2
    assert set(g1.coefficient_map()) == set(lat.lattice_points_at_degree(A1, 1))
    lo, hi = sg.COEFFICIENT_RANGE
    assert all(lo <= c <= hi for c in g1.coefficient_map().values())


def test_logarithmic_derivative_example():
    g = sg.degree_one_element(A1, {(0, 1): 1, (2, 1): 1, (1, 1): 1})
    ders = sg.logarithmic_derivatives(g)
    assert ders == [{(1, 1): 1, (2, 1): 2}, {(0, 1): 1, (1, 1): 1, (2, 1): 1}]


def test_logarithmic_derivative_single_point_and_zero():
    g = sg.degree_one_element(A1, {(2, 1): 5})
    assert sg.logarithmic_derivatives(g) == [{(2, 1): 10}, {(2, 1): 5}]
    z = sg.degree_one_element(A1, {})
    assert sg.logarithmic_derivatives(z) == [{}, {}]


def test_derivative_span_independent_of_functional_choice():
    # span over Q of the derivatives is the full gradient space
    from stringcone import intlinalg as la
    g = sg.random_degree_one(k_cone("p2"), seed=1)
    ders = sg.logarithmic_derivatives(g)
    pts = lat.lattice_points_at_degree(g.cone, 1)
    rows = [[d.get(p, 0) for p in pts] for d in ders]
    alt = []
    for n in ((1, 1, 1), (1, -1, 0), (0, 1, -1)):  # another spanning triple
        alt.append([la.dot(p, n) * g.coefficient_map()[p] for p in pts])
    assert la.rank_fraction(rows) == la.rank_fraction(rows + alt)


# -- deformed products --------------------------------------------------------------

def test_deformed_product_trivial_and_split():
    triv = lat.trivial_subdivision(SQUARE_CONE)
    assert sg.deformed_product(triv, (0, 0, 1), (1, 1, 1)) == (1, 1, 2)
    assert sg.deformed_product(triv, (0, 0, 0), (1, 1, 1)) == (1, 1, 1)
    sub = lat.regular_subdivision(SQUARE_CONE, [0, 0, 0, 1])
    t1, t2 = sub.max_cones
    inner1 = next(p for p in lat.lattice_points_at_degree(SQUARE_CONE, 2)
                  if lat.point_in_cone(t1, p) and not lat.point_in_cone(t2, p))
    inner2 = next(p for p in lat.lattice_points_at_degree(SQUARE_CONE, 2)
                  if lat.point_in_cone(t2, p) and not lat.point_in_cone(t1, p))
    assert sg.deformed_product(sub, inner1, inner2) is None
    assert sg.deformed_product(sub, (0, 0, 0), inner2) == inner2
    with pytest.raises(PointOutsideCone):
        sg.deformed_product(triv, (-1, 0, 1), (0, 0, 1))


def test_deformed_product_commutative_associative_sample():
    sub = lat.stellar_subdivision(k_cone("diamond"))
    pts = lat.lattice_points_at_degree(sub.parent, 1)

    def prod(a, b):
        return sg.deformed_product(sub, a, b)

    for a in pts:
        for b in pts:
            assert prod(a, b) == prod(b, a)
            for c in pts[:3]:
                left = prod(a, b)
                lhs = prod(left, c) if left is not None else None
                right = prod(b, c)
                rhs = prod(a, right) if right is not None else None
                assert lhs == rhs


# -- graded dimensions -----------------------------------------------------------------

def test_a1_dims():
    rep = sg.graded_quotient_dims(sg.random_degree_one(A1, seed=0))
    assert rep.dims_R0 == (1, 1, 0)
    assert rep.dims_R1 == (0, 1, 0)
    assert rep.top_degree_dims == (0, 0)
    assert rep.regular_profile


def test_square_cone_dims_both_subdivisions():
    g = sg.random_degree_one(SQUARE_CONE, seed=1)
    for sub in (None, lat.regular_subdivision(SQUARE_CONE, [0, 0, 0, 1])):
        rep = sg.graded_quotient_dims(g, sub)
        assert rep.dims_R0 == (1, 1, 0, 0)
        assert rep.dims_R1 == (0, 0, 0, 0)


def test_diamond_dims():
    rep = sg.graded_quotient_dims(sg.random_degree_one(k_cone("diamond"), seed=2))
    assert rep.dims_R1 == (0, 1, 1, 0)
    assert rep.dims_R0 == (1, 2, 1, 0)


@pytest.mark.parametrize("name", ["diamond", "p2", "cross", "quartic"])
def test_dims_match_s_and_tilde_s(name):
    cone = k_cone(name)
    expect_r0, expect_r1 = expected_vectors(cone)
    for seed in (0, 1):
        rep = sg.graded_quotient_dims(sg.random_degree_one(cone, seed=seed))
        assert rep.dims_R0 == expect_r0
        assert rep.dims_R1 == expect_r1
        assert sum(rep.dims_R0) == st.s_polynomial(cone)(1)
        assert rep.dims_R1 == rep.dims_R1[::-1]  # palindromic


def test_backends_agree():
    cone = k_cone("p2_dual")
    rp = sg.graded_quotient_dims(sg.random_degree_one(cone, seed=5))
    rq = sg.graded_quotient_dims(
        sg.random_degree_one(cone, seed=5, field="rational"))
    assert (rp.dims_R0, rp.dims_R1) == (rq.dims_R0, rq.dims_R1)


def test_deformed_dims_invariant_under_subdivision():
    cone = k_cone("p2")
    expect_r0, expect_r1 = expected_vectors(cone)
    g = sg.random_degree_one(cone, seed=3)
    rep = sg.graded_quotient_dims(g, lat.stellar_subdivision(cone))
    assert rep.dims_R0 == expect_r0
    assert rep.dims_R1 == expect_r1


# -- regularity ------------------------------------------------------------------------

def test_generic_element_is_regular():
    g = sg.random_degree_one(k_cone("diamond"), seed=0)
    verdict = sg.is_sigma_regular(g)
    assert verdict.regular and verdict.witness is None


def test_missing_vertex_coefficient_breaks_regularity():
    cone = k_cone("diamond")
    coeffs = sg.random_degree_one(cone, seed=0).coefficient_map()
    coeffs[cone.generators[0]] = 0
    bad = sg.degree_one_element(cone, coeffs)
    verdict = sg.is_sigma_regular(bad)
    assert not verdict.regular
    assert verdict.witness is not None
    assert "cutoff" in verdict.detail


def test_trivial_subdivision_regularity_is_classical():
    cone = k_cone("p2")
    g = sg.random_degree_one(cone, seed=0)
    triv = sg.is_sigma_regular(g, lat.trivial_subdivision(cone))
    assert triv.regular == sg.is_sigma_regular(g).regular


def test_regularity_restricts_to_faces():
    cone = k_cone("diamond")
    sub = lat.stellar_subdivision(cone)
    g = sg.random_degree_one(cone, seed=0)
    assert sg.is_sigma_regular(g, sub).regular
    for face in lat.face_lattice(cone).faces:
        if face.dim in (0, cone.dim):
            continue
        fc = face.as_cone()
        verdict = sg.is_sigma_regular(g.restrict(fc), sub.restrict_to_face(fc))
        assert verdict.regular


# -- pairing ---------------------------------------------------------------------------

def test_pairing_a1():
    g = sg.random_degree_one(A1, seed=0)
    mat = sg.pairing_matrix(g, None, 0)
    assert len(mat) == 1 and len(mat[0]) == 1 and mat[0][0] != 0


def test_pairing_diamond_rank_symmetry():
    g = sg.random_degree_one(k_cone("diamond"), seed=2)
    m1 = sg.pairing_matrix(g, None, 1)
    m2 = sg.pairing_matrix(g, None, 2)
    assert (len(m1), len(m1[0])) == (2, 2)
    assert (len(m2), len(m2[0])) == (1, 1)


def test_pairing_beyond_top_degree_is_empty():
    g = sg.random_degree_one(A1, seed=0)
    assert sg.pairing_matrix(g, None, A1.dim + 1) == []


def test_pairing_requires_regularity():
    cone = k_cone("diamond")
    coeffs = sg.random_degree_one(cone, seed=0).coefficient_map()
    coeffs[cone.generators[0]] = 0
    bad = sg.degree_one_element(cone, coeffs)
    with pytest.raises(NotRegular):
        sg.pairing_matrix(bad, None, 1)


def test_pairing_rational_backend():
    g = sg.random_degree_one(k_cone("p2"), seed=1, field="rational")
    mat = sg.pairing_matrix(g, None, 1)
    assert len(mat) == len(mat[0]) == 1 and mat[0][0] != 0
