"""S/tilde-S polynomials, stringy E-functions, Hodge tables, box points."""

import pytest

from stringcone import fixtures as fx
from stringcone import lattice as lat
from stringcone import posets as po
from stringcone import stringy as st
from stringcone.errors import (
    ConeNotInFan,
    NegativeHodgeNumber,
    NotSimplicial,
)
from stringcone.polynomials import BivariateLaurentPolynomial as B
from stringcone.polynomials import UnivariatePolynomial as U

A1 = lat.cone_from_generators([(0, 1), (2, 1)])
A2 = lat.cone_from_generators([(0, 1), (3, 1)])
UNIMODULAR = lat.cone_from_generators([(1, 0), (0, 1)])
ZERO2 = lat.cone_from_generators((), 2)
SQUARE_CONE = lat.cone_from_generators(
    [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])


def pair(name):
    return fx.reflexive_pair(name)


def k_cone(name):
    return lat.gorenstein_cone_over(fx.polytope(name))


# -- S polynomials ---------------------------------------------------------------

def test_s_polynomial_examples():
    assert st.s_polynomial(ZERO2) == U.one()
    assert st.s_polynomial(A1) == U({0: 1, 1: 1})
    assert st.s_polynomial(k_cone("diamond")) == U({0: 1, 1: 2, 2: 1})


def test_s_from_series_oracle():
    # (1-t)^2 * sum (2k+1) t^k truncates to 1 + t for the A1 cone
    series = [2 * k + 1 for k in range(6)]
    acc = {}
    for i, c in enumerate(series):
        for j, b in ((0, 1), (1, -2), (2, 1)):
            acc[i + j] = acc.get(i + j, 0) + c * b
    assert U({k: v for k, v in acc.items() if k <= 2}) == st.s_polynomial(A1)


@pytest.mark.parametrize("name", fx.REFLEXIVE_NAMES)
def test_s_reciprocity(name):
    for cone in (k_cone(name),):
        assert st.s_polynomial(cone).reversed(cone.dim) == \
            st.s_polynomial_interior(cone)


def test_s_reciprocity_on_faces():
    for face in lat.face_lattice(k_cone("cube")).faces:
        c = face.as_cone()
        assert st.s_polynomial(c).reversed(c.dim) == st.s_polynomial_interior(c)


# -- tilde-S ------------------------------------------------------------------------

def test_tilde_s_examples():
    assert st.tilde_s_polynomial(A1) == U({1: 1})
    assert st.tilde_s_polynomial(SQUARE_CONE) == U.zero()
    assert st.tilde_s_polynomial(k_cone("diamond")) == U({1: 1, 2: 1})


def test_tilde_s_simplicial_examples():
    assert st.tilde_s_simplicial(A1) == U({1: 1})
    assert st.tilde_s_simplicial(UNIMODULAR) == U.zero()
    assert st.tilde_s_simplicial(ZERO2) == U.one()
    with pytest.raises(NotSimplicial):
        st.tilde_s_simplicial(k_cone("diamond"))


@pytest.mark.parametrize("name", ["diamond", "p2", "cube", "quartic", "quintic"])
def test_tilde_s_properties_on_faces(name):
    p = pair(name)
    for cone in (p.cone, p.dual):
        fl = lat.face_lattice(cone)
        poset = st._lattice_poset(cone)
        for face in fl.faces:
            c = face.as_cone()
            ts = st.tilde_s_polynomial(c)
            # palindromic duality
            assert ts.is_zero() or ts.is_palindromic(c.dim)
            # simplicial formula agreement
            if c.is_simplicial():
                assert st.tilde_s_simplicial(c) == ts
        # inversion identity on the full cone
        total = U.zero()
        top = fl.faces[-1].gen_indices
        for face in fl.faces:
            iv = poset.interval(face.gen_indices, top)
            total = total + st.tilde_s_polynomial(face.as_cone()) \
                * po.g_polynomial(iv.dual())
        assert total == st.s_polynomial(cone)


# -- box points -----------------------------------------------------------------------

def test_box_point_examples():
    assert st.box_points(UNIMODULAR).by_shift == {}
    assert st.box_points(A1).by_shift == {1: [(1, 1)]}
    assert st.box_points(A2).by_shift == {1: [(1, 1), (2, 1)]}
    with pytest.raises(NotSimplicial):
        st.box_points(k_cone("diamond"))


@pytest.mark.parametrize("name", ["quartic", "quartic_dual", "p2", "p2_dual"])
def test_box_counts_match_tilde_s(name):
    cone = k_cone(name)
    table = st.box_points(cone)
    ts = st.tilde_s_polynomial(cone)
    for shift in range(1, cone.dim):
        assert table.count(shift) == ts.coeff(shift)


# -- stringy E of hypersurfaces ----------------------------------------------------------

def test_e_st_diamond():
    expected = B({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    assert st.e_st_hypersurface(pair("diamond")) == expected
    assert st.e_st_oracle(pair("diamond")) == expected


@pytest.mark.parametrize("name", fx.REFLEXIVE_NAMES)
def test_two_formulas_agree(name):
    p = pair(name)
    assert st.e_st_hypersurface(p) == st.e_st_oracle(p)


def test_k3_hodge_number():
    table = st.stringy_hodge_table(st.e_st_hypersurface(pair("quartic")), 2)
    assert table.entry(1, 1) == 20
    assert table.entry(0, 0) == table.entry(2, 0) == 1


def test_quintic_hodge_numbers():
    table = st.stringy_hodge_table(st.e_st_hypersurface(pair("quintic")), 3)
    assert table.entry(1, 1) == 1 and table.entry(2, 1) == 101
    mirror = st.stringy_hodge_table(
        st.e_st_hypersurface(pair("quintic_mirror")), 3)
    assert mirror.entry(1, 1) == 101 and mirror.entry(2, 1) == 1


@pytest.mark.parametrize("a,b", fx.MIRROR_PAIRS)
def test_mirror_duality(a, b):
    pa, pb = pair(a), pair(b)
    cy_dim = pa.cone.dim - 2
    assert st.e_st_hypersurface(pa) == \
        st.mirror_transform(st.e_st_hypersurface(pb), cy_dim)


# -- Hodge tables ----------------------------------------------------------------------

def test_hodge_table_sign_rule():
    e = B({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    table = st.stringy_hodge_table(e, 1)
    assert table.as_dict() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert table.is_symmetric()
    assert table.to_e_polynomial() == e


def test_hodge_table_toric_example():
    e = B({(0, 0): 1, (1, 1): 2, (2, 2): 1})
    table = st.stringy_hodge_table(e, 2)
    assert table.as_dict() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_hodge_table_empty_and_invalid():
    assert st.stringy_hodge_table(B.zero(), 1).entries == ()
    with pytest.raises(NegativeHodgeNumber):
        st.stringy_hodge_table(B({(1, 0): 1}), 1)
    with pytest.raises(NegativeHodgeNumber):
        st.stringy_hodge_table(B({(-1, 0): 1}), 1)


# -- toric varieties ---------------------------------------------------------------------

def test_e_st_toric_values():
    assert st.e_st_toric(fx.fan("p1")) == B({(0, 0): 1, (1, 1): 1})
    assert st.e_st_toric(fx.fan("p2")) == B({(0, 0): 1, (1, 1): 1, (2, 2): 1})
    assert st.e_st_toric(fx.fan("p112")) == \
        B({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_smooth_toric_hodge_diagonal():
    table = st.stringy_hodge_table(st.e_st_toric(fx.fan("p2")), 2)
    assert all(p == q for (p, q), _ in table.entries)


def test_e_int_orbit_closures():
    fan = fx.fan("p2")
    ray = lat.cone_from_generators([(1, 0)], 2)
    assert st.e_int_orbit_closure(fan, ray) == B({(0, 0): 1, (1, 1): 1})
    full = [c for c in fan.cones if c.dim == 2][0]
    assert st.e_int_orbit_closure(fan, full) == B.one()
    whole = lat.cone_from_generators((), 2)
    assert st.e_int_orbit_closure(fx.fan("p112"), whole) == \
        B({(0, 0): 1, (1, 1): 1, (2, 2): 1})
    with pytest.raises(ConeNotInFan):
        st.e_int_orbit_closure(fan, lat.cone_from_generators([(1, 1)], 2))


@pytest.mark.parametrize("name", ["p1", "p2", "p112"])
def test_toric_stringy_decomposes_over_orbit_closures(name):
    fan = fx.fan(name)
    total = B.zero()
    for cone in fan.cones:
        total = total + st.e_int_orbit_closure(fan, cone) \
            * st.tilde_s_polynomial(cone).to_bivariate(1, 1)
    assert total == st.e_st_toric(fan)


# -- string cohomology table -----------------------------------------------------------------

def test_table_diamond():
    table = st.string_cohomology_table(pair("diamond"))
    assert table.as_dict() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}


def test_table_quintic():
    table = st.string_cohomology_table(pair("quintic"))
    assert table.entry(1, 1) == 1 and table.entry(2, 1) == 101


@pytest.mark.parametrize("name", ["diamond", "p2", "cube", "quartic"])
def test_table_signed_sum_and_subdivision_invariance(name):
    p = pair(name)
    base = st.string_cohomology_table(p)
    assert base.to_e_polynomial() == st.e_st_hypersurface(p)
    sub = lat.stellar_subdivision(p.dual)
    assert st.string_cohomology_table(p, sub) == base


def test_table_rejects_foreign_subdivision():
    from stringcone.errors import InvalidSubdivision
    p = pair("diamond")
    sub = lat.stellar_subdivision(p.cone)  # wrong side
    with pytest.raises(InvalidSubdivision):
        st.string_cohomology_table(p, sub)
