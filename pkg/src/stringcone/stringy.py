"""Stringy invariants of Gorenstein cones and reflexive pairs.

The S-polynomial of a graded cone is (1-t)^dim times the generating series
of its lattice points graded by degree (the h*-polynomial of the degree-1
slice).  The tilde-S polynomial corrects the alternating face sum of
S-polynomials by G-polynomials of the upper face intervals and records the
graded dimensions of the interior quotient modules.

Two independent routes compute the stringy E-function of the Calabi-Yau
hypersurface attached to a reflexive pair (K, K*):

* `e_st_hypersurface` sums (uv)^-1 (-u)^dim(C) * tildeS(C, v/u) *
  tildeS(C*, uv) over the faces C of K, and
* `e_st_oracle` sums closed-form S-series against B-polynomials of dual
  face intervals, grouping the lattice points of K x K* that pair to zero
  by the minimal faces containing them.

Both assemble an integer Laurent numerator and perform one exact division
by uv at the end; non-exactness raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import lattice as lat
from . import posets as po
from .errors import (
    ConeNotInFan,
    InvalidSubdivision,
    NegativeHodgeNumber,
    NotSimplicial,
)
from .lattice import Fan, FanSubdivision, GradedCone, ReflexivePair
from .polynomials import BivariateLaurentPolynomial, UnivariatePolynomial

_UV = BivariateLaurentPolynomial.monomial


# ---------------------------------------------------------------------------
# S and tilde-S polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def s_polynomial(cone: GradedCone) -> UnivariatePolynomial:
    """(1-t)^dim * sum_n t^deg(n), truncated at degree dim (exact: the full
    series is a polynomial of degree <= dim)."""
    d = cone.dim
    counts = [lat.count_lattice_points_at_degree(cone, k) for k in range(d + 1)]
    coeffs = {}
    for j in range(d + 1):
        coeffs[j] = sum(counts[i] * (-1) ** (j - i) * comb(d, j - i)
                        for i in range(j + 1))
    return UnivariatePolynomial(coeffs)


@lru_cache(maxsize=None)
def s_polynomial_interior(cone: GradedCone) -> UnivariatePolynomial:
    """(1-t)^dim * sum over relative-interior points of t^deg(n); equals
    the degree-reversal of the S-polynomial by Ehrhart reciprocity."""
    d = cone.dim
    counts = [lat.count_lattice_points_at_degree(cone, k, interior_only=True)
              for k in range(d + 1)]
    coeffs = {}
    for j in range(d + 1):
        coeffs[j] = sum(counts[i] * (-1) ** (j - i) * comb(d, j - i)
                        for i in range(j + 1))
    return UnivariatePolynomial(coeffs)


@lru_cache(maxsize=None)
def _lattice_poset(cone: GradedCone) -> po.EulerianPoset:
    return po.poset_of_face_lattice(lat.face_lattice(cone))


@lru_cache(maxsize=None)
def tilde_s_polynomial(cone: GradedCone) -> UnivariatePolynomial:
    """Alternating face sum of S-polynomials weighted by G-polynomials of
    the upper intervals in the face lattice."""
    fl = lat.face_lattice(cone)
    poset = _lattice_poset(cone)
    top = fl.faces[-1].gen_indices
    total = UnivariatePolynomial.zero()
    for f in fl.faces:
        g = po.g_polynomial(poset.interval(f.gen_indices, top))
        sign = (-1) ** (cone.dim - f.dim)
        total = total + sign * (s_polynomial(f.as_cone()) * g)
    return total


def tilde_s_simplicial(cone: GradedCone) -> UnivariatePolynomial:
    """Plain alternating face sum; only valid for simplicial cones, where
    every upper interval is Boolean and its G-polynomial is 1."""
    if not cone.is_simplicial():
        raise NotSimplicial(f"cone has {len(cone.generators)} generators "
                            f"in dimension {cone.dim}")
    fl = lat.face_lattice(cone)
    total = UnivariatePolynomial.zero()
    for f in fl.faces:
        total = total + (-1) ** (cone.dim - f.dim) * s_polynomial(f.as_cone())
    return total


@dataclass(frozen=True)
class BoxPointTable:
    """Lattice points in the open fundamental box of a simplicial cone,
    grouped by their degree (the coordinate sum)."""

    cone: GradedCone
    by_shift: dict

    def count(self, shift: int) -> int:
        return len(self.by_shift.get(shift, ()))

    def total(self) -> int:
        return sum(len(v) for v in self.by_shift.values())


def box_points(cone: GradedCone) -> BoxPointTable:
    """Enumerate sum(a_i g_i) with all a_i in (0,1); the count at shift l
    matches the t^l coefficient of the tilde-S polynomial."""
    if not cone.is_simplicial():
        raise NotSimplicial("box points need a simplicial cone")
    gens = cone.generators
    table: dict[int, list] = {}
    for l in range(1, max(cone.dim, 1)):
        hits = []
        for p in lat.lattice_points_at_degree(cone, l):
            coords = _barycentric(gens, p)
            if coords is not None and all(0 < a < 1 for a in coords):
                hits.append(p)
        if hits:
            table[l] = hits
    return BoxPointTable(cone=cone, by_shift=table)


def _barycentric(gens, point):
    """Coordinates of the point in the (independent) generator basis, or
    None when the overdetermined ambient system is inconsistent."""
    from fractions import Fraction

    from . import intlinalg as la
    ncoeff = len(gens)
    aug = [[Fraction(g[i]) for g in gens] + [Fraction(point[i])]
           for i in range(len(point))]
    rref, pivots = la.rref_fraction(aug)
    if ncoeff in pivots or len(pivots) != ncoeff:
        return None
    coords = [Fraction(0)] * ncoeff
    for row, c in zip(rref, pivots):
        coords[c] = row[-1]
    return coords


# ---------------------------------------------------------------------------
# Hodge tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HodgeTable:
    """Nonnegative (p,q)-indexed table; signed coefficients of an
    E-polynomial.  Keys may be exact rationals for orbifold-type tables;
    every table produced here has integer keys."""

    dimension: int
    entries: tuple  # sorted tuple of ((p, q), h) pairs

    def entry(self, p, q) -> int:
        for (pp, qq), h in self.entries:
            if (pp, qq) == (p, q):
                return h
        return 0

    def as_dict(self) -> dict:
        return {pq: h for pq, h in self.entries}

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get((q, p), 0) == h for (p, q), h in d.items())

    def to_e_polynomial(self) -> BivariateLaurentPolynomial:
        total = BivariateLaurentPolynomial.zero()
        for (p, q), h in self.entries:
            if Fraction(p).denominator != 1 or Fraction(q).denominator != 1:
                raise ValueError("non-integral bidegrees have no E-polynomial")
            total = total + _UV(int(p), int(q), (-1) ** int(p + q) * h)
        return total


def _table_from_entries(entries: dict, dimension: int) -> HodgeTable:
    cleaned = {pq: h for pq, h in entries.items() if h != 0}
    return HodgeTable(dimension=dimension,
                      entries=tuple(sorted(cleaned.items())))


def stringy_hodge_table(e_poly: BivariateLaurentPolynomial,
                        dimension: int) -> HodgeTable:
    """Read h^{p,q} = (-1)^(p+q) * coefficient off an E-polynomial."""
    entries = {}
    for (p, q), c in e_poly.terms.items():
        if p < 0 or q < 0:
            raise NegativeHodgeNumber(f"negative exponent ({p},{q})")
        h = (-1) ** (p + q) * c
        if h < 0:
            raise NegativeHodgeNumber(f"h^({p},{q}) = {h}")
        entries[(p, q)] = h
    return _table_from_entries(entries, dimension)


# ---------------------------------------------------------------------------
# Stringy E-functions of Calabi-Yau hypersurfaces
# ---------------------------------------------------------------------------

def _faces_with_duals(pair: ReflexivePair):
    fl = lat.face_lattice(pair.cone)
    return [(f, pair.dual_face(f)) for f in fl.faces]


def e_st_hypersurface(pair: ReflexivePair) -> BivariateLaurentPolynomial:
    """Mirror-symmetric tilde-S formula, assembled over the face lattice."""
    numerator = BivariateLaurentPolynomial.zero()
    for face, dual in _faces_with_duals(pair):
        ts = tilde_s_polynomial(face.as_cone()).to_bivariate(-1, 1)  # t -> v/u
        ts_dual = tilde_s_polynomial(dual.as_cone()).to_bivariate(1, 1)
        sign_u = _UV(face.dim, 0, (-1) ** face.dim)
        numerator = numerator + sign_u * ts * ts_dual
    return numerator.divide_by_monomial(1, 1).require_polynomial()


def e_st_oracle(pair: ReflexivePair) -> BivariateLaurentPolynomial:
    """Independent route: group the orthogonal point pairs of K x K* by the
    minimal faces containing them and sum the closed geometric-series form
    of each group against a B-polynomial of the dual interval."""
    dim_k = pair.cone.dim
    dual_poset = _lattice_poset(pair.dual)
    dual_lattice = lat.face_lattice(pair.dual)
    numerator = BivariateLaurentPolynomial.zero()
    for face, dual in _faces_with_duals(pair):
        s1 = s_polynomial(face.as_cone()).to_bivariate(-1, 1)  # S(C1, v/u)
        u_pow = _UV(face.dim, 0)
        # faces of K* inside the dual face
        sub_faces = [g for g in dual_lattice.faces
                     if g.gen_indices <= dual.gen_indices]
        for c2 in sub_faces:
            interval = dual_poset.interval(c2.gen_indices, dual.gen_indices)
            b = po.b_polynomial(interval)
            s2 = s_polynomial(c2.as_cone()).to_bivariate(1, 1)  # S(C2, uv)
            sign = (-1) ** (dim_k - c2.dim)
            numerator = numerator + sign * (u_pow * b * s1 * s2)
    return numerator.divide_by_monomial(1, 1).require_polynomial()


def mirror_transform(e_poly: BivariateLaurentPolynomial,
                     cy_dimension: int) -> BivariateLaurentPolynomial:
    """(-u)^cy_dimension * E(1/u, v), the mirror side of the duality test."""
    swapped = BivariateLaurentPolynomial(
        {(-a, b): c for (a, b), c in e_poly.terms.items()})
    return swapped * _UV(cy_dimension, 0, (-1) ** cy_dimension)


# ---------------------------------------------------------------------------
# Toric varieties: stringy and intersection E-polynomials
# ---------------------------------------------------------------------------

def _fan_interval(fan: Fan, low: GradedCone, high: GradedCone) -> po.EulerianPoset:
    members = [c for c in fan.cones
               if set(low.generators) <= set(c.generators)
               and set(c.generators) <= set(high.generators)]
    elements = [c.generators for c in members]
    covers = [(a.generators, b.generators)
              for a in members for b in members
              if b.dim == a.dim + 1 and set(a.generators) <= set(b.generators)]
    return po.EulerianPoset(elements, covers)


def e_st_toric(fan: Fan) -> BivariateLaurentPolynomial:
    """Sum of (uv-1)^codim * S(cone, uv) over the cones of a complete fan
    of Gorenstein cones."""
    lat.check_complete(fan)
    d = fan.rank
    uv_minus_1 = BivariateLaurentPolynomial({(1, 1): 1, (0, 0): -1})
    total = BivariateLaurentPolynomial.zero()
    for cone in fan.cones:
        total = total + uv_minus_1 ** (d - cone.dim) \
            * s_polynomial(cone).to_bivariate(1, 1)
    return total


def e_int_orbit_closure(fan: Fan, cone: GradedCone) -> BivariateLaurentPolynomial:
    """Intersection-cohomology E-polynomial of the orbit closure of a cone:
    sum over cones containing it of torus E-factors weighted by dual-interval
    G-polynomials."""
    canon = lat.cone_from_generators(cone.generators, fan.rank)
    if canon not in fan.cones:
        raise ConeNotInFan(f"{cone} is not a cone of the fan")
    d = fan.rank
    uv_minus_1 = BivariateLaurentPolynomial({(1, 1): 1, (0, 0): -1})
    total = BivariateLaurentPolynomial.zero()
    for upper in fan.cones:
        if not set(canon.generators) <= set(upper.generators):
            continue
        interval = _fan_interval(fan, canon, upper)
        g = po.g_polynomial(interval.dual()).to_bivariate(1, 1)
        total = total + uv_minus_1 ** (d - upper.dim) * g
    return total


# ---------------------------------------------------------------------------
# String cohomology dimension table
# ---------------------------------------------------------------------------

def string_cohomology_table(pair: ReflexivePair,
                            subdivision: FanSubdivision | None = None) -> HodgeTable:
    """Hodge table assembled from tilde-S coefficient vectors over dual face
    pairs; the optional subdivision of the dual cone is validated but the
    dimensions do not depend on it (regular subdivisions leave the graded
    dimensions unchanged).  The signed sum of the table reproduces the
    stringy E-function."""
    if subdivision is not None:
        if subdivision.parent != pair.dual:
            raise InvalidSubdivision("subdivision must refine the dual cone")
        lat.validate_subdivision(subdivision)
    d = pair.cone.dim - 1  # rank of the polytope lattice
    entries: dict = {}
    for face, dual in _faces_with_duals(pair):
        ts = tilde_s_polynomial(face.as_cone())
        ts_dual = tilde_s_polynomial(dual.as_cone())
        for a, ca in ts_dual.coeffs.items():
            for b, cb in ts.coeffs.items():
                p = a - b + face.dim - 1
                q = a + b - 1
                if not (0 <= p <= d - 1 and 0 <= q <= d - 1):
                    raise ValueError(f"bidegree ({p},{q}) out of range")
                entries[(p, q)] = entries.get((p, q), 0) + ca * cb
    table = _table_from_entries(entries, d - 1)
    if table.to_e_polynomial() != e_st_hypersurface(pair):
        raise ValueError("table does not reproduce the stringy E-function")
    return table
