"""Exact lattice geometry: polytopes, duality, graded cones, face lattices,
lattice-point enumeration and fan subdivisions.

Everything is integer/rational arithmetic.  Facets are enumerated from
(dim-1)-subsets of generators via exact null spaces, point enumeration is
a bounding-box scan filtered by facet inequalities, and cones of dimension
lower than the ambient rank are handled through saturated span lattices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import intlinalg as la
from .errors import (
    DimensionBudgetExceeded,
    InvalidSubdivision,
    NotComplete,
    NotGorenstein,
    NotReflexivePair,
    OriginNotInterior,
)

AMBIENT_RANK_BUDGET = 8
_SUBSET_BUDGET = 200_000
_BOX_BUDGET = 20_000_000
_NUMPY_THRESHOLD = 4096

Vector = tuple[int, ...]


# ---------------------------------------------------------------------------
# Polytopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope given by its sorted vertex list."""

    rank: int
    vertices: tuple[Vector, ...]


@dataclass(frozen=True)
class RationalPolytope:
    """Polytope with exact rational vertices (the polar dual lives here)."""

    rank: int
    vertices: tuple[tuple[Fraction, ...], ...]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def to_lattice(self) -> LatticePolytope:
        if not self.is_integral():
            raise ValueError("polytope has non-integral vertices")
        return lattice_polytope([tuple(int(x) for x in v) for v in self.vertices])


def _homogenized_generators(vertices) -> tuple[Vector, ...]:
    """Vertices v -> primitive generators of the cone over v x {1}."""
    gens = []
    for v in vertices:
        den = 1
        for x in v:
            den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
        gens.append(la.primitive_vector([int(Fraction(x) * den) for x in v] + [den]))
    return tuple(gens)


def _polytope_facets(vertices):
    """Facet data of conv(vertices): list of (normal a, offset c) with
    a·x + c >= 0 on the polytope and = 0 exactly on the facet."""
    gens = _homogenized_generators(vertices)
    rank = len(vertices[0])
    facets = _cone_facets_fulldim(gens, rank + 1)
    return [(f[:-1], f[-1]) for f in facets]


def lattice_polytope(vertices) -> LatticePolytope:
    """Canonicalize a vertex list: dedupe, require full dimension, drop
    non-extreme points, sort."""
    pts = sorted({tuple(int(x) for x in v) for v in vertices})
    if not pts:
        raise ValueError("empty vertex list")
    rank = len(pts[0])
    if any(len(v) != rank for v in pts):
        raise ValueError("vertices of mixed rank")
    diffs = [[a - b for a, b in zip(v, pts[0])] for v in pts[1:]]
    if la.rank_int(diffs) != rank:
        raise ValueError("polytope is not full-dimensional")
    facets = _polytope_facets(pts)
    verts = []
    for v in pts:
        tight = [a for a, c in facets if la.dot(a, v) + c == 0]
        if tight and la.rank_int(tight) == rank:
            verts.append(v)
    return LatticePolytope(rank=rank, vertices=tuple(sorted(verts)))


def dual_polytope(p: LatticePolytope | RationalPolytope) -> RationalPolytope:
    """Polar dual {n : <m, n> >= -1 for all m in p}, exact."""
    facets = _polytope_facets(p.vertices)
    if any(c <= 0 for _, c in facets):
        raise OriginNotInterior("origin is not in the interior")
    verts = [tuple(Fraction(a_i, c) for a_i in a) for a, c in facets]
    return RationalPolytope(rank=p.rank, vertices=tuple(sorted(verts)))


def interior_lattice_points(p: LatticePolytope) -> list[Vector]:
    facets = _polytope_facets(p.vertices)
    lo = [min(v[i] for v in p.vertices) for i in range(p.rank)]
    hi = [max(v[i] for v in p.vertices) for i in range(p.rank)]
    out = []
    for cand in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        if all(la.dot(a, cand) + c > 0 for a, c in facets):
            out.append(cand)
    return out


def is_reflexive(p: LatticePolytope) -> bool:
    """True iff 0 is the unique interior lattice point and the polar dual
    is again a lattice polytope."""
    facets = _polytope_facets(p.vertices)
    if any(c <= 0 for _, c in facets):
        return False
    if any(c != 1 for _, c in facets):
        return False
    return interior_lattice_points(p) == [tuple([0] * p.rank)]


# ---------------------------------------------------------------------------
# Graded cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedCone:
    """Pointed rational cone with primitive extreme generators and an
    integral grading functional equal to 1 on every generator.

    Identity is structural on (ambient_rank, generators, deg); the facet
    and equation lists are canonical but derived data.
    """

    ambient_rank: int
    generators: tuple[Vector, ...]
    deg: Vector
    facets: tuple[Vector, ...] = field(compare=False)
    equations: tuple[Vector, ...] = field(compare=False)
    dim: int = field(compare=False)

    def is_simplicial(self) -> bool:
        return len(self.generators) == self.dim

    def __repr__(self) -> str:
        return (f"GradedCone(dim={self.dim}, rank={self.ambient_rank}, "
                f"generators={list(self.generators)})")


def _cone_facets_fulldim(gens, rank):
    """Facet normals of a full-dimensional pointed cone via null spaces of
    (rank-1)-subsets of generators."""
    if rank == 0:
        return []
    n_subsets = math.comb(len(gens), rank - 1)
    if n_subsets > _SUBSET_BUDGET:
        raise DimensionBudgetExceeded(
            f"{n_subsets} candidate facet subsets exceeds budget")
    seen = set()
    facets = []
    for subset in itertools.combinations(gens, rank - 1):
        kernel = la.nullspace_fraction(list(subset)) if subset else \
            [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        vals = [la.dot(normal, g) for g in gens]
        if all(v >= 0 for v in vals):
            cand = normal
        elif all(v <= 0 for v in vals):
            cand = tuple(-x for x in normal)
        else:
            continue
        if cand not in seen:
            seen.add(cand)
            facets.append(cand)
    return sorted(facets)


def _lift_functional(basis_rows, values):
    sol = la.solve_integer([list(r) for r in basis_rows], values)
    if sol is None:
        raise ArithmeticError("functional does not lift integrally")
    return sol


def cone_from_generators(generators, ambient_rank: int | None = None,
                         deg: Vector | None = None) -> GradedCone:
    """Build a GradedCone; raises NotGorenstein when no integral functional
    takes the value 1 on all generators."""
    gens = [la.primitive_vector(g) for g in generators]
    gens = sorted({g for g in gens if any(x != 0 for x in g)})
    if ambient_rank is None:
        if not gens:
            raise ValueError("ambient_rank required for the zero cone")
        ambient_rank = len(gens[0])
    if ambient_rank > AMBIENT_RANK_BUDGET:
        raise DimensionBudgetExceeded(
            f"ambient rank {ambient_rank} exceeds budget {AMBIENT_RANK_BUDGET}")
    if not gens:
        zero = tuple([0] * ambient_rank)
        eye = tuple(tuple(int(i == j) for j in range(ambient_rank))
                    for i in range(ambient_rank))
        return GradedCone(ambient_rank=ambient_rank, generators=(),
                          deg=zero if deg is None else tuple(deg),
                          facets=(), equations=eye, dim=0)

    span_basis = la.saturation_basis(gens)
    dim = len(span_basis)
    equations = tuple(sorted(la.integer_kernel([list(g) for g in gens])))

    if dim == ambient_rank:
        facets = _cone_facets_fulldim(gens, ambient_rank)
    else:
        coords = []
        for g in gens:
            c = la.coordinates_in_basis(span_basis, g)
            if c is None:
                raise ArithmeticError("generator outside saturated span")
            coords.append(c)
        local = _cone_facets_fulldim(sorted(set(coords)), dim)
        facets = sorted(_lift_functional(span_basis, f) for f in local)

    # pointedness: the only vector killed by every facet and equation is 0
    if la.rank_int([list(f) for f in facets] + [list(e) for e in equations]) \
            != ambient_rank:
        raise ValueError("cone is not pointed")

    # extreme-ray reduction: keep generators whose minimal face is a ray
    extreme = []
    for g in gens:
        tight = [list(f) for f in facets if la.dot(f, g) == 0]
        tight += [list(e) for e in equations]
        if la.rank_int(tight) == ambient_rank - 1:
            extreme.append(g)
    gens = sorted(extreme)

    if deg is None:
        deg = deg_functional(gens, ambient_rank)
    else:
        deg = tuple(int(x) for x in deg)
        if any(la.dot(deg, g) != 1 for g in gens):
            raise NotGorenstein("given grading is not 1 on all generators")

    return GradedCone(ambient_rank=ambient_rank, generators=tuple(gens),
                      deg=deg, facets=tuple(facets), equations=equations,
                      dim=dim)


def deg_functional(generators, ambient_rank: int | None = None) -> Vector:
    """The integral functional with value 1 on every generator (unique on
    the span, extended deterministically); NotGorenstein if none exists."""
    gens = [la.primitive_vector(g) for g in generators]
    if not gens:
        if ambient_rank is None:
            raise ValueError("ambient_rank required")
        return tuple([0] * ambient_rank)
    sol = la.solve_integer([list(g) for g in gens], [1] * len(gens))
    if sol is None:
        raise NotGorenstein("no integral functional is 1 on all generators")
    return sol


def gorenstein_cone_over(p: LatticePolytope) -> GradedCone:
    """Cone over P x {1}; the grading is the last coordinate."""
    gens = [tuple(v) + (1,) for v in p.vertices]
    deg = tuple([0] * p.rank) + (1,)
    return cone_from_generators(gens, ambient_rank=p.rank + 1, deg=deg)


def point_in_cone(cone: GradedCone, x, strict: bool = False) -> bool:
    if any(la.dot(e, x) != 0 for e in cone.equations):
        return False
    if strict:
        return all(la.dot(f, x) > 0 for f in cone.facets)
    return all(la.dot(f, x) >= 0 for f in cone.facets)


# ---------------------------------------------------------------------------
# Lattice point enumeration
# ---------------------------------------------------------------------------

def _slice_ranges(cone: GradedCone, k: int):
    lo = [min(k * g[i] for g in cone.generators) for i in range(cone.ambient_rank)]
    hi = [max(k * g[i] for g in cone.generators) for i in range(cone.ambient_rank)]
    return lo, hi


def _slice_scan(cone: GradedCone, k: int, interior: bool, count_only: bool):
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if not cone.generators:
        pts = [tuple([0] * cone.ambient_rank)] if k == 0 else []
        return len(pts) if count_only else tuple(pts)
    if k == 0:
        origin = tuple([0] * cone.ambient_rank)
        ok = not interior or not cone.facets
        pts = [origin] if ok else []
        return len(pts) if count_only else tuple(pts)
    lo, hi = _slice_ranges(cone, k)
    size = 1
    for l, h in zip(lo, hi):
        size *= (h - l + 1)
    if size > _BOX_BUDGET:
        raise DimensionBudgetExceeded(f"bounding box of size {size}")
    rows = [np.array(v, dtype=np.int64)
            for v in (cone.deg, *cone.equations, *cone.facets)]
    if size > _NUMPY_THRESHOLD:
        axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
        grid = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([g.ravel() for g in grid], axis=1)
        mask = pts @ rows[0] == k
        for e in cone.equations:
            mask &= pts @ np.array(e, dtype=np.int64) == 0
        for f in cone.facets:
            vals = pts @ np.array(f, dtype=np.int64)
            mask &= (vals > 0) if interior else (vals >= 0)
        if count_only:
            return int(mask.sum())
        sel = pts[mask]
        return tuple(tuple(int(x) for x in row) for row in sel)
    out = []
    count = 0
    for cand in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        if la.dot(cone.deg, cand) != k:
            continue
        if any(la.dot(e, cand) != 0 for e in cone.equations):
            continue
        if interior:
            if any(la.dot(f, cand) <= 0 for f in cone.facets):
                continue
        elif any(la.dot(f, cand) < 0 for f in cone.facets):
            continue
        if count_only:
            count += 1
        else:
            out.append(cand)
    return count if count_only else tuple(out)


@lru_cache(maxsize=None)
def lattice_points_at_degree(cone: GradedCone, k: int,
                             interior_only: bool = False) -> tuple[Vector, ...]:
    """All lattice points of the cone (or its relative interior) at the
    given degree, in lexicographic order."""
    return _slice_scan(cone, k, interior_only, count_only=False)


@lru_cache(maxsize=None)
def count_lattice_points_at_degree(cone: GradedCone, k: int,
                                   interior_only: bool = False) -> int:
    return _slice_scan(cone, k, interior_only, count_only=True)


# ---------------------------------------------------------------------------
# Face lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    """Face of a graded cone, identified by the generators it contains."""

    cone: GradedCone
    gen_indices: frozenset[int]
    dim: int

    def generator_vectors(self) -> tuple[Vector, ...]:
        return tuple(self.cone.generators[i] for i in sorted(self.gen_indices))

    def as_cone(self) -> GradedCone:
        return _face_as_cone(self.cone, tuple(sorted(self.gen_indices)))


@lru_cache(maxsize=None)
def _face_as_cone(parent: GradedCone, indices: tuple[int, ...]) -> GradedCone:
    gens = [parent.generators[i] for i in indices]
    return cone_from_generators(gens, ambient_rank=parent.ambient_rank,
                                deg=parent.deg)


@dataclass(frozen=True)
class FaceLattice:
    """All faces of a cone with the containment order as cover relations."""

    cone: GradedCone
    faces: tuple[Face, ...]            # sorted by (dim, generator indices)
    covers: tuple[tuple[int, int], ...]  # (lower index, upper index)

    def by_genset(self) -> dict[frozenset, Face]:
        return {f.gen_indices: f for f in self.faces}

    def face_of_gens(self, gen_indices) -> Face:
        key = frozenset(gen_indices)
        for f in self.faces:
            if f.gen_indices == key:
                return f
        raise KeyError(f"no face with generators {sorted(key)}")

    def minimum(self) -> Face:
        return self.faces[0]

    def maximum(self) -> Face:
        return self.faces[-1]


@lru_cache(maxsize=None)
def face_lattice(cone: GradedCone) -> FaceLattice:
    """Enumerate all faces as intersections of facet subsets."""
    if cone.dim > AMBIENT_RANK_BUDGET:
        raise DimensionBudgetExceeded(f"cone dimension {cone.dim}")
    nf = len(cone.facets)
    if nf > 20:
        raise DimensionBudgetExceeded(f"{nf} facets exceeds enumeration budget")
    gens = cone.generators
    values = [[la.dot(f, g) for g in gens] for f in cone.facets]
    seen: dict[frozenset, None] = {}
    for subset in itertools.product([0, 1], repeat=nf):
        members = frozenset(
            i for i in range(len(gens))
            if all(values[j][i] == 0 for j in range(nf) if subset[j]))
        seen.setdefault(members, None)
    faces = []
    for members in seen:
        sub = [list(gens[i]) for i in sorted(members)]
        dim = la.rank_int(sub) if sub else 0
        faces.append(Face(cone=cone, gen_indices=members, dim=dim))
    faces.sort(key=lambda f: (f.dim, tuple(sorted(f.gen_indices))))
    covers = []
    for i, low in enumerate(faces):
        for j, up in enumerate(faces):
            if up.dim == low.dim + 1 and low.gen_indices <= up.gen_indices:
                covers.append((i, j))
    return FaceLattice(cone=cone, faces=tuple(faces), covers=tuple(covers))


# ---------------------------------------------------------------------------
# Reflexive pairs and dual faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReflexivePair:
    """Gorenstein cones over a reflexive polytope and its polar dual."""

    cone: GradedCone
    dual: GradedCone

    def swapped(self) -> "ReflexivePair":
        return ReflexivePair(cone=self.dual, dual=self.cone)

    def dual_face(self, face: Face) -> Face:
        """Order-reversing bijection between the two face lattices."""
        if face.cone == self.cone:
            source, target = self.cone, self.dual
        elif face.cone == self.dual:
            source, target = self.dual, self.cone
        else:
            raise NotReflexivePair("face does not belong to this pair")
        fgens = face.generator_vectors()
        tgt_gens = target.generators
        members = frozenset(
            j for j, w in enumerate(tgt_gens)
            if all(la.dot(w, g) == 0 for g in fgens))
        result = face_lattice(target).face_of_gens(members)
        if face.dim + result.dim != self.cone.dim:
            raise NotReflexivePair("dual face dimensions do not add up")
        return result


def reflexive_pair(p: LatticePolytope) -> ReflexivePair:
    if not is_reflexive(p):
        raise NotReflexivePair("polytope is not reflexive")
    k = gorenstein_cone_over(p)
    k_dual = gorenstein_cone_over(dual_polytope(p).to_lattice())
    return ReflexivePair(cone=k, dual=k_dual)


# ---------------------------------------------------------------------------
# Subdivisions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanSubdivision:
    """Subdivision of a graded cone into graded subcones."""

    parent: GradedCone
    max_cones: tuple[GradedCone, ...]
    provenance: tuple

    def is_trivial(self) -> bool:
        return len(self.max_cones) == 1 and self.max_cones[0] == self.parent

    def restrict_to_face(self, face_cone: GradedCone) -> "FanSubdivision":
        """Induced subdivision on a face of the parent."""
        cells = []
        for cell in self.max_cones:
            inside = [g for g in cell.generators if point_in_cone(face_cone, g)]
            if not inside:
                continue
            sub = cone_from_generators(inside, self.parent.ambient_rank,
                                       deg=self.parent.deg)
            if sub.dim == face_cone.dim and sub not in cells:
                cells.append(sub)
        if not cells:
            cells = [face_cone]
        return FanSubdivision(parent=face_cone, max_cones=tuple(sorted(
            cells, key=lambda c: c.generators)), provenance=("restricted",))


def trivial_subdivision(cone: GradedCone) -> FanSubdivision:
    return FanSubdivision(parent=cone, max_cones=(cone,),
                          provenance=("trivial",))


def regular_subdivision(cone: GradedCone, heights,
                        force_generic: bool = False) -> FanSubdivision:
    """Lower-hull subdivision induced by lifting the degree-1 lattice points
    by the given heights.

    Any integer height vector yields a valid subdivision (constant heights
    give the trivial one).  With force_generic the heights are perturbed
    lexicographically (h -> h*B + index) so every cell is simplicial; the
    perturbation is recorded in the provenance.
    """
    pts = lattice_points_at_degree(cone, 1)
    heights = [int(h) for h in heights]
    if len(heights) != len(pts):
        raise ValueError(
            f"got {len(heights)} heights for {len(pts)} degree-1 points")
    if cone.dim != cone.ambient_rank:
        raise ValueError("subdivisions are built for full-dimensional cones")
    provenance = ("heights", tuple(heights))
    if force_generic:
        big = 1 << 20
        heights = [h * big + i for i, h in enumerate(heights)]
        provenance = ("heights+lex-perturbation", tuple(heights))
    cells = _lower_hull_cells(cone, pts, heights)
    max_cones = tuple(sorted(
        (cone_from_generators([pts[i] for i in cell], cone.ambient_rank,
                              deg=cone.deg) for cell in cells),
        key=lambda c: c.generators))
    sub = FanSubdivision(parent=cone, max_cones=max_cones,
                         provenance=provenance)
    validate_subdivision(sub)
    return sub


def _lower_hull_cells(cone: GradedCone, pts, heights):
    """Index sets of the full-dimensional lower-hull cells.

    Affine functions on the degree-1 slice are exactly linear functionals
    on the ambient lattice, so a cell is the tight set of a functional phi
    with phi(p) <= h(p) for every lifted point.  Candidates come from
    dim-subsets of points, which bounds this routine to small point
    configurations (stellar_subdivision covers the large ones).
    """
    n = len(pts)
    d = cone.dim
    if math.comb(n, d) > _SUBSET_BUDGET:
        raise DimensionBudgetExceeded(
            f"lower hull over {n} points in dimension {d}")
    cells = set()
    for subset in itertools.combinations(range(n), d):
        phi = _solve_rational_square([pts[i] for i in subset],
                                     [heights[i] for i in subset])
        if phi is None:
            continue
        vals = [sum(f * c for f, c in zip(phi, p)) for p in pts]
        if any(v > h for v, h in zip(vals, heights)):
            continue
        tight = tuple(i for i in range(n) if vals[i] == heights[i])
        cells.add(tight)
    return sorted(cells)


def _solve_rational_square(rows, rhs):
    """Unique rational solution of rows·x = rhs, or None when singular."""
    n = len(rows)
    width = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(h)]
           for row, h in zip(rows, rhs)]
    rref, pivots = la.rref_fraction(aug)
    if len(pivots) != n or any(p >= width for p in pivots):
        return None
    sol = [Fraction(0)] * width
    for i, c in enumerate(pivots):
        sol[c] = rref[i][-1]
    return sol


def stellar_subdivision(cone: GradedCone,
                        center: Vector | None = None) -> FanSubdivision:
    """Regular subdivision that cones a degree-1 point over every facet.

    Induced by heights -1 at the center and 0 elsewhere; fast even for
    large point configurations.  Default center: the unique interior
    degree-1 point (exists for cones over reflexive polytopes).
    """
    pts = lattice_points_at_degree(cone, 1)
    if center is None:
        interior = lattice_points_at_degree(cone, 1, interior_only=True)
        if len(interior) != 1:
            raise ValueError("no canonical interior degree-1 center")
        center = interior[0]
    if center not in pts:
        raise ValueError("center must be a degree-1 lattice point")
    heights = tuple(-1 if p == center else 0 for p in pts)
    cells = []
    for f in cone.facets:
        on_facet = [g for g in cone.generators if la.dot(f, g) == 0]
        cells.append(cone_from_generators(on_facet + [center],
                                          cone.ambient_rank, deg=cone.deg))
    sub = FanSubdivision(parent=cone,
                         max_cones=tuple(sorted(cells, key=lambda c: c.generators)),
                         provenance=("heights", heights))
    validate_subdivision(sub)
    return sub


def validate_subdivision(sub: FanSubdivision, sample_degree: int = 3) -> None:
    """Containment, coverage on a degree-bounded sample, and pairwise
    common-face checks; raises InvalidSubdivision on failure."""
    parent = sub.parent
    if not sub.max_cones:
        raise InvalidSubdivision("no maximal cones")
    for cell in sub.max_cones:
        if cell.dim != parent.dim:
            raise InvalidSubdivision("maximal cone of wrong dimension")
        for g in cell.generators:
            if not point_in_cone(parent, g):
                raise InvalidSubdivision("cell generator outside parent")
            if la.dot(parent.deg, g) != 1:
                raise InvalidSubdivision("cell generator not at degree 1")
    for k in range(sample_degree + 1):
        for p in lattice_points_at_degree(parent, k):
            if not any(point_in_cone(cell, p) for cell in sub.max_cones):
                raise InvalidSubdivision(f"point {p} not covered")
    sample = [p for k in range(min(sample_degree, 2) + 1)
              for p in lattice_points_at_degree(parent, k)]
    for c1, c2 in itertools.combinations(sub.max_cones, 2):
        in12 = sorted(g for g in c1.generators if point_in_cone(c2, g))
        in21 = sorted(g for g in c2.generators if point_in_cone(c1, g))
        if in12 != in21:
            raise InvalidSubdivision("intersection is not a common face")
        for cone_ in (c1, c2):
            if sorted(_minimal_face_of(cone_, in12)) != in12:
                raise InvalidSubdivision("intersection is not a face")
        if in12:
            common = cone_from_generators(in12, parent.ambient_rank,
                                          deg=parent.deg)
            for p in sample:
                if point_in_cone(c1, p) and point_in_cone(c2, p) \
                        and not point_in_cone(common, p):
                    raise InvalidSubdivision(
                        f"shared point {p} outside the common face")


def _minimal_face_of(cone: GradedCone, gens_subset) -> tuple[Vector, ...]:
    tight = [f for f in cone.facets
             if all(la.dot(f, g) == 0 for g in gens_subset)]
    return tuple(g for g in cone.generators
                 if all(la.dot(f, g) == 0 for f in tight))


# ---------------------------------------------------------------------------
# Complete fans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fan:
    """Finite fan given by all of its cones (faces included)."""

    rank: int
    cones: tuple[GradedCone, ...]
    max_cones: tuple[GradedCone, ...]

    def contains(self, cone: GradedCone) -> bool:
        return cone in self.cones


def fan_from_cones(rank: int, max_cones) -> Fan:
    """Collect all faces of the maximal cones; cones must be Gorenstein.

    Every cone is rebuilt from its generator set so that shared faces of
    different maximal cones compare equal (gradings agree on the span but
    their ambient extensions must be canonicalized).
    """
    gen_sets: dict[tuple, None] = {}
    maxes = []
    for c in max_cones:
        canon = cone_from_generators(c.generators, rank)
        maxes.append(canon)
        for f in face_lattice(canon).faces:
            gen_sets.setdefault(f.generator_vectors(), None)
    cones = tuple(sorted((cone_from_generators(gs, rank) for gs in gen_sets),
                         key=lambda c: (c.dim, c.generators)))
    return Fan(rank=rank, cones=cones,
               max_cones=tuple(sorted(maxes, key=lambda c: c.generators)))


def fan_from_rays(rank: int, rays, cone_indices) -> Fan:
    maxes = [cone_from_generators([rays[i] for i in idxs], rank)
             for idxs in cone_indices]
    return fan_from_cones(rank, maxes)


def check_complete(fan: Fan) -> None:
    """Combinatorial completeness: all maximal cones are full-dimensional
    and every (d-1)-cone bounds exactly two of them."""
    d = fan.rank
    if not fan.max_cones or any(c.dim != d for c in fan.max_cones):
        raise NotComplete("a maximal cone is not full-dimensional")
    face_sets = [{f.generator_vectors() for f in face_lattice(m).faces}
                 for m in fan.max_cones]
    for c in fan.cones:
        if c.dim != d - 1:
            continue
        count = sum(c.generators in fs for fs in face_sets)
        if count != 2:
            raise NotComplete(
                f"codimension-1 cone bounds {count} maximal cones")
