"""Per-face Newton polygon data of functions and complete intersections on toric varieties."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _hull
from .errors import (
    DimensionMismatch,
    FaceMissesNewtonPolygon,
    OriginInSupport,
    SupportOutsideCone,
    ZeroPolynomial,
)
from .lattice import LatticePoint, add, rank, scale, sublattice_basis
from .polyhedral import (
    Cone,
    Face,
    NewtonPolyhedron,
    compact_faces,
    dual_cone,
    face_lattice,
    newton_polyhedron,
    support_on_face,
    supporting_face,
)
from .volume import LatticePolytope, VolumeConvention, k_coefficient


@dataclass(frozen=True)
class ToricVarietyData:
    """An affine toric variety X_sigma with ambient coordinates z_i <-> generators."""

    d: int
    sigma: Cone
    sigma_dual: Cone
    semigroup_generators: tuple[LatticePoint, ...]
    faces: tuple[Face, ...]
    isolated_singularity: bool = True
    name: str = ""

    @classmethod
    def from_cone(cls, sigma_rays, semigroup_generators, isolated_singularity=None, name=""):
        sigma = Cone.from_rays(sigma_rays)
        sigma_dual = dual_cone(sigma)
        gens = tuple(tuple(int(x) for x in g) for g in semigroup_generators)
        if len(set(gens)) != len(gens):
            raise ValueError("semigroup generators must be distinct")
        for g in gens:
            if len(g) != sigma.ambient_rank or not sigma_dual.contains(g):
                raise SupportOutsideCone(f"generator {g} is not in the dual cone")
        if rank(gens) != sigma.ambient_rank:
            raise DimensionMismatch("semigroup generators do not span the lattice")
        faces = tuple(face_lattice(sigma_dual, gens))
        if isolated_singularity is None:
            isolated_singularity = _smooth_off_origin(sigma)
        return cls(sigma.ambient_rank, sigma, sigma_dual, gens, faces, isolated_singularity, name)

    @classmethod
    def affine_space(cls, n: int) -> "ToricVarietyData":
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return cls.from_cone(basis, basis, isolated_singularity=True, name=f"C^{n}")

    @property
    def n_ambient(self) -> int:
        return len(self.semigroup_generators)

    @property
    def full_face(self) -> Face:
        return self.faces[-1]

    @property
    def origin_face(self) -> Face:
        return self.faces[0]

    def face_by_rays(self, rays: Iterable[Sequence[int]]) -> Face:
        key = tuple(sorted(tuple(r) for r in rays))
        for face in self.faces:
            if face.rays == key:
                return face
        raise KeyError(f"no face with rays {key}")

    def monomial(self, exponents: Sequence[int]) -> LatticePoint:
        if len(exponents) != self.n_ambient:
            raise DimensionMismatch(f"expected {self.n_ambient} exponents, got {len(exponents)}")
        point = (0,) * self.d
        for e, g in zip(exponents, self.semigroup_generators):
            if e < 0:
                raise ValueError("negative exponent")
            point = add(point, scale(e, g))
        return point


def _smooth_off_origin(sigma: Cone) -> bool:
    """Every proper face of sigma is a smooth cone, i.e. the singular locus is the fixed point."""
    for face in face_lattice(sigma, sigma.rays):
        if face.dim in (0, sigma.ambient_rank):
            continue
        if len(face.rays) != face.dim or sublattice_basis(list(face.rays)).index_in_saturation != 1:
            return False
    return True


@dataclass(frozen=True)
class LatticePolynomial:
    """Finite sum of lattice points of the semigroup with exact rational coefficients."""

    terms: Mapping[LatticePoint, Fraction]
    ambient: Mapping[tuple, Fraction] | None = field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            v = Fraction(v)
            if v != 0:
                clean[tuple(k)] = clean.get(tuple(k), 0) + v
        object.__setattr__(self, "terms", {k: clean[k] for k in sorted(clean) if clean[k] != 0})

    @classmethod
    def from_ambient(cls, ambient: Mapping[tuple, Fraction], X: ToricVarietyData) -> "LatticePolynomial":
        terms: dict = {}
        for exps, c in ambient.items():
            p = X.monomial(exps)
            terms[p] = terms.get(p, 0) + Fraction(c)
        return cls(terms, dict(ambient))

    @property
    def support(self) -> list[LatticePoint]:
        return list(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def restrict(self, face: Face) -> "LatticePolynomial":
        return LatticePolynomial({k: v for k, v in self.terms.items() if face.contains(k)})

    def __add__(self, other: "LatticePolynomial") -> "LatticePolynomial":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        ambient = None
        if self.ambient is not None and other.ambient is not None:
            ambient = dict(self.ambient)
            for k, v in other.ambient.items():
                ambient[k] = ambient.get(k, 0) + v
            ambient = {k: v for k, v in ambient.items() if v != 0}
        return LatticePolynomial(terms, ambient)

    def scaled(self, c) -> "LatticePolynomial":
        c = Fraction(c)
        ambient = None if self.ambient is None else {k: c * v for k, v in self.ambient.items() if c * v}
        return LatticePolynomial({k: c * v for k, v in self.terms.items()}, ambient)


@dataclass(frozen=True)
class CompleteIntersectionData:
    """(f_1, ..., f_k): the first k-1 components cut out X^g, the last is the function."""

    components: tuple[LatticePolynomial, ...]
    whitney_assertion: bool = True

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a complete intersection needs at least one component")
        for c in self.components:
            if c.is_zero():
                raise ZeroPolynomial("complete intersection component is zero")

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def f(self) -> LatticePolynomial:
        return self.components[-1]

    @property
    def g(self) -> tuple[LatticePolynomial, ...]:
        return self.components[:-1]


@dataclass(frozen=True)
class FacetData:
    gamma: LatticePolytope
    u: tuple[int, ...]  # intrinsic normal
    ambient_u: tuple | None
    supporting_faces: dict  # component index -> LatticePolytope
    d: int
    K: int


@dataclass(frozen=True)
class FaceInvariantData:
    face: Face
    I_set: tuple[int, ...]  # indices into ci.components (0-based), excluding the last
    m: int
    facets: tuple[FacetData, ...]
    dim_too_small: bool = False
    degenerate_faces: tuple = ()


def meets(poly: LatticePolynomial, face: Face) -> bool:
    return any(face.contains(v) for v in poly.support)


def restricted_polyhedron(poly: LatticePolynomial, face: Face) -> NewtonPolyhedron:
    """Gamma_+(poly) intersected with the face, built from supp(poly) on the face."""
    return newton_polyhedron(support_on_face(poly.support, face), face)


def product_polyhedron(parts: Sequence[NewtonPolyhedron], face: Face) -> NewtonPolyhedron:
    """Minkowski sum of restricted Newton polyhedra sharing the same face."""
    verts = [list(p.vertices) for p in parts]
    acc = verts[0]
    for vs in verts[1:]:
        acc = sorted({add(a, b) for a in acc for b in vs})
    return newton_polyhedron(acc, face)


def _face_setup(ci: CompleteIntersectionData, face: Face):
    fk = ci.f
    if not meets(fk, face):
        raise FaceMissesNewtonPolygon(f"supp(f) misses the face {face.label()}")
    I = tuple(j for j, g in enumerate(ci.g) if meets(g, face))
    order = list(I) + [ci.k - 1]
    parts = {j: restricted_polyhedron(ci.components[j], face) for j in order}
    prod = product_polyhedron([parts[j] for j in order], face)
    return I, order, parts, prod


def face_invariant_data(
    X: ToricVarietyData,
    ci: CompleteIntersectionData,
    face: Face,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
) -> FaceInvariantData:
    """I(face), m(face), the product facets with normals u_i and the coefficients d_i, K_i."""
    mode = VolumeConvention.parse(mode)
    if face.dim == 0:
        raise OriginInSupport("the zero face only meets a polynomial with a constant term")
    I, order, parts, prod = _face_setup(ci, face)
    m = len(I) + 1
    too_small = face.dim < m
    cset = compact_faces(prod, face.dim - 1)
    lattice = face.generator_sublattice
    facets = []
    for cf in cset.faces:
        supp_faces = {}
        for j in order:
            verts, _ = supporting_face(parts[j], cf.normal, intrinsic=True)
            supp_faces[j] = LatticePolytope(tuple(verts), lattice)
        d_i = supporting_face(parts[ci.k - 1], cf.normal, intrinsic=True)[1]
        if too_small:
            K_i = 0
        else:
            K_i = k_coefficient(face.dim, m, [supp_faces[j] for j in order], mode)
        facets.append(
            FacetData(LatticePolytope(cf.vertices, lattice), cf.normal, cf.ambient_normal, supp_faces, d_i, K_i)
        )
    return FaceInvariantData(face, I, m, tuple(facets), too_small, cset.lower_dim_faces)


def minkowski_decomposition_holds(data: FaceInvariantData) -> bool:
    for facet in data.facets:
        summed = _hull.minkowski_sum(*(list(p.vertices) for p in facet.supporting_faces.values()))
        if tuple(sorted(summed)) != facet.gamma.vertices:
            return False
    return True


# -- Newton-polygon preserving deformations ----------------------------------

@dataclass(frozen=True)
class PreservingReport:
    holds: bool
    contained: bool
    touching: tuple  # (face id, vertex of h, facet normal of f) triples
    constructive: bool | None
    coefficient: Fraction | None


def newton_preserving_check(
    f: LatticePolynomial, h: LatticePolynomial, X: ToricVarietyData, rng_seed: int = 0
) -> PreservingReport:
    """Whether adding multiples of ``h`` leaves the Newton polygon of ``f`` untouched.

    Requires Gamma_+(h) inside Gamma_+(f) and, on every face met by supp(h),
    the top-dimensional compact faces of the two restricted polygons to be
    disjoint.
    """
    full = X.full_face
    pf = restricted_polyhedron(f, full)
    ph = restricted_polyhedron(h, full)
    contained = all(pf.contains(v) for v in ph.vertices)
    touching = []
    if contained:
        for face in X.faces:
            if face.dim == 0 or not meets(h, face):
                continue
            if not meets(f, face):
                touching.append((face.id, None, None))
                continue
            top = face.dim - 1
            hf = compact_faces(restricted_polyhedron(h, face), top)
            ff = compact_faces(restricted_polyhedron(f, face), top)
            pf_face = restricted_polyhedron(f, face)
            for beta in ff.faces:
                for gamma in hf.faces:
                    for v in gamma.vertices:
                        if _on_facet(pf_face, beta, v):
                            touching.append((face.id, v, beta.normal))
    holds = contained and not touching
    constructive = coefficient = None
    if holds:
        rng = random.Random(f"preserve:{rng_seed}")
        coefficient = Fraction(rng.randint(1, 997), rng.randint(1, 997)) * rng.choice((-1, 1))
        combined = f + h.scaled(coefficient)
        constructive = (
            not combined.is_zero() and restricted_polyhedron(combined, full).vertices == pf.vertices
        )
        holds = constructive
    return PreservingReport(holds, contained, tuple(touching), constructive, coefficient)


def _on_facet(p: NewtonPolyhedron, beta, v) -> bool:
    coords = p.recession.intrinsic(v)
    return sum(a * b for a, b in zip(beta.normal, coords)) == beta.offset


# -- non-degeneracy heuristic ---------------------------------------------------

@dataclass(frozen=True)
class NondegeneracyVerdict:
    kind: str  # "NoWitnessFound" or "DegenerateWitness"
    seed: int
    trials: int
    face: int | None = None
    u: tuple | None = None
    point: tuple | None = None
    system: str | None = None
    checks: int = 0

    @property
    def degenerate(self) -> bool:
        return self.kind == "DegenerateWitness"


def _u_parts(ci, face, order, u):
    """Weight-u initial forms of the components, as Laurent polynomials in face coordinates."""
    out = {}
    for j in order:
        terms = {face.intrinsic(v): c for v, c in ci.components[j].terms.items() if face.contains(v)}
        low = min(sum(a * b for a, b in zip(u, e)) for e in terms)
        out[j] = {e: c for e, c in terms.items() if sum(a * b for a, b in zip(u, e)) == low}
    return out


def _interior_normals(prod: NewtonPolyhedron) -> list[tuple[int, ...]]:
    """One weight vector per compact face of positive dimension, inside its normal cone."""
    hull = prod.hull
    normals = []
    for s in hull.faces():
        if not hull.is_compact(s) or hull.face_dim(s) < 1:
            continue
        acc = None
        for f in hull.facets_of(s):
            acc = f.normal if acc is None else add(acc, f.normal)
        normals.append(tuple(acc))
    return sorted(set(normals))


def nondegeneracy_heuristic(
    X: ToricVarietyData, ci: CompleteIntersectionData, trials: int = 64, rng_seed: int = 0
) -> NondegeneracyVerdict:
    """Search for a singular point of a face system on the torus.

    For every face met by supp(f) and every compact face of the product
    polygon, the weight-u parts are sliced by fixing one coordinate to 1
    (they are weighted homogeneous) and, when the slice is still too large,
    by fixing further coordinates to random rationals. The remaining square
    system plus the Jacobian minors is tested for a common torus zero with an
    exact Groebner basis. A witness is a proof of degeneracy; finding none
    is not a proof of non-degeneracy.
    """
    from . import _torus

    if trials < 1:
        raise ValueError("trials must be >= 1")
    checks = 0
    for face in X.faces:
        if face.dim == 0 or not meets(ci.f, face):
            continue
        I, order, parts, prod = _face_setup(ci, face)
        for u in _interior_normals(prod):
            uparts = _u_parts(ci, face, order, u)
            systems = []
            if I:
                systems.append(("g", [uparts[j] for j in I]))
            systems.append(("g,f", [uparts[j] for j in order]))
            for label, system in systems:
                if any(len(p) == 1 for p in system):
                    continue  # a monomial has no zeros on the torus
                for trial in range(trials):
                    rng = random.Random(f"{rng_seed}:{face.id}:{u}:{label}:{trial}")
                    checks += 1
                    point, sampled = _torus.singular_point(system, face.dim, u, rng)
                    if point is not None:
                        return NondegeneracyVerdict(
                            "DegenerateWitness", rng_seed, trials, face.id, u, point, label, checks
                        )
                    if not sampled:
                        break
    return NondegeneracyVerdict("NoWitnessFound", rng_seed, trials, checks=checks)
