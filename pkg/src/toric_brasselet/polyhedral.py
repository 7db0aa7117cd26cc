"""Rational polyhedral cones, their face lattices, and Newton polyhedra.

Polyhedra are stored by vertices plus recession rays. All face and normal
computations happen in the intrinsic coordinates of a face of the dual cone,
i.e. with respect to the lattice generated by the semigroup generators lying
on that face, where the polyhedron is full-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _hull
from .errors import (
    DimensionMismatch,
    NotStronglyConvex,
    SupportOutsideCone,
    UnboundedBelow,
)
from .lattice import (
    LatticePoint,
    SublatticeBasis,
    clear_denominators,
    dot,
    express_in_basis,
    primitive_vector,
    rank,
    solve_rational,
    sublattice_basis,
    zero_sublattice,
)


@dataclass(frozen=True)
class Cone:
    ambient_rank: int
    rays: tuple[LatticePoint, ...]

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]]) -> "Cone":
        rays = [tuple(r) for r in rays]
        if not rays:
            raise DimensionMismatch("a cone needs at least one ray")
        prim = sorted({primitive_vector(r)[0] for r in rays})
        return cls(len(rays[0]), tuple(prim))

    @classmethod
    def orthant(cls, d: int) -> "Cone":
        return cls.from_rays([tuple(int(i == j) for j in range(d)) for i in range(d)])

    @property
    def dim(self) -> int:
        return rank(self.rays)

    def facet_normals(self) -> list[LatticePoint]:
        """Primitive inner normals of the facets of a full-dimensional cone."""
        if self.dim != self.ambient_rank:
            raise DimensionMismatch(f"cone spans {self.dim} of {self.ambient_rank} dimensions")
        hull = _hull.Hull([(0,) * self.ambient_rank], list(self.rays))
        return sorted(f.normal for f in hull.facets)

    def is_strongly_convex(self) -> bool:
        try:
            normals = self.facet_normals()
        except DimensionMismatch:
            # a lower-dimensional cone can still be pointed
            return _pointed(self.rays)
        return rank(normals) == self.ambient_rank

    def contains(self, v: Sequence) -> bool:
        return all(dot(n, v) >= 0 for n in self.facet_normals())


def _pointed(rays) -> bool:
    # pointed iff the facet normals inside the linear span of the rays span it
    basis = sublattice_basis(list(rays)).basis_vectors
    if not basis:
        return True
    coords = [clear_denominators(solve_rational(basis, r)) for r in rays]
    hull = _hull.Hull([(0,) * len(basis)], coords)
    return rank([f.normal for f in hull.facets]) == len(basis)


def dual_cone(c: Cone) -> Cone:
    """The dual cone {u : <u, v> >= 0 for all v in c}, with primitive rays."""
    normals = c.facet_normals()
    if rank(normals) != c.ambient_rank:
        raise NotStronglyConvex(f"cone with rays {c.rays} contains a line")
    return Cone(c.ambient_rank, tuple(sorted(normals)))


@dataclass(frozen=True)
class Face:
    """A face of the dual cone together with the semigroup data living on it."""

    id: int
    rays: tuple[LatticePoint, ...]
    dim: int
    generators: tuple[LatticePoint, ...]
    generator_sublattice: SublatticeBasis
    equations: tuple[LatticePoint, ...]  # facet normals of the cone vanishing on the face
    inequalities: tuple[LatticePoint, ...]  # all facet normals of the cone

    @property
    def span_rays(self) -> tuple[LatticePoint, ...]:
        return self.rays

    @property
    def dual_sublattice_rank(self) -> int:
        return self.generator_sublattice.rank

    def contains(self, v: Sequence) -> bool:
        return all(dot(n, v) >= 0 for n in self.inequalities) and all(dot(n, v) == 0 for n in self.equations)

    def intrinsic(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a lattice point of the face in the generator sublattice basis."""
        return tuple(express_in_basis(v, self.generator_sublattice))

    def intrinsic_ray(self, v: Sequence[int]) -> tuple[int, ...]:
        c = solve_rational(self.generator_sublattice.basis_vectors, v)
        if c is None:
            raise SupportOutsideCone(f"{tuple(v)} is not in the span of the face")
        return clear_denominators(c)

    def label(self) -> str:
        if not self.rays:
            return "{0}"
        return "cone(" + ", ".join(str(r) for r in self.rays) + ")"


def face_lattice(c: Cone, generators: Sequence[Sequence[int]]) -> list[Face]:
    """All faces of the (dual) cone ``c``, from {0} up to ``c`` itself.

    Faces are ordered by dimension, then by their sorted ray lists; ids follow
    that order.
    """
    gens = sorted({tuple(g) for g in generators})
    d = c.ambient_rank
    cone_normals = tuple(c.facet_normals())
    hull = _hull.Hull([(0,) * d], list(c.rays))
    faces = []
    for s in hull.faces():
        rays = tuple(sorted(hull.face_rays(s)))
        eqs = tuple(n for n in cone_normals if all(dot(n, r) == 0 for r in rays))
        on_face = tuple(g for g in gens if all(dot(n, g) == 0 for n in eqs))
        lattice = sublattice_basis(list(on_face)) if on_face else zero_sublattice(d)
        faces.append((len(rays) and rank(rays), rays, on_face, lattice, eqs))
    faces.sort(key=lambda t: (t[0], t[1]))
    return [
        Face(i, rays, dim, on_face, lattice, eqs, cone_normals)
        for i, (dim, rays, on_face, lattice, eqs) in enumerate(faces)
    ]


def support_on_face(support: Iterable[Sequence[int]], face: Face) -> list[LatticePoint]:
    return sorted(tuple(v) for v in support if face.contains(v))


@dataclass(frozen=True)
class CompactFace:
    vertices: tuple[LatticePoint, ...]
    dim: int
    normal: tuple[int, ...] | None = None  # intrinsic, primitive in the dual of the face lattice
    ambient_normal: tuple | None = None
    offset: int | None = None  # minimum of the normal over the polyhedron


@dataclass(frozen=True)
class CompactFaceSet:
    faces: tuple[CompactFace, ...]
    target_dim: int
    degenerate: bool = False
    lower_dim_faces: tuple[CompactFace, ...] = ()


@dataclass
class NewtonPolyhedron:
    """conv(support) + cone(recession), kept in the face's intrinsic lattice."""

    support_points: tuple[LatticePoint, ...]
    recession: Face
    vertices: tuple[LatticePoint, ...] = field(init=False)

    def __post_init__(self):
        face = self.recession
        self._pts = {face.intrinsic(v): v for v in self.support_points}
        self._rays = [face.intrinsic_ray(r) for r in face.rays]
        self.hull = _hull.Hull(list(self._pts), self._rays)
        self._to_ambient = {k: v for k, v in self._pts.items()}
        self.vertices = tuple(sorted(self._to_ambient[v] for v in self.hull.vertices()))

    @property
    def dim(self) -> int:
        return self.recession.dim

    def ambient(self, intrinsic_point) -> LatticePoint:
        return self.recession.generator_sublattice.to_ambient(intrinsic_point)

    def contains(self, v: Sequence[int]) -> bool:
        face = self.recession
        if not face.contains(v):
            return False
        c = solve_rational(face.generator_sublattice.basis_vectors, v)
        return c is not None and self.hull.contains(c)

    def lift_normal(self, normal: Sequence[int]) -> tuple | None:
        """Ambient functional inducing an intrinsic one; None unless the face is full-dimensional."""
        basis = self.recession.generator_sublattice.basis_vectors
        d = self.recession.generator_sublattice.ambient_rank
        if len(basis) != d:
            return None
        cols = [tuple(b[i] for b in basis) for i in range(d)]  # transpose
        sol = solve_rational(cols, normal)
        return tuple(int(x) if x.denominator == 1 else x for x in sol)


def newton_polyhedron(support: Iterable[Sequence[int]], rec: Face) -> NewtonPolyhedron:
    support = sorted({tuple(v) for v in support})
    if not support:
        raise SupportOutsideCone("empty support")
    for v in support:
        if not rec.contains(v):
            raise SupportOutsideCone(f"{v} does not lie in {rec.label()}")
    return NewtonPolyhedron(tuple(support), rec)


def _compact_face(p: NewtonPolyhedron, gens, with_normal: bool) -> CompactFace:
    hull = p.hull
    verts = tuple(sorted(p._to_ambient[v] for v in hull.face_points(gens)))
    dim = hull.face_dim(gens)
    normal = ambient = offset = None
    if with_normal:
        facet = next(f for f in hull.facets if f.gens == gens)
        normal, offset = facet.normal, facet.offset
        ambient = p.lift_normal(normal)
    return CompactFace(verts, dim, normal, ambient, offset)


def compact_faces(p: NewtonPolyhedron, target_dim: int) -> CompactFaceSet:
    """Compact faces of a given dimension, each facet with its primitive inner normal."""
    hull = p.hull
    compact = [s for s in hull.faces() if hull.is_compact(s)]
    is_facet = target_dim == p.dim - 1
    chosen = [_compact_face(p, s, is_facet) for s in compact if hull.face_dim(s) == target_dim]
    chosen.sort(key=lambda f: f.vertices)
    if chosen:
        return CompactFaceSet(tuple(chosen), target_dim)
    # degenerate: report the maximal compact faces of lower dimension
    lower = [s for s in compact if hull.face_dim(s) < target_dim]
    maximal = [s for s in lower if not any(s < t for t in lower)]
    faces = sorted((_compact_face(p, s, False) for s in maximal), key=lambda f: f.vertices)
    return CompactFaceSet((), target_dim, True, tuple(faces))


def supporting_face(p: NewtonPolyhedron, u: Sequence, intrinsic: bool = False) -> tuple[list[LatticePoint], int]:
    """Vertices where ``u`` attains its minimum over ``p``, and that minimum.

    ``u`` pairs with ambient lattice points unless ``intrinsic`` is set, in
    which case it is given in the dual of the face's generator lattice.
    """
    if intrinsic:
        rays = p._rays
        verts = [(v, p._to_ambient[v]) for v in p.hull.vertices()]
    else:
        rays = p.recession.rays
        verts = [(p._to_ambient[v], p._to_ambient[v]) for v in p.hull.vertices()]
    for r in rays:
        if dot(u, r) < 0:
            raise UnboundedBelow(f"{tuple(u)} is negative on the recession ray {r}")
    values = [(dot(u, c), amb) for c, amb in verts]
    m = min(v for v, _ in values)
    m = int(m) if Fraction(m).denominator == 1 else m
    return sorted(amb for v, amb in values if v == m), m
