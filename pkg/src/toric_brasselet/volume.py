"""Normalized lattice volumes, mixed volumes, and the per-facet coefficients d and K."""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from . import _hull
from .errors import DimensionMismatch, NoAdmissibleComposition
from .lattice import LatticePoint, SublatticeBasis, express_in_basis, sub
from .polyhedral import NewtonPolyhedron, supporting_face


class VolumeConvention(enum.Enum):
    """How K treats compositions whose Minkowski sum collapses to a point.

    STRICT is standard mixed-volume theory: any point argument in positive
    mixed dimension contributes 0. PAPER_EXAMPLE lets such a collapsed
    composition contribute 1, the value used for the worked surface example
    (cusp on the quadric cone).
    """

    STRICT = "strict"
    PAPER_EXAMPLE = "paper-example"

    @classmethod
    def parse(cls, value) -> "VolumeConvention":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown volume convention {value!r}; use 'strict' or 'paper-example'")


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[LatticePoint, ...]
    reference_lattice: SublatticeBasis

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted({tuple(v) for v in self.vertices})))
        if not self.vertices:
            raise ValueError("empty polytope")

    def local_coordinates(self) -> list[tuple[int, ...]]:
        """Vertex coordinates relative to the first vertex, in the reference lattice basis."""
        v0 = self.vertices[0]
        return [tuple(express_in_basis(sub(v, v0), self.reference_lattice)) for v in self.vertices]

    @property
    def dim(self) -> int:
        return _hull.affine_dimension(self.local_coordinates())

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1


def normalized_volume(p: LatticePolytope, dim: int) -> int:
    """dim! times the Euclidean volume, measured in the reference lattice.

    When the polytope spans fewer than ``dim`` dimensions the result is 0;
    a point has 0-dimensional volume 1. A polytope of lower dimension than
    its reference lattice is measured in the lattice points of its own span.
    """
    return _hull.normalized_volume(p.local_coordinates(), dim)


def _shared_lattice(ps: Sequence[LatticePolytope]) -> SublatticeBasis:
    lattice = ps[0].reference_lattice
    for q in ps[1:]:
        if q.reference_lattice.basis_vectors != lattice.basis_vectors:
            raise DimensionMismatch("mixed volume arguments use different reference lattices")
    return lattice


def mixed_volume(ps: Sequence[LatticePolytope], m: int) -> int:
    """Normalized m-dimensional mixed volume by polarization.

    Normalized so that ``mixed_volume([P] * m, m) == normalized_volume(P, m)``.
    """
    if len(ps) != m:
        raise DimensionMismatch(f"{len(ps)} polytopes given for mixed dimension {m}")
    if m == 0:
        return 1
    lattice = _shared_lattice(ps)
    if lattice.rank < m:
        raise DimensionMismatch(f"reference lattice has rank {lattice.rank} < {m}")
    local = [q.local_coordinates() for q in ps]
    if _hull.affine_dimension(_hull.minkowski_sum(*local)) > m:
        raise DimensionMismatch(f"Minkowski sum of the arguments has dimension > {m}")
    total = 0
    cache: dict[tuple, int] = {}
    for size in range(1, m + 1):
        for subset in itertools.combinations(range(m), size):
            key = tuple(sorted(ps[i].vertices for i in subset))
            if key not in cache:
                cache[key] = _hull.normalized_volume(_hull.minkowski_sum(*(local[i] for i in subset)), m)
            total += (-1) ** (m - size) * cache[key]
    q, r = divmod(total, factorial(m))
    if r:
        raise AssertionError("polarization did not produce an integer")
    return q


def d_coefficient(u: Sequence, fk_on_face: NewtonPolyhedron, intrinsic: bool = False) -> int:
    """Minimum of the pairing with ``u`` over the restricted Newton polyhedron."""
    return supporting_face(fk_on_face, u, intrinsic=intrinsic)[1]


def compositions(total: int, parts: int):
    """Tuples (a_1..a_parts) summing to ``total`` with a_q >= 1 except the last part >= 0."""
    if parts == 0:
        return
    if parts == 1:
        if total >= 0:
            yield (total,)
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def k_coefficient(
    face_dim: int,
    m: int,
    gamma_faces: Sequence[LatticePolytope],
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
) -> int:
    """Sum over admissible compositions of the mixed volumes of the supporting faces.

    ``gamma_faces`` is ordered (g_1, ..., g_{m-1}, f): the last entry may
    appear zero times, every other one at least once.
    """
    mode = VolumeConvention.parse(mode)
    if len(gamma_faces) != m:
        raise DimensionMismatch(f"expected {m} supporting faces, got {len(gamma_faces)}")
    n = face_dim - 1
    if n == 0:
        return 1
    if n < m - 1:
        warnings.warn(
            f"no composition of {n} into {m} parts with the first {m - 1} positive",
            NoAdmissibleComposition,
            stacklevel=2,
        )
        return 0
    total = 0
    for alpha in compositions(n, m):
        chosen = [g for g, a in zip(gamma_faces, alpha) for _ in range(a)]
        if mode is VolumeConvention.PAPER_EXAMPLE and all(g.is_point for g in chosen):
            total += 1
            continue
        total += mixed_volume(chosen, n)
    return total
