"""Exact convex hulls of small full-dimensional point/ray configurations.

A polyhedron ``conv(points) + cone(rays)`` in Q^k is homogenized to the cone
over ``(p, 1)`` and ``(r, 0)`` in Q^(k+1). Facets of that cone are found by
enumerating k-subsets of generators: brute force, but exact, and the
configurations handled here have at most a few dozen generators in k <= 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .lattice import det, dot, primitive_vector, rank, saturation_projection, sub


def _normal(vectors: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Generalized cross product of k vectors in Z^(k+1); None if dependent."""
    n = len(vectors[0])
    comps = []
    for i in range(n):
        minor = [[v[j] for j in range(n) if j != i] for v in vectors]
        comps.append((-1) ** i * det(minor))
    if not any(comps):
        return None
    return primitive_vector(comps)[0]


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]  # inner normal, primitive in the dual lattice
    offset: int  # normal . x >= offset on the polyhedron
    gens: frozenset  # indices of tight generators


@dataclass
class Hull:
    points: list[tuple[int, ...]]
    rays: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.points = sorted(set(map(tuple, self.points)))
        self.rays = sorted(set(primitive_vector(r)[0] for r in self.rays if any(r)))
        if not self.points:
            raise ValueError("Hull needs at least one point")
        self.dim = len(self.points[0])
        self._gens = [p + (1,) for p in self.points] + [r + (0,) for r in self.rays]
        self.n_points = len(self.points)
        full = rank([sub(p, self.points[0]) for p in self.points[1:]] + list(self.rays))
        if full != self.dim:
            raise ValueError(f"configuration spans {full} < {self.dim} dimensions")
        self.facets = self._facets()
        self._faces = None

    def _facets(self) -> list[Facet]:
        k = self.dim
        if k == 0:
            return []
        gens = self._gens
        seen = {}
        for combo in itertools.combinations(range(len(gens)), k):
            n = _normal([gens[i] for i in combo])
            if n is None:
                continue
            vals = [dot(n, g) for g in gens]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                n = tuple(-x for x in n)
                vals = [-v for v in vals]
            else:
                continue
            if n in seen:
                continue
            tight = frozenset(i for i, v in enumerate(vals) if v == 0)
            # the face at infinity (t >= 0) is not a facet of the polyhedron
            if not any(i < self.n_points for i in tight):
                continue
            seen[n] = Facet(n[:-1], -n[-1], tight)
        return sorted(seen.values(), key=lambda f: (sorted(f.gens), f.normal))

    def faces(self) -> list[frozenset]:
        """Generator-index sets of all nonempty faces (the polyhedron included)."""
        if self._faces is None:
            everything = frozenset(range(len(self._gens)))
            found = {everything}
            frontier = [f.gens for f in self.facets]
            while frontier:
                nxt = []
                for s in frontier:
                    if s in found or not any(i < self.n_points for i in s):
                        continue
                    found.add(s)
                    for f in self.facets:
                        t = s & f.gens
                        if t != s and t not in found:
                            nxt.append(t)
                frontier = nxt
            self._faces = sorted(found, key=lambda s: (len(s), sorted(s)))
        return self._faces

    def face_points(self, gens: frozenset) -> list[tuple[int, ...]]:
        return [self.points[i] for i in sorted(gens) if i < self.n_points]

    def face_rays(self, gens: frozenset) -> list[tuple[int, ...]]:
        return [self.rays[i - self.n_points] for i in sorted(gens) if i >= self.n_points]

    def face_dim(self, gens: frozenset) -> int:
        return rank([self._gens[i] for i in gens]) - 1

    def is_compact(self, gens: frozenset) -> bool:
        return all(i < self.n_points for i in gens)

    def vertices(self) -> list[tuple[int, ...]]:
        if self.dim == 0:
            return list(self.points)
        return sorted(self.face_points(s)[0] for s in self.faces() if len(s) == 1 and min(s) < self.n_points)

    def facets_of(self, gens: frozenset) -> list[Facet]:
        return [f for f in self.facets if gens <= f.gens]

    def contains(self, x: Sequence) -> bool:
        return all(dot(f.normal, x) >= f.offset for f in self.facets)


def normalized_volume_full(points: Sequence[Sequence[int]]) -> int:
    """Normalized volume (k! times Euclidean) of a full-dimensional lattice polytope in Z^k."""
    pts = sorted(set(map(tuple, points)))
    k = len(pts[0])
    if k == 0:
        return 1
    if k == 1:
        return max(p[0] for p in pts) - min(p[0] for p in pts)
    if k == 2:
        ring = _monotone_chain(pts)
        return abs(sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(ring, ring[1:] + ring[:1])))
    hull = Hull(pts)
    apex = hull.vertices()[0]
    total = 0
    for facet in hull.facets:
        height = dot(facet.normal, apex) - facet.offset
        if height:
            total += height * normalized_volume(hull.face_points(facet.gens))
    return total


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def normalized_volume(points: Sequence[Sequence[int]], dim: int | None = None) -> int:
    """Normalized volume of conv(points) in the saturated lattice of its affine span.

    With ``dim`` given, returns 0 when the affine span is smaller than ``dim``.
    """
    pts = sorted(set(map(tuple, points)))
    p0 = pts[0]
    diffs = [sub(p, p0) for p in pts[1:]]
    cols, scale, k = saturation_projection(diffs) if diffs else ((), 1, 0)
    if dim is not None and k < dim:
        return 0
    if dim is not None and k > dim:
        raise ValueError(f"polytope has dimension {k} > {dim}")
    if k == 0:
        return 1
    projected = [tuple(p[c] for c in cols) for p in pts]
    vol = normalized_volume_full(projected)
    q, r = divmod(vol, scale)
    if r:
        raise AssertionError("non-integral normalized volume; vertices not in lattice")
    return q


def convex_hull_vertices(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Vertices of conv(points) for points in any ambient Z^r."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 1:
        return pts
    p0 = pts[0]
    diffs = [sub(p, p0) for p in pts[1:]]
    cols, _, k = saturation_projection(diffs)
    if k == 0:
        return [p0]
    proj = {tuple(p[c] for c in cols): p for p in pts}
    if k == 2:
        return sorted(proj[v] for v in _monotone_chain(list(proj)))
    return sorted(proj[v] for v in Hull(list(proj)).vertices())


def _monotone_chain(pts):
    pts = sorted(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def minkowski_sum(*vertex_sets: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Vertices of the Minkowski sum of polytopes given by vertex lists."""
    acc = [tuple(v) for v in vertex_sets[0]]
    for vs in vertex_sets[1:]:
        acc = convex_hull_vertices([tuple(a + b for a, b in zip(p, q)) for p in acc for q in vs])
    return convex_hull_vertices(acc)
