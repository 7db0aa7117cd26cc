"""Exact integer linear algebra on lattice vectors.

Lattice points are plain tuples of Python ints. Nothing here touches floating
point; rational intermediate values use :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import EmptyGenerators, NotInLattice, NotInSpan, ZeroVector

LatticePoint = tuple  # tuple[int, ...]


def as_point(v: Iterable[int]) -> LatticePoint:
    return tuple(int(x) for x in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive_vector(v: Sequence[int]) -> tuple[LatticePoint, int]:
    """Split ``v`` as ``g * w`` with ``w`` primitive and ``g > 0``."""
    g = content(v)
    if g == 0:
        raise ZeroVector("primitive_vector of the zero vector")
    return tuple(int(x) // g for x in v), g


def clear_denominators(v: Sequence) -> LatticePoint:
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    w = tuple(int(Fraction(x) * den) for x in v)
    return primitive_vector(w)[0]


# -- rational elimination ---------------------------------------------------

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[LatticePoint]:
    """Integer basis (primitive vectors) of the rational kernel of ``rows``."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(clear_denominators(v))
    return basis


def solve_rational(basis: Sequence[Sequence], p: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_j basis_j = p, or None when p is outside the span."""
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in p) else None
    # columns are basis vectors; augment with p
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(p[i])] for i in range(len(p))]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return coeffs


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def maximal_minors(rows: Sequence[Sequence[int]]) -> list[int]:
    """All k x k minors of a k x n integer matrix, columns in lexicographic order."""
    k = len(rows)
    n = len(rows[0]) if rows else 0
    return [det([[r[c] for c in cols] for r in rows]) for cols in itertools.combinations(range(n), k)]


# -- sublattices ------------------------------------------------------------

def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[LatticePoint]:
    """Row-style HNF of the integer row span.

    Nonzero rows only; pivots strictly move right, are positive, and entries
    above each pivot are reduced into ``[0, pivot)``.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        # Euclid on column c among rows r..end
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[p] = m[p], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if m[r][c] == 0:
            continue
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
    return [tuple(row) for row in m[:r]]


@dataclass(frozen=True)
class SublatticeBasis:
    ambient_rank: int
    basis_vectors: tuple[LatticePoint, ...]
    index_in_saturation: int = 1

    @property
    def rank(self) -> int:
        return len(self.basis_vectors)

    def contains(self, p: Sequence[int]) -> bool:
        try:
            express_in_basis(p, self)
        except (NotInSpan, NotInLattice):
            return False
        return True

    def to_ambient(self, coords: Sequence) -> tuple:
        out = [0] * self.ambient_rank
        for c, b in zip(coords, self.basis_vectors):
            for i, x in enumerate(b):
                out[i] += c * x
        return tuple(out)


def zero_sublattice(ambient_rank: int) -> SublatticeBasis:
    return SublatticeBasis(ambient_rank, (), 1)


def sublattice_basis(generators: Sequence[Sequence[int]]) -> SublatticeBasis:
    """Canonical (HNF) basis of the integer span of ``generators``."""
    if not generators:
        raise EmptyGenerators("sublattice_basis needs at least one generator")
    d = len(generators[0])
    basis = hermite_normal_form(generators)
    if not basis:
        return zero_sublattice(d)
    index = content(maximal_minors(basis))
    return SublatticeBasis(d, tuple(basis), index)


def express_in_basis(p: Sequence[int], b: SublatticeBasis) -> list[int]:
    coeffs = solve_rational(b.basis_vectors, p)
    if coeffs is None:
        raise NotInSpan(f"{tuple(p)} is not in the rational span of the basis")
    if any(c.denominator != 1 for c in coeffs):
        raise NotInLattice(f"{tuple(p)} has fractional coordinates {coeffs}")
    return [int(c) for c in coeffs]


def saturation_projection(directions: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int, int]:
    """Coordinate chart for the saturated lattice of a rational subspace.

    For the span V of ``directions`` (rank k) returns ``(cols, scale, k)``:
    projecting onto the coordinates ``cols`` maps V injectively, and the image
    of V intersected with the ambient lattice has index ``scale`` in Z^k.
    Normalized volumes measured in V are the projected volumes divided by
    ``scale``.
    """
    basis = hermite_normal_form(directions)
    k = len(basis)
    if k == 0:
        return (), 1, 0
    n = len(basis[0])
    minors = maximal_minors(basis)
    g = content(minors)
    for cols, mnr in zip(itertools.combinations(range(n), k), minors):
        if mnr != 0:
            return cols, abs(mnr) // g, k
    raise AssertionError("unreachable: HNF rows are independent")
