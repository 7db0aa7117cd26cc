"""Affine toric surfaces X(p, q): continued fractions, generators, equations, orbits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import Mapping, Sequence

import sympy

from .errors import CommonComponent, ConditionViolated, DimensionMismatch, NotCoprime, RangeError
from .lattice import LatticePoint, add, scale
from .newton import (
    CompleteIntersectionData,
    LatticePolynomial,
    ToricVarietyData,
    meets,
    nondegeneracy_heuristic,
)

AmbientPolynomial = Mapping[tuple, Fraction]


def _check_pq(p: int, q: int) -> None:
    if (p, q) == (1, 0):
        return
    if not 0 < q < p:
        raise RangeError(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")


def hj_expansion(p: int, q: int) -> list[int]:
    """Digits a_2..a_{n-1} >= 2 with p/(p-q) = a_2 - 1/(a_3 - 1/(...)).

    The smooth case (p, q) = (1, 0) has no digits.
    """
    _check_pq(p, q)
    if (p, q) == (1, 0):
        return []
    x = Fraction(p, p - q)
    digits = []
    while True:
        a = ceil(x)
        digits.append(a)
        if a == x:
            return digits
        x = 1 / (a - x)


def hj_value(digits: Sequence[int]) -> Fraction:
    """Evaluate [[a_2, ..., a_{n-1}]] exactly."""
    x = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        x = a - 1 / x
    return x


@dataclass(frozen=True)
class SurfaceData:
    p: int
    q: int
    hj_digits: tuple[int, ...]
    generators: tuple[LatticePoint, ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.generators)

    @property
    def smooth(self) -> bool:
        return (self.p, self.q) == (1, 0)

    @property
    def determinantal(self) -> bool:
        # a_i = 2 for 3 <= i <= n-2; digits start at index 2
        return all(a == 2 for a in self.hj_digits[1:-1])

    def digit(self, i: int) -> int:
        return self.hj_digits[i - 2]

    @property
    def sigma_rays(self) -> tuple[LatticePoint, ...]:
        return ((0, 1), (self.p, -self.q))

    def variety(self) -> ToricVarietyData:
        return ToricVarietyData.from_cone(
            self.sigma_rays, self.generators, isolated_singularity=True, name=f"X({self.p},{self.q})"
        )


def semigroup_generators(p: int, q: int) -> SurfaceData:
    """Minimal generators mu_1 = (1,0), mu_2 = (1,1), ..., mu_n = (q,p) of the dual cone semigroup."""
    digits = hj_expansion(p, q)
    if not digits:
        return SurfaceData(1, 0, (), ((1, 0), (0, 1)))
    mus = [(1, 0), (1, 1)]
    for a in digits:
        mus.append(tuple(a * x - y for x, y in zip(mus[-1], mus[-2])))
    if mus[-1] != (q, p):
        raise AssertionError(f"generator recursion ended at {mus[-1]}, expected {(q, p)}")
    return SurfaceData(p, q, tuple(digits), tuple(mus))


def surface_variety(p: int, q: int) -> ToricVarietyData:
    return semigroup_generators(p, q).variety()


def monomial_to_lattice(exponents: Sequence[int], s: SurfaceData) -> LatticePoint:
    if len(exponents) != s.ambient_dim:
        raise DimensionMismatch(f"expected {s.ambient_dim} exponents, got {len(exponents)}")
    point = (0, 0)
    for e, mu in zip(exponents, s.generators):
        point = add(point, scale(e, mu))
    return point


@dataclass(frozen=True)
class Quasiminor:
    i: int
    j: int
    left: tuple[int, ...]  # exponent vector of z_i z_{j+1}
    right: tuple[int, ...]  # exponent vector of z_{i+1} (connectors) z_j

    def as_polynomial(self) -> dict:
        return {self.left: Fraction(1), self.right: Fraction(-1)}


def quasimatrix_equations(s: SurfaceData) -> list[Quasiminor]:
    """Binomials z_i z_{j+1} - z_{i+1} (prod_{l=i+1}^{j} z_l^(a_l - 2)) z_j for 1 <= i < j <= n-1."""
    n = s.ambient_dim
    out = []
    for i in range(1, n):
        for j in range(i + 1, n):
            left = [0] * n
            left[i - 1] += 1
            left[j] += 1
            right = [0] * n
            right[i] += 1
            right[j - 1] += 1
            for l in range(i + 1, j + 1):
                right[l - 1] += s.digit(l) - 2
            out.append(Quasiminor(i, j, tuple(left), tuple(right)))
    return out


def lattice_polynomial(g: AmbientPolynomial, s: SurfaceData) -> LatticePolynomial:
    return LatticePolynomial.from_ambient(g, s.variety())


def _extreme_rays_met(X: ToricVarietyData, g: LatticePolynomial) -> bool:
    return all(meets(g, face) for face in X.faces if face.dim == 1)


def has_isolated_singularity(
    g: AmbientPolynomial, s: SurfaceData, check_nondegeneracy: bool = True, trials: int = 8, rng_seed: int = 0
) -> bool:
    """g has a stratified isolated singularity iff it contains pure powers of z_1 and z_n."""
    X = s.variety()
    lg = lattice_polynomial(g, s)
    if check_nondegeneracy:
        verdict = nondegeneracy_heuristic(X, CompleteIntersectionData((lg,)), trials, rng_seed)
        if verdict.degenerate:
            raise ConditionViolated(f"g is degenerate (witness {verdict.point} on face {verdict.face})")
    return _extreme_rays_met(X, lg)


def has_pure_powers(g: AmbientPolynomial, n: int) -> bool:
    """Ambient form of the same test: exponent vectors supported on z_1 alone and on z_n alone."""
    def pure(k):
        return any(e[k] > 0 and all(x == 0 for i, x in enumerate(e) if i != k) for e in g)

    return pure(0) and pure(n - 1)


def _torus_expr(poly: LatticePolynomial, X: ToricVarietyData, xs):
    face = X.full_face
    coords = {face.intrinsic(v): c for v, c in poly.terms.items()}
    shift = [min(e[i] for e in coords) for i in range(len(xs))]
    expr = 0
    for e, c in coords.items():
        mono = sympy.Integer(1)
        for x, a, sh in zip(xs, e, shift):
            mono *= x ** (a - sh)
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return sympy.expand(expr)


def shared_torus_factor(X: ToricVarietyData, g: LatticePolynomial, f: LatticePolynomial):
    """Common non-monomial factor of g and f on the dense torus, or None."""
    xs = sympy.symbols(f"x0:{X.d}")
    common = sympy.gcd(_torus_expr(g, X, xs), _torus_expr(f, X, xs))
    factors = sympy.factor_list(common)[1]
    shared = [fac for fac, _ in factors if len(sympy.Poly(fac, *xs).terms()) > 1]
    return sympy.Mul(*shared) if shared else None


def is_prepolar_lattice(X: ToricVarietyData, g: LatticePolynomial, f: LatticePolynomial) -> bool:
    if X.d != 2:
        raise DimensionMismatch("the prepolarity criterion is for surfaces")
    if not _extreme_rays_met(X, g):
        return False
    factor = shared_torus_factor(X, g, f)
    if factor is not None:
        raise CommonComponent(f"g and f share the torus factor {factor}")
    return True


def is_prepolar(g: AmbientPolynomial, f: AmbientPolynomial, s: SurfaceData) -> bool:
    """g is prepolar for (X, f) iff g has an isolated singularity and no component in common with f."""
    X = s.variety()
    return is_prepolar_lattice(X, lattice_polynomial(g, s), lattice_polynomial(f, s))


@dataclass(frozen=True)
class Orbit:
    face: int
    dim: int
    rays: tuple
    exponents: tuple  # per ambient coordinate: intrinsic exponent vector, or None where z_i = 0

    def describe(self) -> str:
        ts = [f"t{k + 1}" for k in range(self.dim)]
        coords = []
        for e in self.exponents:
            if e is None:
                coords.append("0")
                continue
            parts = []
            for t, a in zip(ts, e):
                if a == 1:
                    parts.append(t)
                elif a != 0:
                    parts.append(f"{t}^{a}")
            coords.append("*".join(parts) or "1")
        return "(" + ", ".join(coords) + ")"


def orbit_decomposition(s: SurfaceData) -> list[Orbit]:
    """The torus orbits T_Delta, parametrized by z_i = t^(mu_i) for mu_i on Delta and 0 otherwise."""
    X = s.variety()
    out = []
    for face in X.faces:
        exps = tuple(face.intrinsic(mu) if face.contains(mu) else None for mu in s.generators)
        out.append(Orbit(face.id, face.dim, face.rays, exps))
    return out
