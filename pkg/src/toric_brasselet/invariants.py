"""Brasselet numbers and the singularity invariants assembled from them."""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import _hull
from .errors import (
    AssumptionViolation,
    ConditionViolated,
    DimensionMismatch,
    EulerTableIncomplete,
    GenericityFailure,
    NotConstant,
    NotPrepolar,
    OriginInSupport,
)
from .newton import (
    CompleteIntersectionData,
    LatticePolynomial,
    ToricVarietyData,
    face_invariant_data,
    meets,
    newton_preserving_check,
    restricted_polyhedron,
)
from .polyhedral import Face, compact_faces
from .volume import VolumeConvention


@dataclass(frozen=True)
class EulerTable:
    """Euler obstruction values along the orbit strata, keyed by face id."""

    values: Mapping[int, int]
    origin_value: int | None = None

    @classmethod
    def ones(cls, X: ToricVarietyData, origin_value: int | None = None) -> "EulerTable":
        """Value 1 on every positive-dimensional orbit (isolated singularity, or weights = 1)."""
        return cls({f.id: 1 for f in X.faces if f.dim > 0}, origin_value)

    @classmethod
    def default(cls, X: ToricVarietyData) -> "EulerTable":
        if not X.isolated_singularity:
            raise EulerTableIncomplete(
                "X is not declared to have an isolated singularity; supply Euler obstruction values"
            )
        return cls.ones(X)

    def value(self, face: Face) -> int:
        if face.id not in self.values:
            raise EulerTableIncomplete(f"no Euler obstruction value for face {face.id} {face.label()}")
        return int(self.values[face.id])


@dataclass(frozen=True)
class FaceTerm:
    face: int
    label: str
    dim: int
    m: int
    sign: int
    volume_sum: int
    eu_value: int
    contribution: int


@dataclass(frozen=True)
class InvariantReport:
    kind: str
    per_face_terms: tuple[FaceTerm, ...]
    total: int
    mode: VolumeConvention
    assumptions: tuple[str, ...] = ()
    skipped_faces: tuple[int, ...] = ()

    def __post_init__(self):
        if self.total != sum(t.contribution for t in self.per_face_terms):
            raise AssertionError("report total differs from the sum of its face terms")


def _check_no_origin(poly: LatticePolynomial, name: str = "f"):
    if any(not any(v) for v in poly.support):
        raise OriginInSupport(f"{name} has a nonzero constant term")


def _positive_faces(X: ToricVarietyData):
    return [face for face in X.faces if face.dim > 0]


def brasselet_hypersurface(
    X: ToricVarietyData,
    f: LatticePolynomial,
    eu: EulerTable | None = None,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
    assumptions: Sequence[str] = (),
) -> InvariantReport:
    """Sum over faces met by supp(f) of (-1)^(dim-1) * sum_i Vol(conv(beta_i, 0)) * eu."""
    mode = VolumeConvention.parse(mode)
    _check_no_origin(f)
    eu = eu if eu is not None else EulerTable.default(X)
    terms = []
    for face in _positive_faces(X):
        if not meets(f, face):
            continue
        poly = restricted_polyhedron(f, face)
        vol = 0
        for beta in compact_faces(poly, face.dim - 1).faces:
            pts = [face.intrinsic(v) for v in beta.vertices] + [(0,) * face.dim]
            vol += _hull.normalized_volume(pts, face.dim)
        sign = (-1) ** (face.dim - 1)
        e = eu.value(face)
        terms.append(FaceTerm(face.id, face.label(), face.dim, 1, sign, vol, e, sign * vol * e))
    return InvariantReport(
        "brasselet", tuple(terms), sum(t.contribution for t in terms), mode, tuple(assumptions)
    )


def _ci_sum(X, ci, eu, mode, kind, forced_m=None, assumptions=()):
    mode = VolumeConvention.parse(mode)
    for j, c in enumerate(ci.components):
        _check_no_origin(c, "f" if j == ci.k - 1 else f"g{j + 1}")
    terms, skipped = [], []
    for face in _positive_faces(X):
        if not meets(ci.f, face):
            continue
        data = face_invariant_data(X, ci, face, mode)
        m = data.m
        if forced_m is not None:
            if face.dim < forced_m:
                skipped.append(face.id)
                continue
            if m != forced_m:
                raise NotPrepolar(f"g misses the face {face.label()} of dimension {face.dim}")
        elif data.dim_too_small:
            skipped.append(face.id)
            continue
        vol = sum(fd.d * fd.K for fd in data.facets)
        sign = (-1) ** (face.dim - m)
        e = eu.value(face)
        terms.append(FaceTerm(face.id, face.label(), face.dim, m, sign, vol, e, sign * vol * e))
    notes = list(assumptions)
    if ci.k > 1:
        notes.append(f"whitney_assertion={str(ci.whitney_assertion).lower()}")
    return InvariantReport(kind, tuple(terms), sum(t.contribution for t in terms), mode, tuple(notes), tuple(skipped))


def brasselet_ci(
    X: ToricVarietyData,
    ci: CompleteIntersectionData,
    eu_on_Xg: EulerTable | None = None,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
    assumptions: Sequence[str] = (),
) -> InvariantReport:
    """Brasselet number of f on X^g from the d and K coefficients; faces with dim < m are skipped."""
    eu = eu_on_Xg if eu_on_Xg is not None else EulerTable.default(X)
    return _ci_sum(X, ci, eu, mode, "brasselet-ci", None, assumptions)


def brasselet_ci_prepolar(
    X: ToricVarietyData,
    ci: CompleteIntersectionData,
    eu_on_X: EulerTable | None = None,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
    assumptions: Sequence[str] = (),
    check: bool = True,
) -> InvariantReport:
    """Prepolar variant: m = 2 on every contributing face and weights Eu of X itself.

    On surfaces the prepolarity of g is checked; in higher dimension it is
    recorded as an assumption.
    """
    if ci.k != 2:
        raise DimensionMismatch("the prepolar formula needs exactly one g and one f")
    notes = list(assumptions)
    if X.d == 2 and check:
        from .toric_surface import is_prepolar_lattice

        if not is_prepolar_lattice(X, ci.g[0], ci.f):
            raise NotPrepolar("g has no isolated singularity on the surface")
        notes.append("prepolarity=checked")
    else:
        notes.append("prepolarity=asserted")
    eu = eu_on_X if eu_on_X is not None else EulerTable.default(X)
    return _ci_sum(X, ci, eu, mode, "brasselet-ci-prepolar", 2, notes)


def euler_obstruction_of_function(eu_origin: int, b: InvariantReport) -> int:
    return eu_origin - b.total


# -- local Euler obstruction through a generic linear form --------------------

@dataclass(frozen=True)
class OriginResult:
    value: int
    draws: tuple  # ((coefficients, value), ...)
    symbolic_value: int
    seed: int


def generic_linear_form(X: ToricVarietyData, coefficients: Sequence[int]) -> LatticePolynomial:
    ambient = {tuple(int(i == j) for j in range(X.n_ambient)): Fraction(c) for i, c in enumerate(coefficients)}
    return LatticePolynomial.from_ambient(ambient, X)


def _random_coefficients(n: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.choice((-1, 1)) * rng.randint(1, 10**6) for _ in range(n))


def euler_obstruction_origin(
    X: ToricVarietyData,
    eu_positive_faces: EulerTable | None = None,
    rng_seed: int = 0,
    g: Sequence[LatticePolynomial] = (),
    mode: VolumeConvention | str = VolumeConvention.STRICT,
) -> OriginResult:
    """Eu(0) of X (or of X^g when ``g`` is given) as B_L(0) for a generic linear form L.

    Two independent random draws and one run with all coefficients 1 must agree.
    Without ``g`` the mode is irrelevant; with ``g`` only STRICT gives the
    geometric value (a smooth X^g yields 1).
    """
    eu = eu_positive_faces if eu_positive_faces is not None else EulerTable.default(X)
    rng = random.Random(f"eu-origin:{rng_seed}")

    def run(coeffs):
        L = generic_linear_form(X, coeffs)
        if g:
            return brasselet_ci(X, CompleteIntersectionData(tuple(g) + (L,)), eu, mode).total
        return brasselet_hypersurface(X, L, eu, mode).total

    draws = []
    for _ in range(2):
        coeffs = _random_coefficients(X.n_ambient, rng)
        draws.append((coeffs, run(coeffs)))
    symbolic = run((1,) * X.n_ambient)
    values = {v for _, v in draws} | {symbolic}
    if len(values) != 1:
        raise GenericityFailure(
            f"linear forms disagree: draws give {[v for _, v in draws]}, symbolic run gives {symbolic}"
        )
    return OriginResult(symbolic, tuple(draws), symbolic, rng_seed)


# -- derived counts -------------------------------------------------------------

def morse_number(b_on_X: InvariantReport, b_on_Xg: InvariantReport, d: int) -> int:
    """Stratified Morse points on the regular part: (-1)^(d-1) (B_X - B_{X^g})."""
    if b_on_X.mode is not b_on_Xg.mode:
        warnings.warn("Brasselet numbers computed in different modes", AssumptionViolation, stacklevel=2)
    n = (-1) ** (d - 1) * (b_on_X.total - b_on_Xg.total)
    if n < 0:
        warnings.warn(f"negative Morse count {n}; a hypothesis of the formula fails", AssumptionViolation, stacklevel=2)
    return n


def gsv_index(
    X: ToricVarietyData,
    ci: CompleteIntersectionData,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
    check: bool = True,
) -> int:
    ones = EulerTable.ones(X)
    on_x = brasselet_hypersurface(X, ci.f, ones, mode)
    on_xg = brasselet_ci_prepolar(X, ci, ones, mode, check=check)
    return on_x.total - on_xg.total


def _require_affine_space(X: ToricVarietyData):
    n = X.d
    basis = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    if X.sigma.rays != tuple(sorted(basis)) or tuple(sorted(X.semigroup_generators)) != tuple(sorted(basis)):
        raise DimensionMismatch("the Milnor number formula needs X = C^n")


def milnor_number(f: LatticePolynomial, X: ToricVarietyData | None = None) -> int:
    """Newton-polygon Milnor number on C^n from the Milnor fiber Euler characteristic."""
    n = len(f.support[0])
    X = X if X is not None else ToricVarietyData.affine_space(n)
    _require_affine_space(X)
    chi = brasselet_hypersurface(X, f, EulerTable.ones(X)).total
    mu = (-1) ** (n - 1) * (chi - 1)
    if mu < 0:
        warnings.warn(f"negative Milnor number {mu}; f is not isolated or degenerate", AssumptionViolation, stacklevel=2)
    return mu


@dataclass(frozen=True)
class BruceRobertsResult:
    value: int
    milnor: int
    eu_origin_Xg: int
    eu_f_Xg: int
    b_f_Xg: int


def bruce_roberts(
    f: LatticePolynomial,
    g: LatticePolynomial,
    X: ToricVarietyData | None = None,
    rng_seed: int = 0,
    mode: VolumeConvention | str = VolumeConvention.STRICT,
) -> BruceRobertsResult:
    """mu_BR = mu(f) + Eu_{X^g}(0) + (-1)^(n-1) (Eu_{f,X^g}(0) + 1) on C^n."""
    n = len(f.support[0])
    X = X if X is not None else ToricVarietyData.affine_space(n)
    _require_affine_space(X)
    mu = milnor_number(f, X)
    ones = EulerTable.ones(X)
    eu0 = euler_obstruction_origin(X, ones, rng_seed, g=(g,), mode=mode).value
    b = brasselet_ci(X, CompleteIntersectionData((g, f)), ones, mode).total
    eu_f = eu0 - b
    value = mu + eu0 + (-1) ** (n - 1) * (eu_f + 1)
    return BruceRobertsResult(value, mu, eu0, eu_f, b)


# -- families -------------------------------------------------------------------

DEFAULT_SAMPLES = tuple(itertools.product((0, 1, -1, 2), repeat=2))


@dataclass(frozen=True)
class FamilyReport:
    values: dict  # invariant name -> common value
    samples: tuple
    conditions: tuple[str, ...]
    mode: VolumeConvention
    per_sample: tuple = field(default=(), compare=False)


def deform(base: LatticePolynomial, additions: Sequence[LatticePolynomial], value) -> LatticePolynomial:
    out = base
    for h in additions:
        out = out + h.scaled(value)
    return out


def family_constancy_report(
    X: ToricVarietyData,
    ci: CompleteIntersectionData,
    f_deformations: Sequence[LatticePolynomial] = (),
    g_deformations: Sequence[Sequence[LatticePolynomial]] | None = None,
    samples: Sequence[tuple] = DEFAULT_SAMPLES,
    mode: VolumeConvention | str = VolumeConvention.PAPER_EXAMPLE,
    eu_on_X: EulerTable | None = None,
    rng_seed: int = 0,
) -> FamilyReport:
    """Evaluate the invariants along f_t = f + t*sum(h), g_s = g + s*sum(l) and require constancy.

    Each sample is a pair (s, t). Reported invariants: B on X, Eu_f on X,
    and for k = 2 also B on X^g, the Morse count and the GSV index.
    """
    mode = VolumeConvention.parse(mode)
    g_deformations = g_deformations if g_deformations is not None else [()] * (ci.k - 1)
    if len(g_deformations) != ci.k - 1:
        raise DimensionMismatch("one deformation list per g component is required")
    conditions = []
    for i, h in enumerate(f_deformations):
        rep = newton_preserving_check(ci.f, h, X, rng_seed)
        if not rep.holds:
            raise ConditionViolated(f"h{i + 1} does not preserve the Newton polygon of f")
        conditions.append(f"h{i + 1}: Newton polygon of f preserved")
    for j, ls in enumerate(g_deformations):
        for i, l in enumerate(ls):
            rep = newton_preserving_check(ci.g[j], l, X, rng_seed)
            if not rep.holds:
                raise ConditionViolated(f"l{i + 1} does not preserve the Newton polygon of g{j + 1}")
            conditions.append(f"l{i + 1}: Newton polygon of g{j + 1} preserved")
    eu = eu_on_X if eu_on_X is not None else EulerTable.default(X)
    eu_origin = euler_obstruction_origin(X, eu, rng_seed, mode=mode).value
    samples = tuple((Fraction(s), Fraction(t)) for s, t in samples)
    rows = []
    for s, t in samples:
        f_t = deform(ci.f, f_deformations, t)
        gs = tuple(deform(g, ls, s) for g, ls in zip(ci.g, g_deformations))
        row = {}
        b_x = brasselet_hypersurface(X, f_t, eu, mode)
        row["B_X"] = b_x.total
        row["Eu_f"] = euler_obstruction_of_function(eu_origin, b_x)
        if ci.k == 2:
            ci_st = CompleteIntersectionData(gs + (f_t,), ci.whitney_assertion)
            b_g = brasselet_ci(X, ci_st, eu, mode)
            row["B_Xg"] = b_g.total
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", AssumptionViolation)
                row["n"] = morse_number(b_x, b_g, X.d)
            row["GSV"] = gsv_index(X, ci_st, mode)
        rows.append(row)
    for key in rows[0] if rows else ():
        for (s0, row0), (s1, row1) in zip(zip(samples, rows), zip(samples[1:], rows[1:])):
            if row0[key] != row1[key]:
                raise NotConstant(
                    f"{key} differs: {row0[key]} at (s,t)={_fmt(s0)} and {row1[key]} at (s,t)={_fmt(s1)}"
                )
    values = dict(rows[0]) if rows else {}
    return FamilyReport(values, samples, tuple(conditions), mode, tuple(rows))


def _fmt(pair) -> str:
    return "(" + ", ".join(str(x) for x in pair) + ")"
