"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` (or ``python3 tests/test_acceptance.py``)
to see the summary lines.
"""

import contextlib
import io
import itertools
import json
import pathlib
import random
import sys
from math import comb, gcd

import pytest
import sympy

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from golden_cases import CASES  # noqa: E402
from toric_brasselet import _hull  # noqa: E402
from toric_brasselet.cli import main  # noqa: E402
from toric_brasselet.invariants import (  # noqa: E402
    brasselet_ci,
    brasselet_hypersurface,
    euler_obstruction_of_function,
    euler_obstruction_origin,
    family_constancy_report,
    gsv_index,
    milnor_number,
    morse_number,
)
from toric_brasselet.lattice import det, sublattice_basis  # noqa: E402
from toric_brasselet.newton import (  # noqa: E402
    CompleteIntersectionData,
    LatticePolynomial,
    ToricVarietyData,
    face_invariant_data,
    meets,
    newton_preserving_check,
    restricted_polyhedron,
)
from toric_brasselet.polyhedral import Cone, compact_faces, dual_cone, newton_polyhedron  # noqa: E402
from toric_brasselet.toric_surface import (  # noqa: E402
    hj_value,
    lattice_polynomial,
    monomial_to_lattice,
    quasimatrix_equations,
    semigroup_generators,
    surface_variety,
)
from toric_brasselet.volume import LatticePolytope, mixed_volume, normalized_volume  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"
QUADRIC = semigroup_generators(2, 1)


def report(n, failures, summary):
    status = "PASS" if not failures else "FAIL"
    detail = summary if not failures else "; ".join(failures[:5])
    print(f"[criterion {n}] {status}: {detail}", flush=True)
    assert not failures, failures


def expect(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {got!r}, expected {want!r}")


def cusp():
    X = QUADRIC.variety()
    f = lattice_polynomial({(0, 2, 0): 1, (3, 0, 0): -1}, QUADRIC)
    g = lattice_polynomial({(1, 0, 0): 1, (0, 0, 2): -1}, QUADRIC)
    return X, f, g, CompleteIntersectionData((g, f))


def pure_powers(X, n, d):
    e1 = tuple(d * (i == 0) for i in range(n + 1))
    en = tuple(d * (i == n) for i in range(n + 1))
    return LatticePolynomial.from_ambient({e1: 1, en: 1}, X)


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_criterion_1_cusp_regression():
    failures = []
    X, f, g, ci = cusp()
    mode = "paper-example"
    r_x = brasselet_hypersurface(X, f, mode=mode)
    r_xg = brasselet_ci(X, ci, mode=mode)
    b_x, b_xg = r_x.total, r_xg.total
    expect(failures, "B_X", b_x, -3)
    expect(failures, "B_Xg", b_xg, 12)
    expect(failures, "n", morse_number(r_x, r_xg, X.d), 15)
    expect(failures, "GSV", gsv_index(X, ci, mode=mode), -15)
    data = face_invariant_data(X, ci, X.full_face, mode)
    expect(failures, "u", [fd.u for fd in data.facets], [(2, 1), (4, -1)])
    expect(failures, "d", [fd.d for fd in data.facets], [6, 6])
    expect(failures, "K", [fd.K for fd in data.facets], [1, 1])
    for value in (b_x, b_xg):
        if type(value) is not int:
            failures.append(f"non-integer result {value!r}")
    report(1, failures, "B_X=-3, B_Xg=12, n=15, GSV=-15, u=(2,1),(4,-1), d=6,6, K=1,1")


def test_criterion_2_rational_normal_cone():
    failures = []
    for n in (2, 3, 4, 5):
        X = surface_variety(n, 1)
        eu0 = euler_obstruction_origin(X).value
        for d in (1, 2, 3):
            b = brasselet_hypersurface(X, pure_powers(X, n, d))
            expect(failures, f"B(n={n},d={d})", b.total, 2 * d - n * d * d)
            expect(failures, f"Eu_f(n={n},d={d})", euler_obstruction_of_function(eu0, b), 3 - (n + 1) - 2 * d + n * d * d)
    report(2, failures, "B = 2d - nd^2 and Eu_f = 3-(n+1)-2d+nd^2 for n in 2..5, d in 1..3")


def test_criterion_3_euler_obstruction():
    failures = []
    for n in range(2, 7):
        X = surface_variety(n, 1)
        values = {euler_obstruction_origin(X, rng_seed=seed).value for seed in (0, 1, 2, 12345)}
        expect(failures, f"Eu(0) n={n}", values, {3 - (n + 1)})
    report(3, failures, "Eu(0) = 3-(n+1) for n = 2..6, four seeds each")


def test_criterion_4_kouchnirenko():
    failures = []
    C2 = ToricVarietyData.affine_space(2)

    def mu(terms):
        return milnor_number(LatticePolynomial.from_ambient(terms, C2))

    expect(failures, "x^2+y^2", mu({(2, 0): 1, (0, 2): 1}), 1)
    expect(failures, "x^3+y^2", mu({(3, 0): 1, (0, 2): 1}), 2)
    expect(failures, "x", mu({(1, 0): 1}), 0)
    report(4, failures, "mu(A1)=1, mu(A2)=2, mu(x)=0")


def test_criterion_5_family_constancy():
    failures = []
    X, f, g, ci = cusp()
    h = lattice_polynomial({(2, 0, 2): -1}, QUADRIC)
    l = lattice_polynomial({(0, 0, 3): 1}, QUADRIC)
    for name, base, d in (("h", f, h), ("l", g, l)):
        check = newton_preserving_check(base, d, X)
        if not check.holds:
            failures.append(f"newton_preserving_check failed for {name}: {check}")
    fam = family_constancy_report(X, ci, [h], [[l]], mode="paper-example")
    expect(failures, "samples", len(fam.samples), 16)
    expect(failures, "values", fam.values, {"B_X": -3, "Eu_f": 3, "B_Xg": 12, "n": 15, "GSV": -15})
    for sample, values in zip(fam.samples, fam.per_sample):
        expect(failures, f"sample {sample}", values, fam.values)
    report(5, failures, "B=-3, Eu_f=3, B^g=12, n=15, GSV=-15 at all 16 samples")


def _random_polytope(rng):
    pts = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(1, 5))]
    return LatticePolytope(tuple(pts), Z2)


Z2 = sublattice_basis([(1, 0), (0, 1)])


def _msum(a, b):
    return LatticePolytope(tuple((x[0] + y[0], x[1] + y[1]) for x in a.vertices for y in b.vertices), Z2)


def _mixed_volume_properties(failures):
    rng = random.Random(2024)
    for i in range(200):
        a, b, c = _random_polytope(rng), _random_polytope(rng), _random_polytope(rng)
        mv = mixed_volume([a, b], 2)
        if mv != mixed_volume([b, a], 2):
            failures.append(f"asymmetric pair {i}")
        if mixed_volume([a, a], 2) != normalized_volume(a, 2):
            failures.append(f"diagonal pair {i}")
        if mixed_volume([_msum(a, c), b], 2) != mv + mixed_volume([c, b], 2):
            failures.append(f"not additive pair {i}")
        doubled = LatticePolytope(tuple((2 * x, 2 * y) for x, y in a.vertices), Z2)
        if mixed_volume([doubled, b], 2) != 2 * mv:
            failures.append(f"not homogeneous pair {i}")


def _k1_identity(failures):
    instances = []
    for n in range(2, 6):
        X = surface_variety(n, 1)
        instances += [(X, pure_powers(X, n, d)) for d in (1, 2, 3)]
    X, f, g, _ = cusp()
    instances += [(X, f), (X, g)]
    count = 0
    for X, poly in instances:
        ci = CompleteIntersectionData((poly,))
        for face in X.faces:
            if face.dim == 0 or not meets(poly, face):
                continue
            data = face_invariant_data(X, ci, face, "strict")
            betas = compact_faces(restricted_polyhedron(poly, face), face.dim - 1).faces
            for beta, fd in zip(betas, data.facets):
                pts = [face.intrinsic(v) for v in beta.vertices] + [(0,) * face.dim]
                count += 1
                if fd.d * fd.K != _hull.normalized_volume(pts, face.dim):
                    failures.append(f"d*K != Vol on {X.name} face {face.id}")
    return count


def _same_cone(a, b):
    return all(b.contains(r) for r in a.rays) and all(a.contains(r) for r in b.rays)


def _dual_and_restriction(failures):
    rng = random.Random(7)
    varieties = [QUADRIC.variety(), semigroup_generators(5, 2).variety(), ToricVarietyData.affine_space(3)]
    for i in range(100):
        d = 2 + i % 2
        while True:
            rays = [tuple(rng.randint(-4, 4) for _ in range(d - 1)) + (rng.randint(1, 4),) for _ in range(rng.randint(d, d + 2))]
            cone = Cone.from_rays(rays)
            if cone.dim == d:
                break
        if not _same_cone(cone, dual_cone(dual_cone(cone))):
            failures.append(f"dual involution fails for {rays}")
        X = varieties[i % 3]
        gens = X.semigroup_generators
        support = set()
        for _ in range(rng.randint(1, 5)):
            coeffs = [rng.randint(0, 3) for _ in gens]
            support.add(tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(X.d)))
        support = sorted(support - {(0,) * X.d})
        if not support:
            continue
        full = newton_polyhedron(support, X.full_face)
        for face in X.faces:
            on_face = [v for v in support if face.contains(v)]
            if bool(on_face) != any(face.contains(v) for v in full.vertices):
                failures.append(f"meets test disagrees on support {support}")
            if face.dim and on_face:
                restricted = newton_polyhedron(on_face, face)
                if sorted(restricted.vertices) != sorted(v for v in full.vertices if face.contains(v)):
                    failures.append(f"restriction identity fails on support {support}, face {face.id}")


def _hj_exhaustive(failures):
    count = 0
    for p in range(2, 51):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            s = semigroup_generators(p, q)
            count += 1
            if s.generators[-1] != (q, p) or hj_value(s.hj_digits) * (p - q) != p:
                failures.append(f"HJ/mu recursion wrong for ({p},{q})")
            if any(det([a, b]) != 1 for a, b in zip(s.generators, s.generators[1:])):
                failures.append(f"consecutive generators not a basis for ({p},{q})")
    return count


def _quasiminors(failures):
    t1, t2 = sympy.symbols("t1 t2")
    count = 0
    for p in range(2, 21):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            s = semigroup_generators(p, q)
            eqs = quasimatrix_equations(s)
            if len(eqs) != comb(s.ambient_dim - 1, 2):
                failures.append(f"wrong quasiminor count for ({p},{q})")
            subs = [t1 ** mu[0] * t2 ** mu[1] for mu in s.generators]
            for e in eqs:
                count += 1
                lhs = sympy.Mul(*[x**a for x, a in zip(subs, e.left)])
                rhs = sympy.Mul(*[x**a for x, a in zip(subs, e.right)])
                if lhs != rhs or monomial_to_lattice(e.left, s) != monomial_to_lattice(e.right, s):
                    failures.append(f"quasiminor {e.i},{e.j} of ({p},{q}) does not vanish")
    return count


def test_criterion_6_property_suites():
    failures = []
    _mixed_volume_properties(failures)
    k1 = _k1_identity(failures)
    _dual_and_restriction(failures)
    hj = _hj_exhaustive(failures)
    qm = _quasiminors(failures)
    report(
        6,
        failures,
        f"200 mixed-volume pairs, {k1} d*K facets, 100 cones/supports, {hj} HJ pairs, {qm} quasiminors",
    )


def test_criterion_7_mode_divergence():
    failures = []
    for name, mode, want in (("cusp_ci_paper", "paper-example", 12), ("cusp_ci_strict", "strict", 6)):
        code, out = run_cli(CASES[name] + ["--json"])
        expect(failures, f"{name} exit", code, 0)
        task = json.loads(out)["tasks"][0]
        expect(failures, f"{name} B", task["result"]["B"], want)
        expect(failures, f"{name} mode", task["mode"], mode)
        expect(failures, f"{name} golden", out == (GOLDEN / f"{name}.json").read_text(), True)
    report(7, failures, "B^g = 12 (paper-example) and 6 (strict), both goldens match")


def test_criterion_8_determinism():
    failures = []
    for name, argv in sorted(CASES.items()):
        first = run_cli(argv + ["--json", "--seed", "0"])[1]
        second = run_cli(argv + ["--json", "--seed", "0"])[1]
        if first != second:
            failures.append(f"{name} differs between runs")
        if run_cli(argv + ["--json"])[1] != (GOLDEN / f"{name}.json").read_text():
            failures.append(f"{name} differs from its golden")
    report(8, failures, f"{len(CASES)} golden instances byte-identical across runs")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
