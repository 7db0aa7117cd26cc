from fractions import Fraction
from math import comb, gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from toric_brasselet.errors import CommonComponent, ConditionViolated, NotCoprime, RangeError
from toric_brasselet.lattice import det
from toric_brasselet.toric_surface import (
    has_isolated_singularity,
    has_pure_powers,
    hj_expansion,
    hj_value,
    is_prepolar,
    lattice_polynomial,
    monomial_to_lattice,
    orbit_decomposition,
    quasimatrix_equations,
    semigroup_generators,
)


def coprime_pairs(limit):
    return [(p, q) for p in range(2, limit + 1) for q in range(1, p) if gcd(p, q) == 1]


@pytest.mark.parametrize("pq,digits", [((2, 1), [2]), ((3, 1), [2, 2]), ((5, 2), [2, 3]), ((3, 2), [3])])
def test_hj_examples(pq, digits):
    assert hj_expansion(*pq) == digits


def test_hj_errors():
    with pytest.raises(NotCoprime):
        hj_expansion(4, 2)
    with pytest.raises(RangeError):
        hj_expansion(3, 3)
    with pytest.raises(RangeError):
        hj_expansion(3, 0)
    assert hj_expansion(1, 0) == []


def test_generators_examples():
    assert semigroup_generators(2, 1).generators == ((1, 0), (1, 1), (1, 2))
    assert semigroup_generators(5, 2).generators == ((1, 0), (1, 1), (1, 2), (2, 5))
    for n in range(2, 7):
        assert semigroup_generators(n, 1).generators == tuple((1, i) for i in range(n + 1))
    smooth = semigroup_generators(1, 0)
    assert smooth.generators == ((1, 0), (0, 1)) and quasimatrix_equations(smooth) == []


def test_hj_and_recursion_exhaustive():
    for p, q in coprime_pairs(50):
        s = semigroup_generators(p, q)
        assert all(a >= 2 for a in s.hj_digits)
        assert hj_value(s.hj_digits) == Fraction(p, p - q)
        assert s.generators[-1] == (q, p)
        # consecutive generators form lattice bases: the dual cone is subdivided into smooth cones
        for a, b in zip(s.generators, s.generators[1:]):
            assert det([a, b]) == 1


def test_generators_are_minimal_hilbert_basis():
    # oracle: brute-force irreducible lattice points of the dual cone
    for p, q in coprime_pairs(9):
        s = semigroup_generators(p, q)
        X = s.variety()
        box = [(x, y) for x in range(0, q + 1) for y in range(0, p + 1) if (x, y) != (0, 0)]
        inside = [v for v in box if X.sigma_dual.contains(v)]
        pts = set(inside)
        irreducible = [
            v for v in inside
            if not any((v[0] - w[0], v[1] - w[1]) in pts for w in inside if w != v)
        ]
        assert sorted(irreducible) == sorted(s.generators)


def test_quasiminors_examples():
    eqs = quasimatrix_equations(semigroup_generators(2, 1))
    assert [e.as_polynomial() for e in eqs] == [{(1, 0, 1): 1, (0, 2, 0): -1}]
    eqs = quasimatrix_equations(semigroup_generators(4, 1))
    # 2x2 minors of [z1 z2 z3 z4; z2 z3 z4 z5]
    z = sympy.symbols("z1:6")
    m = sympy.Matrix([z[:4], z[1:]])
    minors = {sympy.expand(m[:, [i, j]].det()) for i in range(4) for j in range(i + 1, 4)}
    mine = {sympy.expand(sympy.Mul(*[v**e for v, e in zip(z, q.left)]) - sympy.Mul(*[v**e for v, e in zip(z, q.right)])) for q in eqs}
    assert mine == minors


def test_quasiminors_vanish_on_torus():
    t1, t2 = sympy.symbols("t1 t2")
    for p, q in coprime_pairs(20):
        s = semigroup_generators(p, q)
        eqs = quasimatrix_equations(s)
        assert len(eqs) == comb(s.ambient_dim - 1, 2)
        subs = [t1 ** mu[0] * t2 ** mu[1] for mu in s.generators]
        for e in eqs:
            assert monomial_to_lattice(e.left, s) == monomial_to_lattice(e.right, s)
            lhs = sympy.Mul(*[x**a for x, a in zip(subs, e.left)])
            rhs = sympy.Mul(*[x**a for x, a in zip(subs, e.right)])
            assert sympy.expand(lhs - rhs) == 0


def test_determinantal_tag():
    assert semigroup_generators(4, 1).determinantal
    assert semigroup_generators(5, 2).determinantal
    # only the inner digits matter: [2, 2, 3] and [3, 2, 2] qualify, [2, 3, 3] does not
    assert semigroup_generators(7, 2).determinantal
    assert semigroup_generators(7, 4).determinantal
    assert not semigroup_generators(13, 5).determinantal


def test_monomial_to_lattice(quadric):
    assert monomial_to_lattice((0, 2, 0), quadric) == (2, 2)
    assert monomial_to_lattice((3, 0, 0), quadric) == (3, 0)
    assert monomial_to_lattice((0, 0, 2), quadric) == (2, 4)
    with pytest.raises(ValueError):
        monomial_to_lattice((1, 0), quadric)


def test_isolated_singularity(quadric):
    assert has_isolated_singularity({(1, 0, 0): 1, (0, 0, 2): -1}, quadric)
    assert not has_isolated_singularity({(0, 2, 0): 1, (3, 0, 0): -1}, quadric)
    for p, q in [(2, 1), (5, 2), (7, 3)]:
        s = semigroup_generators(p, q)
        n = s.ambient_dim
        g = {tuple(int(i == 0) for i in range(n)): 1, tuple(int(i == n - 1) for i in range(n)): 1}
        assert has_isolated_singularity(g, s)
    with pytest.raises(ConditionViolated):
        has_isolated_singularity({(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}, quadric)


exps3 = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(any),
    st.integers(1, 5),
    min_size=1,
    max_size=4,
)


@given(exps3)
def test_ray_membership_matches_pure_powers(g):
    s = semigroup_generators(2, 1)
    X = s.variety()
    lg = lattice_polynomial(g, s)
    by_rays = all(any(face.contains(v) for v in lg.support) for face in X.faces if face.dim == 1)
    assert by_rays == has_pure_powers(g, 3)


def test_prepolar(quadric):
    f = {(0, 2, 0): 1, (3, 0, 0): -1}
    assert is_prepolar({(1, 0, 0): 1, (0, 0, 2): -1}, f, quadric)
    assert not is_prepolar(f, f, quadric)
    assert not is_prepolar({(0, 1, 0): 1}, f, quadric)
    # g isolated but sharing the factor (z1 - z3^2) with f
    g = {(1, 0, 0): 1, (0, 0, 2): -1}
    shared = {(2, 0, 0): 1, (1, 0, 2): -1}
    with pytest.raises(CommonComponent):
        is_prepolar(g, shared, quadric)


def test_orbits(quadric):
    orbits = orbit_decomposition(quadric)
    assert [o.dim for o in orbits] == [0, 1, 1, 2]
    assert [o.describe() for o in orbits[1:3]] == ["(t1, 0, 0)", "(0, 0, t1)"]
    s52 = semigroup_generators(5, 2)
    dense = orbit_decomposition(s52)[-1]
    assert dense.exponents == s52.generators
    smooth = orbit_decomposition(semigroup_generators(1, 0))
    assert sorted(o.describe() for o in smooth) == ["(0, 0)", "(0, t1)", "(t1, 0)", "(t1, t2)"]
