"""Exact search for singular torus points of Laurent polynomial systems (sympy backed)."""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

# a slice with at most this many unknowns is tested exactly in one shot
_EXACT_UNKNOWNS = 3


def _rand_rational(rng) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-1000, 1000)
    return Fraction(num, rng.randint(1, 1000))


def _to_sympy(terms, xs):
    """Laurent polynomial -> polynomial, after clearing negative exponents with a monomial."""
    r = len(xs)
    shift = [min(e[i] for e in terms) for i in range(r)]
    expr = 0
    for e, c in terms.items():
        mono = sympy.Integer(1)
        for x, a, s in zip(xs, e, shift):
            mono *= x ** (a - s)
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return sympy.expand(expr)


def singular_point(system, r: int, u, rng):
    """Look for a torus point where the system vanishes with Jacobian rank < len(system).

    The system is weighted homogeneous for ``u``, so one coordinate with
    u_i != 0 is set to 1. Returns ``(point, sampled)``; ``point`` is a tuple
    of strings (or None) and ``sampled`` says whether random coordinates were
    used, i.e. whether another trial could give a different answer.
    """
    xs = sympy.symbols(f"x0:{r}")
    polys = [_to_sympy(p, xs) for p in system]
    c = len(polys)
    jac = [[sympy.diff(p, x) for x in xs] for p in polys]
    if c <= r:
        minors = [
            sympy.Matrix([[row[j] for j in cols] for row in jac]).det()
            for cols in itertools.combinations(range(r), c)
        ]
    else:
        minors = []  # rank < c holds everywhere
    i0 = next(i for i, w in enumerate(u) if w != 0)
    values = {xs[i0]: sympy.Integer(1)}
    rest = [x for i, x in enumerate(xs) if i != i0]
    sampled = len(rest) > _EXACT_UNKNOWNS
    if sampled:
        for x in rest[: max(0, len(rest) - max(c, 1))]:
            q = _rand_rational(rng)
            values[x] = sympy.Rational(q.numerator, q.denominator)
    unknowns = [x for x in rest if x not in values]
    eqs = [sympy.expand(e.subs(values)) for e in polys + minors]
    eqs = [e for e in eqs if e != 0]
    point = _torus_zero(eqs, unknowns, rng)
    if point is None:
        return None, sampled
    values.update(point)
    return tuple(str(values.get(x, "?")) for x in xs), sampled


def _torus_zero(eqs, unknowns, rng):
    """A common zero with all unknowns nonzero, as {symbol: value}; None if there is none."""
    if not unknowns:
        return {} if not eqs else None
    if not eqs:
        return {x: sympy.Integer(1) for x in unknowns}
    t = sympy.Symbol("_t")
    sat = sympy.Integer(1) - t * sympy.Mul(*unknowns)
    gb = sympy.groebner(eqs + [sat], *unknowns, t, order="lex")
    if list(gb.exprs) == [1]:
        return None
    reduced = [e for e in gb.exprs if not e.has(t)]
    return _pick_point(reduced, unknowns, rng)


def _pick_point(gb_exprs, unknowns, rng):
    if not gb_exprs:
        return {x: sympy.Integer(1) for x in unknowns}
    try:
        sols = sympy.solve(gb_exprs, unknowns, dict=True)
    except NotImplementedError:
        sols = []
    for sol in sols:
        free = [x for x in unknowns if x not in sol]
        for _ in range(8):
            fill = {}
            for x in free:
                q = _rand_rational(rng)
                fill[x] = sympy.Rational(q.numerator, q.denominator)
            point = {x: sol[x].subs(fill) if x in sol else fill[x] for x in unknowns}
            if all(v != 0 for v in point.values()):
                return point
    # zero set exists on the torus but has no closed form here
    return {x: sympy.Symbol(f"root[{x}]") for x in unknowns}
