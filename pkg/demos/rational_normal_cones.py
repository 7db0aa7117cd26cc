# %% [markdown]
# # Rational normal cones
# X(n,1) is the cone over the rational normal curve of degree n.  For
# f = z1^d + z_{n+1}^d the Brasselet number is 2d - n d^2 and the local
# Euler obstruction at the vertex is 2 - n.

# %%
from toric_brasselet.invariants import (
    brasselet_hypersurface,
    euler_obstruction_of_function,
    euler_obstruction_origin,
)
from toric_brasselet.newton import LatticePolynomial
from toric_brasselet.toric_surface import surface_variety

print(" n  d     B   Eu(0)  Eu_f   2d-nd^2")
for n in range(2, 6):
    X = surface_variety(n, 1)
    eu0 = euler_obstruction_origin(X).value
    for d in (1, 2, 3):
        e1 = tuple(d * (i == 0) for i in range(n + 1))
        en = tuple(d * (i == n) for i in range(n + 1))
        f = LatticePolynomial.from_ambient({e1: 1, en: 1}, X)
        b = brasselet_hypersurface(X, f).total
        eu_f = euler_obstruction_of_function(eu0, brasselet_hypersurface(X, f))
        print(f"{n:2d} {d:2d} {b:5d} {eu0:6d} {eu_f:5d} {2 * d - n * d * d:8d}")
