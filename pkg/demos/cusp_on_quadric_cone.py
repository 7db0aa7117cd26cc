# %% [markdown]
# # A cusp on the quadric cone
# X(2,1) is the cone z1*z3 = z2^2.  We take f = z2^2 - z1^3 and the
# section g = z1 - z3^2, then compute every invariant the package offers.

# %%
from toric_brasselet.invariants import (
    brasselet_ci,
    brasselet_hypersurface,
    euler_obstruction_of_function,
    euler_obstruction_origin,
    gsv_index,
    morse_number,
)
from toric_brasselet.newton import CompleteIntersectionData
from toric_brasselet.parsing import parse_polynomial
from toric_brasselet.toric_surface import semigroup_generators

s = semigroup_generators(2, 1)
X = s.variety()
print("generators of the dual cone:", s.generators)
for face in X.faces:
    print(f"  face {face.id}: dim {face.dim}, {face.label()}")

# %%
f = parse_polynomial("y^2 - x^3", s)
g = parse_polynomial("x - z^2", s)
print("f in lattice coordinates:", f.terms)
print("g in lattice coordinates:", g.terms)

# %% [markdown]
# Brasselet number of f on X, one term per face of the dual cone.

# %%
b_x = brasselet_hypersurface(X, f)
for t in b_x.per_face_terms:
    print(f"  face {t.face}: sign {t.sign:+d}, volumes {t.volume_sum}, Eu {t.eu_value} -> {t.contribution}")
print("B_X =", b_x.total)

# %% [markdown]
# Same computation on X^g = X ∩ {g = 0}.  Only the full face contributes.

# %%
ci = CompleteIntersectionData((g, f))
b_xg = brasselet_ci(X, ci)
print("B_Xg =", b_xg.total)
print("Morse points n =", morse_number(b_x, b_xg, X.d))
print("GSV index =", gsv_index(X, ci))

# %%
eu0 = euler_obstruction_origin(X).value
print("Eu_X(0) =", eu0, " Eu_f(0) =", euler_obstruction_of_function(eu0, b_x))
