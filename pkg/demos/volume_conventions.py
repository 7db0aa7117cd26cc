# %% [markdown]
# # Two volume conventions
# The complete-intersection sum needs K, a sum of mixed volumes over
# compositions.  In paper-example mode a composition whose chosen faces are
# all points counts 1; in strict mode it counts the standard mixed volume 0.
# The cusp example separates the two.

# %%
from toric_brasselet.invariants import brasselet_ci, bruce_roberts
from toric_brasselet.newton import CompleteIntersectionData, ToricVarietyData, face_invariant_data
from toric_brasselet.parsing import parse_polynomial
from toric_brasselet.toric_surface import semigroup_generators

s = semigroup_generators(2, 1)
X = s.variety()
f = parse_polynomial("y^2 - x^3", s)
g = parse_polynomial("x - z^2", s)
ci = CompleteIntersectionData((g, f))

for mode in ("paper-example", "strict"):
    data = face_invariant_data(X, ci, X.full_face, mode)
    facets = [(fd.u, fd.d, fd.K) for fd in data.facets]
    print(f"{mode:14s} facets (u, d, K) = {facets}  B_Xg = {brasselet_ci(X, ci, mode=mode).total}")

# %% [markdown]
# A geometric control: on C^3 take the quadric cone g = z1*z3 - z2^2 and a
# generic linear f.  The Bruce-Roberts number of a generic linear form is 1.

# %%
C3 = ToricVarietyData.affine_space(3)
g3 = parse_polynomial("z1*z3 - z2^2", C3)
f3 = parse_polynomial("z1 + 2*z2 + 3*z3", C3)
for mode in ("strict", "paper-example"):
    print(f"{mode:14s} mu_BR = {bruce_roberts(f3, g3, mode=mode).value}")
