# %% [markdown]
# # Families with a fixed Newton polygon
# Deforming f by -z1^2 z3^2 and g by z3^3 leaves both Newton polygons alone,
# so every invariant stays put over the 16 sample parameters.

# %%
from toric_brasselet.invariants import family_constancy_report
from toric_brasselet.newton import CompleteIntersectionData, newton_preserving_check
from toric_brasselet.parsing import parse_polynomial
from toric_brasselet.toric_surface import semigroup_generators

s = semigroup_generators(2, 1)
X = s.variety()
f = parse_polynomial("y^2 - x^3", s)
g = parse_polynomial("x - z^2", s)
h = parse_polynomial("-z1^2*z3^2", s)
l = parse_polynomial("z3^3", s)

print(newton_preserving_check(f, h, X))
print(newton_preserving_check(g, l, X))

report = family_constancy_report(X, CompleteIntersectionData((g, f)), [h], [[l]])
print("constant values:", report.values)

# %% [markdown]
# A deformation that reaches below the polygon breaks the hypothesis.

# %%
bad = parse_polynomial("x^2", s)
print(newton_preserving_check(f, bad, X))
