# %% [markdown]
# # Anatomy of X(p, q)
# Continued fraction, semigroup generators, defining binomials and torus orbits.

# %%
from toric_brasselet.parsing import format_terms
from toric_brasselet.toric_surface import orbit_decomposition, quasimatrix_equations, semigroup_generators

for p, q in [(2, 1), (5, 2), (7, 3)]:
    s = semigroup_generators(p, q)
    print(f"X({p},{q}): {p}/{p - q} = [[{', '.join(map(str, s.hj_digits))}]]")
    print("  generators:", " ".join(map(str, s.generators)))
    for e in quasimatrix_equations(s):
        print("  ", format_terms(e.as_polynomial()))
    for orbit in orbit_decomposition(s):
        print(f"  orbit dim {orbit.dim}: {orbit.describe()}")
