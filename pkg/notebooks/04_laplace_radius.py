# %% [markdown]
# # Laplace transform radius
# The radius is the first zero of capital_phi_gamma.  It moves right as gamma
# grows, and leaves (0, 1) in floating point somewhere near gamma = 0.9.

# %%
from bohrradius import NoRootError, laplace_radius
from bohrradius.verify import laplace_ratio

for g in (0.0, 0.1, 0.2, 0.27713, 0.5, 0.8, 0.9):
    try:
        res = laplace_radius(g)
        print(f"gamma={g:<8} radius={res.root:.8f}  unique={res.unique}")
    except NoRootError as exc:
        print(f"gamma={g:<8} {exc}")

# %% the bound (1/r) ln(1/(1-r)) is approached as a -> 1
for a in (0.5, 0.9, 0.99, 0.999, 0.9999):
    print(a, laplace_ratio(0.0, a, 0.5))
