# %% [markdown]
# # Refined radii for LK and S
# Each radius solves G(r) = 1 where G is the extremal majorant plus lambda(r)
# times the sum of squares.  Both tables are recomputed row by row.

# %%
from bohrradius import refined_radius_lk, refined_radius_s, reproduce_table

for name in ("t1", "t2"):
    print(f"\n{name}")
    for row in reproduce_table(name):
        print(f"  {row.lambda_source:<20} {row.computed_radius:.6f}  printed {row.paper_value:.6f}"
              f"  diff {row.abs_diff:.1e}  {row.flag}")

# %% the zero weight recovers the unrefined radii
print(refined_radius_lk("0").root, 1 - 2.718281828459045 ** -0.5)
print(refined_radius_s("0").root, (3 - 5 ** 0.5) / 2)

# %% heavier weights shrink the radius
for lam in ("r^2", "r", "r/(1-r)", "r/(1-r)^2", "r/(1-r)^3"):
    print(f"{lam:<10} LK {refined_radius_lk(lam).root:.6f}   S {refined_radius_s(lam).root:.6f}")
