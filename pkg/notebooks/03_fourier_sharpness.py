# %% [markdown]
# # Fourier transform radius on Omega_gamma
# The f0 family attains the bound 1/(1-r) exactly at (1+g)/(3+g) as a -> 1.

# %%
import numpy as np

from bohrradius import classical_radius, f0_sequence, fourier_majorant, phi_gamma_a
from bohrradius import sharpness_sweep_fourier

for g in (0.0, 0.25, 0.5, 0.9):
    r0 = classical_radius(g)
    gaps = [phi_gamma_a(g, a, r0) for a in (0.9, 0.99, 0.999, 0.9999)]
    print(f"gamma={g:<5} r0={r0:.6f}  Phi at r0:", " ".join(f"{v:.1e}" for v in gaps))

# %% just above the radius some f0 breaks the inequality
for g in (0.0, 0.5):
    rep = sharpness_sweep_fourier(g, classical_radius(g) + 0.01)
    print(g, rep.passed, rep.witness)

# %% unit disk: violation exactly when r > 1/(1+2a)
a = 0.8
for r in np.linspace(0.3, 0.4, 6):
    fm = fourier_majorant(f0_sequence(a, 0.0), r).value
    print(f"r={r:.2f}  F={fm:.6f}  1/(1-r)={1 / (1 - r):.6f}  threshold={1 / (1 + 2 * a):.4f}")
