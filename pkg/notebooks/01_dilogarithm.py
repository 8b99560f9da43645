# %% [markdown]
# # The dilogarithm
# Li2 is summed directly below 1/2 and reflected above it, so at most ~50
# terms are ever needed.

# %%
import math

import numpy as np

from bohrradius import dilog
from bohrradius.specfun import PI2_6

for x in (0.0, 0.1, 0.5, 0.9, 0.999, 1.0):
    res = dilog(x)
    print(f"Li2({x:<5}) = {res.value:.15f}   terms={res.terms_used:3d}  tail<={res.tail_bound:.1e}")

# %% reflection check on random points
rng = np.random.default_rng(0)
xs = rng.uniform(1e-6, 1 - 1e-6, 1000)
err = [abs(dilog(x).value + dilog(1 - x).value - (PI2_6 - math.log(x) * math.log(1 - x))) for x in xs]
print("max reflection defect:", max(err))
