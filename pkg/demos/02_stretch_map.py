"""
The stretch map and its Lipschitz constant
==========================================

The map between a hexagon and its k-stretch is explicit on each band.  Its
differential is largest on the short side, where it equals k, and random
pairs confirm that no distance grows by more than k.
"""

import numpy as np

from stretchlab.hexagon import from_half_long
from stretchlab.hplane import PolarPoint
from stretchlab.stretchmap import (
    diff_norm_grid,
    differential,
    eval_band,
    hexagon_lipschitz_sample,
    lipschitz_sample,
    metric_stretch,
    reverse_spec,
    stretch_map,
    sup_diff_norm,
)

H = from_half_long(np.arcsinh(1.0))
spec = stretch_map(H, 2.0)

# %%
# A point on the short side and one on the innermost hypercycle.
for theta in (np.pi / 2, np.pi / 4):
    p = PolarPoint(1.5, theta)
    q = eval_band(spec, p)
    dv = differential(spec, p)
    print(f"theta={theta:.4f} -> ({q.R:.6f}, {q.theta:.6f}), dR={dv.dR:.6f}, dtheta={dv.dTheta:.6f}")

# %%
# The norm over a grid that includes the short side.
norms = diff_norm_grid(spec, 200)
print("sup over grid:", sup_diff_norm(spec, 200), " largest off the short side:", norms[:, :-1].max())

# %%
# Measured in the hyperbolic metric of source and target, the stretch along
# the geodesic leaves is k everywhere and along the hypercycles it is smaller.
g, f = metric_stretch(spec, PolarPoint(np.full(5, 1.2), np.linspace(np.pi / 4, np.pi / 2, 5)))
print("along geodesic leaves:", g, "\nalong hypercycles:", np.round(f, 6))

# %%
# Monte Carlo: largest distance ratio over 10^5 pairs, on the band and on the
# whole hexagon (the core is handled by coning from the center).
print("band:", lipschitz_sample(spec, 100_000, seed=7))
print("hexagon:", hexagon_lipschitz_sample(spec, 100_000, seed=7))

# %%
# The reverse map has Lipschitz constant l / l_k.
rev = reverse_spec(spec)
print(f"d_2 = {rev.k:.6f}, sup norm of reverse = {sup_diff_norm(rev, 200):.6f}")
