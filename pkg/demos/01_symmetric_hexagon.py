"""
A symmetric right-angled hexagon
================================

Build the hexagon with half-long side L, check the side relation, look at
the band of hypercycles next to one short edge and at the cusped region in
the middle, and write a picture.
"""

import sys

import numpy as np

from stretchlab.hexagon import band, canonical_disk_embedding, from_half_long, nonfoliated_region, placement, theta1
from stretchlab.hplane import disk_distance
from stretchlab.render import render_svg

# %%
# Side lengths.  The half-short side is determined by the half-long one.
H = from_half_long(np.arcsinh(1.0))
print(f"L = {H.L:.6f}, l = {H.l:.6f}, 2 sinh(l) sinh(L) - 1 = {H.relation_residual:.1e}")

# %%
# The hexagon sits in the disk with its center of symmetry at the origin.
# Consecutive vertices alternate short (2l) and long (2L) edges.
V = canonical_disk_embedding(H)
for i in range(6):
    print(f"edge {i}: {disk_distance(V[i], V[(i + 1) % 6]):.12f}")

# %%
# Near each short edge the hexagon is foliated by hypercycles.  In the upper
# half-plane the band is a polar rectangle; its inner angle is theta1.
B = band(H)
print(f"theta1 = {theta1(H):.12f} (pi/4 = {np.pi / 4:.12f})")
print(f"band area 2 l sinh L = {B.area():.6f}; three bands leave {np.pi - 3 * B.area():.6f} for the core")

# %%
# The unfoliated core is bounded by three hypercycle arcs meeting tangentially
# at the midpoints of the long edges.
region = nonfoliated_region(H, 5)
print("tangency points:", np.round(region.tangency_points, 6).tolist())
print("center to short edge:", placement(H).center_to_short)

# %%
# Picture of the foliated hexagon with the stretched one (k = 2) on top.
out = sys.argv[1] if len(sys.argv) > 1 else "hexagon.svg"
with open(out, "w") as f:
    f.write(render_svg(H, k=2.0))
print("wrote", out)
