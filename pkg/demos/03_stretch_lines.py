"""
Stretch lines in Teichmuller space
==================================

Doubling the hexagon gives a pair of pants; gluing copies gives a surface of
any type (g, b).  Stretching all of them together traces a line whose
forward and backward distances differ.
"""

import numpy as np

from stretchlab.hexagon import from_half_long
from stretchlab.pants import GeneralPants, J_restricted, K_pants, double, stretch_pants
from stretchlab.teich import (
    asymmetry_report,
    backward_distance,
    canonical_graph,
    forward_backward_counterexamples,
    forward_distance,
    report_csv,
    stretch_line,
    stretch_point,
)

L = float(np.arcsinh(1.0))

# %%
# Pants: cuffs 4L, seams 2l, and the seam is determined by the cuffs.
P = double(from_half_long(L))
print(P.to_dict(), "residual", P.orthogeodesic_residual())

# %%
# Along the stretch, cuffs grow by k and seams shrink by the dilatation.
P2 = stretch_pants(P, 2.0)
print("J forward", J_restricted(P, P2), "J backward", J_restricted(P2, P))

# %%
# Cuff ratios alone do not make a metric.
print("K((2,3,4),(2,2,3)) =", K_pants(GeneralPants((2, 3, 4)), GeneralPants((2, 2, 3))))
print("K((2,2,2),(1,1,1)) =", K_pants(GeneralPants((2, 2, 2)), GeneralPants((1, 1, 1))))

# %%
# A closed genus-2 surface along the line.
line = stretch_line(2, 0, L)
print(canonical_graph(2, 0).to_dict())
print(stretch_point(line, 1.0).to_json())
print("forward", forward_distance(line, 0, 1), "backward", backward_distance(line, 0, 1))

# %%
# Backward distance grows like e^t L, forward only like t.
print(report_csv(asymmetry_report(L, np.linspace(0, 3, 7))))

# %%
# For short base curves the backward distance can be the smaller one near t = 0.
print("counterexamples:", forward_backward_counterexamples([0.3, 0.6, 0.7], [0.05, 0.2, 1.0]))
