"""
Toward the ideal triangle
=========================

As k grows the innermost hypercycle of each band approaches a horocycle and
the core converges to the cusped region of an ideal triangle.
"""

from stretchlab.stretchmap import horocyclic_limit_report

rows = horocyclic_limit_report(0.5, [1, 2, 4, 8, 16, 32])
print(f"{'k':>4} {'theta_k':>12} {'curvature':>20} {'drift':>10}")
for r in rows:
    print(f"{r['k']:>4g} {r['theta_k']:>12.3e} {r['curvature']:>20.16f} {r['drift']:>10.2e}")
