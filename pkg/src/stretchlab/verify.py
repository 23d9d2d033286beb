"""Invariant suites run by ``stretchlab verify``.

Each suite returns a list of checks ``{"name", "residual", "tol", "pass"}``.
A check passes when ``residual <= tol``; one-sided bounds report the signed
excess over the bound, so comfortable passes show negative residuals.
"""

from __future__ import annotations

import numpy as np

from .hexagon import (
    canonical_disk_embedding,
    dilatation,
    from_half_long,
    nonfoliated_contains,
    nonfoliated_region,
    placement,
    solve_right_hexagon,
    stretch,
    theta1,
)
from .hplane import DiskPoint, PolarPoint, angle_to_distance, disk_distance
from .pants import GeneralPants, J_restricted, K_pants, double, orthogeodesics, stretch_pants
from .stretchmap import (
    band_grid,
    band_map,
    diff_norm_grid,
    differential,
    hexagon_lipschitz_sample,
    lipschitz_sample,
    reverse_spec,
    stretch_map,
    sup_diff_norm,
)
from .teich import (
    asymmetry_report,
    backward_distance,
    forward_distance,
    stretch_line,
    stretch_point,
)

SUITES = ("hexagon", "map", "inclusion", "pants", "line")

DEFAULTS = {
    "L": float(np.arcsinh(1.0)),
    "k": 2.0,
    "grid": 200,
    "samples": 100_000,
    "seed": 7,
    "kgrid": (1.0, 1.5, 2.0, 2.5, 3.0),
}


def _check(name: str, residual: float, tol: float) -> dict:
    residual = float(residual)
    return {"name": name, "residual": residual, "tol": tol, "pass": bool(residual <= tol)}


def suite_hexagon(L: float, **_) -> list[dict]:
    H = from_half_long(L)
    sides = solve_right_hexagon(2 * L, 2 * L, 2 * L)
    emb = canonical_disk_embedding(H)
    lengths = [disk_distance(emb[i], emb[(i + 1) % 6]) for i in range(6)]
    expected = [2 * H.l, 2 * L] * 3
    ks = np.linspace(1.0, 4.0, 31)
    dil = np.array([dilatation(H, k) for k in ks])
    return [
        _check("relation_residual", abs(H.relation_residual), 1e-12),
        _check("right_hexagon_short_side", abs(sides.a_opp - 2 * H.l), 1e-10),
        _check("embedding_edge_lengths", max(abs(a - b) for a, b in zip(lengths, expected)), 1e-9),
        _check("theta1_at_distance_L", abs(angle_to_distance(theta1(H)) - L), 1e-12),
        _check("dilatation_at_1", abs(dil[0] - 1.0), 1e-15),
        _check("dilatation_increasing", max(0.0, -np.min(np.diff(dil))), 0.0),
    ]


def fd_relative_error(spec, grid: int = 50, h: float = 1e-6) -> float:
    """Largest relative gap between analytic and central-difference partials on the band."""
    R, theta = band_grid(spec.source, grid)
    dv = differential(spec, PolarPoint(R, theta))
    fd_R = (band_map(spec, R + h, theta)[0] - band_map(spec, R - h, theta)[0]) / (2 * h)
    fd_T = (band_map(spec, R, theta + h)[1] - band_map(spec, R, theta - h)[1]) / (2 * h)
    return float(max(np.max(np.abs(fd_R - dv.dR) / np.abs(dv.dR)),
                     np.max(np.abs(fd_T - dv.dTheta) / np.abs(dv.dTheta))))


def suite_map(L: float, k: float, grid: int, samples: int, seed: int, **_) -> list[dict]:
    spec = stretch_map(from_half_long(L), k)
    norms = diff_norm_grid(spec, grid)
    interior = norms[:, :-1]
    band_ratio = lipschitz_sample(spec, samples, seed)
    hex_ratio = hexagon_lipschitz_sample(spec, samples, seed)
    rev = reverse_spec(spec)
    d_k = dilatation(spec.source, k)
    checks = [
        _check("sup_norm_equals_k", abs(sup_diff_norm(spec, grid) - k), 1e-12 * k),
        _check("interior_below_k", np.max(interior) - k, 0.0 if k > 1 else 1e-15),
        _check("fd_partials_relative", fd_relative_error(spec), 1e-6),
        _check("band_ratio_upper", band_ratio - k * (1 + 1e-9), 0.0),
        _check("band_ratio_lower", k * (1 - 0.01) - band_ratio, 0.0),
        _check("hexagon_ratio_upper", hex_ratio - k * (1 + 1e-6), 0.0),
        _check("reverse_sup_norm", abs(sup_diff_norm(rev, grid) - d_k), 1e-10),
    ]
    return checks


def map_report(L: float, k: float, grid: int, samples: int, seed: int, **_) -> dict:
    spec = stretch_map(from_half_long(L), k)
    sup = sup_diff_norm(spec, grid)
    ratio = lipschitz_sample(spec, samples, seed)
    ok = abs(sup - k) <= 1e-12 * k and k * (1 - 0.01) <= ratio <= k * (1 + 1e-9)
    return {"spec": spec.to_dict(), "grid": grid, "sup_norm": sup,
            "sample_max_ratio": ratio, "pass": bool(ok)}


def inclusion_margin(L: float, k: float, k2: float, n: int = 200) -> float:
    """Smallest excess over ``L_k`` of the distances from the ``k2``-boundary to ``H_k``'s short axes.

    Returns ``-inf`` if a boundary sample falls outside ``H_k``.
    """
    base = from_half_long(L)
    Hk, Hk2 = stretch(base, k), stretch(base, k2)
    pts = nonfoliated_region(Hk2, n).samples
    P = placement(Hk)
    if not np.all(P.contains(pts[:, 0], pts[:, 1], tol=0.0)):
        return float("-inf")
    d = P.short_axis_distances(pts[:, 0], pts[:, 1])
    return float(np.min(d) - Hk.half_long)


def suite_inclusion(L: float, kgrid, **_) -> list[dict]:
    kgrid = sorted(float(k) for k in kgrid)
    base = from_half_long(L)
    checks = []
    for i, k in enumerate(kgrid):
        for k2 in kgrid[i + 1:]:
            margin = inclusion_margin(L, k, k2)
            region = nonfoliated_region(stretch(base, k2), 200)
            inside = nonfoliated_contains(nonfoliated_region(stretch(base, k), 3),
                                          DiskPoint(region.samples[:, 0], region.samples[:, 1]))
            # residual is 1e-9 minus the margin, so it is negative when strictly inside
            residual = 1e-9 - margin if inside.all() else np.inf
            checks.append(_check(f"strict_inclusion_{k:g}_{k2:g}", residual, 0.0))
    return checks


def suite_pants(L: float, k: float, **_) -> list[dict]:
    P = double(from_half_long(L))
    Pk = stretch_pants(P, k)
    ortho = orthogeodesics(GeneralPants((P.cuff_length,) * 3))
    spec = stretch_map(P.hexagon, k)
    d_k = dilatation(P.hexagon, k)
    Ls = np.linspace(0.05, 5.0, 50)
    identity = max(abs(double(from_half_long(x)).orthogeodesic_residual()) for x in Ls)
    return [
        _check("orthogeodesic_identity", identity, 1e-10),
        _check("orthogeodesics_specialize", max(abs(o - P.seam_length) for o in ortho), 1e-10),
        _check("cuffs_scale_by_k", abs(Pk.cuff_length - k * P.cuff_length), 1e-12 * Pk.cuff_length),
        _check("seam_ratio_is_dilatation", abs(P.seam_length / Pk.seam_length - d_k), 1e-12 * d_k),
        _check("lipschitz_equals_exp_J", abs(sup_diff_norm(spec, 50) - np.exp(J_restricted(P, Pk))), 1e-12 * k),
        _check("K_separation_failure", abs(K_pants(GeneralPants((2, 3, 4)), GeneralPants((2, 2, 3)))), 0.0),
        _check("K_negative", abs(K_pants(GeneralPants((2, 2, 2)), GeneralPants((1, 1, 1))) + np.log(2)), 1e-15),
    ]


def suite_line(L: float, seed: int, **_) -> list[dict]:
    rng = np.random.default_rng(seed)
    checks = []
    for g, b in ((0, 3), (1, 1), (2, 0)):
        line = stretch_line(g, b, L)
        ts = np.sort(rng.uniform(-1.0, 2.0, size=(50, 3)), axis=1)
        fwd = max(abs(forward_distance(line, 0.0, t) - t) for t in ts[:, 2] if t >= 0)
        add = max(abs(backward_distance(line, a, c) - backward_distance(line, a, b_)
                      - backward_distance(line, b_, c)) for a, b_, c in ts)
        twists = max(max(abs(x) for x in stretch_point(line, t).twists or (0.0,)) for t in ts[:, 0])
        checks += [
            _check(f"forward_is_t_{g}_{b}", fwd, 0.0),
            _check(f"backward_additive_{g}_{b}", add, 1e-12),
            _check(f"twists_zero_{g}_{b}", twists, 0.0),
        ]
    line = stretch_line(0, 3, L)
    P = double(from_half_long(L))
    j_gap = 0.0
    for t in (0.25, 0.5, 1.0, 2.0):
        Pt = stretch_pants(P, np.exp(t))
        j_gap = max(j_gap, abs(J_restricted(P, Pt) - forward_distance(line, 0, t)),
                    abs(J_restricted(Pt, P) - backward_distance(line, 0, t)))
    checks.append(_check("J_agrees_on_pants", j_gap, 1e-12))
    rows = asymmetry_report(L, np.linspace(0.0, 4.0, 81))
    err4 = max((abs(r["ratio"] - 1) for r in rows if np.exp(r["t"]) * L >= 4), default=0.0)
    err8 = max((abs(r["ratio"] - 1) for r in rows if np.exp(r["t"]) * L >= 8), default=0.0)
    checks.append(_check("asymptote_ratio_eL_ge_4", err4, 1e-2))
    checks.append(_check("asymptote_ratio_eL_ge_8", err8, 1e-4))
    return checks


SUITE_FUNCS = {
    "hexagon": suite_hexagon,
    "map": suite_map,
    "inclusion": suite_inclusion,
    "pants": suite_pants,
    "line": suite_line,
}


def run_suite(name: str, **params) -> dict:
    p = {**DEFAULTS, **{k: v for k, v in params.items() if v is not None}}
    names = SUITES if name == "all" else (name,)
    out = {"suite": name, "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in p.items()},
           "results": {}}
    for n in names:
        checks = SUITE_FUNCS[n](**p)
        entry = {"checks": checks, "pass": all(c["pass"] for c in checks)}
        if n == "map":
            entry["report"] = map_report(**p)
        out["results"][n] = entry
    out["pass"] = all(r["pass"] for r in out["results"].values())
    return out
