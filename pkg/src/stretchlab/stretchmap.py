"""The extremal map ``h_k`` between symmetric hexagons and its verification harness.

On a foliated band ``C`` (polar coordinates in the upper half-plane) the map is

    h_k(R, theta) = (R ** (l_k / l), arccos(tanh(k * argcosh(1 / sin theta))))

i.e. a point at distance ``d`` from the short side goes to distance ``k d``,
and the geodesic leaf through ``R`` goes to the leaf through ``R ** (l_k/l)``.
On the non-foliated region of the hexagon the map is extended by geodesic
coning from the center (see :func:`eval_hexagon`).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import directed_hausdorff

from .hexagon import (
    SymmetricHexagon,
    band,
    from_half_long,
    nonfoliated_region,
    placement,
    stretch,
    theta1,
)
from .hplane import (
    DiskPoint,
    DomainError,
    PolarPoint,
    disk_distance,
    disk_from_polar,
    disk_polar,
    disk_to_hyperboloid,
    hyperboloid_to_disk,
    UhpPoint,
    ray_point,
    uhp_distance,
)

CHUNK = 4096
BIASED_FRACTION = 0.7
SHORT_SIDE_WINDOW = 0.1


@dataclass(frozen=True)
class StretchMapSpec:
    source: SymmetricHexagon
    k: float
    target: SymmetricHexagon
    exponent: float

    def __post_init__(self):
        expected = stretch(self.source, self.k)
        if (abs(expected.half_long - self.target.half_long) > 1e-12
                or abs(expected.half_short - self.target.half_short) > 1e-12):
            raise DomainError("target is not stretch(source, k)")

    @classmethod
    def create(cls, source: SymmetricHexagon, k: float) -> "StretchMapSpec":
        """Spec of the map ``source -> stretch(source, k)``.

        For ``k < 1`` the map is built as the reverse of the ``1/k`` stretch
        of the target, so its long/short roles come out swapped.
        """
        if not np.isfinite(k) or k <= 0:
            raise DomainError(f"stretch factor must be positive, got {k}")
        if k < 1:
            return reverse_spec(cls.create(stretch(source, k), 1.0 / k))
        target = stretch(source, k)
        return cls(source, float(k), target, target.half_short / source.half_short)

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "k": self.k,
            "target": self.target.to_dict(),
            "exponent": self.exponent,
        }


def stretch_map(source: SymmetricHexagon, k: float) -> StretchMapSpec:
    return StretchMapSpec.create(source, k)


# --- band map -------------------------------------------------------------

def _distance_from_short_side(theta):
    # cos(theta) = tanh(d); asinh(cot) avoids the argcosh(1/sin) cancellation at pi/2
    return np.arcsinh(np.cos(theta) / np.sin(theta))


def _angle_from_distance(d):
    return np.arctan2(1.0, np.sinh(d))


def band_map(spec: StretchMapSpec, R, theta):
    """Array form of :func:`eval_band` without domain checks."""
    d = _distance_from_short_side(np.asarray(theta, dtype=float))
    return np.power(R, spec.exponent), _angle_from_distance(spec.k * d)


def eval_band(spec: StretchMapSpec, p: PolarPoint) -> PolarPoint:
    band(spec.source).check(p.R, p.theta)
    R2, th2 = band_map(spec, p.R, p.theta)
    return PolarPoint(R2, th2)


@dataclass(frozen=True)
class DifferentialValue:
    dR: float
    dTheta: float
    norm: float


def differential(spec: StretchMapSpec, p: PolarPoint) -> DifferentialValue:
    """Partials ``dR'/dR`` and ``dtheta'/dtheta``; the mixed partials vanish.

    ``norm`` is the larger of the two, the quantity bounded by ``k`` on the band.
    """
    band(spec.source).check(p.R, p.theta)
    e, k = spec.exponent, spec.k
    d = _distance_from_short_side(np.asarray(p.theta, dtype=float))
    dR = e * np.power(p.R, e - 1.0)
    dTheta = k * np.cosh(d) / np.cosh(k * d)
    return DifferentialValue(dR, dTheta, np.maximum(np.abs(dR), np.abs(dTheta)))


def metric_stretch(spec: StretchMapSpec, p: PolarPoint):
    """Singular values of ``dh_k`` in the hyperbolic metric, source to target.

    Returns ``(along_g, along_f)``: the stretch along the geodesic leaves
    (identically ``k``) and along the hypercycle leaves
    (``(l_k/l) cosh(k d) / cosh(d)``).  Unlike :class:`DifferentialValue`,
    this measures image vectors with the metric at the image point.
    """
    band(spec.source).check(p.R, p.theta)
    d = _distance_from_short_side(np.asarray(p.theta, dtype=float))
    along_g = np.full(np.shape(d), spec.k)
    along_f = spec.exponent * np.cosh(spec.k * d) / np.cosh(d)
    return along_g, along_f


def band_grid(hexagon: SymmetricHexagon, grid: int):
    """``grid x grid`` polar sampling of the band, including both boundaries."""
    if grid < 2:
        raise DomainError("grid must be at least 2")
    C = band(hexagon)
    R = np.linspace(1.0, C.r_max, grid)
    theta = np.linspace(C.theta_min, np.pi / 2, grid)
    return np.meshgrid(R, theta, indexing="ij")


def diff_norm_grid(spec: StretchMapSpec, grid: int) -> np.ndarray:
    R, theta = band_grid(spec.source, grid)
    return differential(spec, PolarPoint(R, theta)).norm


def sup_diff_norm(spec: StretchMapSpec, grid: int = 200) -> float:
    return float(np.max(diff_norm_grid(spec, grid)))


# --- Monte Carlo Lipschitz harness ----------------------------------------

def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("STRETCHLAB_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_max(chunk_fn, n_items: int, seed: int, workers: int | None) -> float:
    # fixed chunking + per-chunk streams: the result does not depend on workers
    n_chunks = -(-n_items // CHUNK)
    sizes = [min(CHUNK, n_items - i * CHUNK) for i in range(n_chunks)]
    tasks = [(np.random.default_rng([seed, i]), m) for i, m in enumerate(sizes)]
    workers = workers or default_workers()
    if workers == 1 or n_chunks == 1:
        results = [chunk_fn(rng, m) for rng, m in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda t: chunk_fn(*t), tasks))
    return float(max(results))


def _sample_band(rng, m, hexagon: SymmetricHexagon):
    C = band(hexagon)
    n_biased = int(round(BIASED_FRACTION * m))
    th_lo = max(C.theta_min, np.pi / 2 - SHORT_SIDE_WINDOW)
    logR_max = 2 * hexagon.half_short

    logR_x = rng.uniform(0, logR_max, m)
    th_x = np.concatenate([rng.uniform(th_lo, np.pi / 2, n_biased),
                           rng.uniform(C.theta_min, np.pi / 2, m - n_biased)])
    # biased partners stay on nearby geodesic leaves so the pair direction
    # is mostly across the hypercycles
    logR_y = np.concatenate([
        np.clip(logR_x[:n_biased] + rng.uniform(-0.01, 0.01, n_biased), 0, logR_max),
        rng.uniform(0, logR_max, m - n_biased)])
    th_y = np.concatenate([rng.uniform(th_lo, np.pi / 2, n_biased),
                           rng.uniform(C.theta_min, np.pi / 2, m - n_biased)])
    return np.exp(logR_x), th_x, np.exp(logR_y), th_y


def _polar_uhp(R, th):
    return UhpPoint(R * np.cos(th), R * np.sin(th))


def _band_chunk(spec: StretchMapSpec):
    def run(rng, m):
        R1, t1, R2, t2 = _sample_band(rng, m, spec.source)
        dist = uhp_distance(_polar_uhp(R1, t1), _polar_uhp(R2, t2))
        bad = dist < 1e-12
        while np.any(bad):
            r1, a1, r2, a2 = _sample_band(rng, int(bad.sum()), spec.source)
            R1[bad], t1[bad], R2[bad], t2[bad] = r1, a1, r2, a2
            dist = uhp_distance(_polar_uhp(R1, t1), _polar_uhp(R2, t2))
            bad = dist < 1e-12
        img1 = band_map(spec, R1, t1)
        img2 = band_map(spec, R2, t2)
        return np.max(uhp_distance(_polar_uhp(*img1), _polar_uhp(*img2)) / dist)
    return run


def lipschitz_sample(spec: StretchMapSpec, n_pairs: int = 100_000, seed: int = 0,
                     workers: int | None = None) -> float:
    """Largest distance ratio ``d(h x, h y) / d(x, y)`` over random pairs in the band.

    70% of the pairs have both endpoints within 0.1 (in angle) of the short
    side, the rest are uniform in the polar chart.  Deterministic for a fixed
    seed, whatever the worker count.
    """
    if n_pairs < 1:
        raise DomainError("n_pairs must be positive")
    return _parallel_max(_band_chunk(spec), n_pairs, seed, workers)


def reverse_spec(spec: StretchMapSpec) -> StretchMapSpec:
    """The map ``g_k: H_k -> H`` obtained by exchanging long and short roles.

    Its source is the target with roles swapped, its stretch factor is the
    dilatation ``l / l_k``, and it contracts the new short edges by ``k``.
    """
    new_source = spec.target.swapped()
    d_k = spec.source.half_short / spec.target.half_short
    if d_k == 1.0:
        return StretchMapSpec(new_source, 1.0, new_source, 1.0)
    target = stretch(new_source, d_k)
    return StretchMapSpec(new_source, d_k, target, target.half_short / new_source.half_short)


# --- whole hexagon --------------------------------------------------------

def hexagon_map(spec: StretchMapSpec, u, v, tol: float = 1e-9):
    """Array form of :func:`eval_hexagon`; returns image disk coordinates."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    src = placement(spec.source)
    tgt = placement(spec.target)
    L, l = spec.source.half_long, spec.source.half_short
    l_k = spec.target.half_short
    if not np.all(src.contains(u, v, tol)):
        raise DomainError("point outside the source hexagon")
    if spec.k == 1.0:
        return u.copy(), v.copy()

    x = disk_to_hyperboloid(u, v)
    dists = src.short_axis_distances(u, v)
    nearest = np.argmin(dists, axis=0)
    in_band = np.min(dists, axis=0) <= L
    out_u = np.empty(np.shape(u))
    out_v = np.empty(np.shape(u))

    for j in range(3):
        sel = in_band & (nearest == j)
        if not np.any(sel):
            continue
        tau, dist = src.to_fermi(j, x[sel])
        # chart of the band: R = exp(tau + l), cos(theta) = tanh(dist)
        R2, th2 = band_map(spec, np.exp(tau + l), _angle_from_distance(np.maximum(dist, 0.0)))
        img = tgt.from_fermi(j, np.log(R2) - l_k, _distance_from_short_side(th2))
        out_u[sel], out_v[sel] = hyperboloid_to_disk(img)

    core = ~in_band
    if np.any(core):
        r, phi = disk_polar(u[core], v[core])
        rho = src.nonfoliated_radius(phi)
        r2, phi2 = _cone_boundary_image(spec, rho, phi)
        out_u[core], out_v[core] = disk_from_polar(r * r2 / rho, phi2)
    return out_u, out_v


def _cone_boundary_image(spec: StretchMapSpec, rho, phi):
    """Image of the non-foliated boundary point at ``(rho, phi)`` as ``(rho', phi')``."""
    src = placement(spec.source)
    tgt = placement(spec.target)
    l, l_k = spec.source.half_short, spec.target.half_short
    j = src.sector(phi)
    b = ray_point(rho, phi)
    tau = np.empty(np.shape(phi))
    for s in range(3):
        sel = j == s
        if np.any(sel):
            tau[sel], _ = src.to_fermi(s, b[sel])
    img = np.empty(np.shape(phi) + (3,))
    for s in range(3):
        sel = j == s
        if np.any(sel):
            img[sel] = tgt.from_fermi(s, spec.exponent * (tau[sel] + l) - l_k,
                                      np.full(int(sel.sum()), spec.target.half_long))
    return disk_polar(*hyperboloid_to_disk(img))


def eval_hexagon(spec: StretchMapSpec, p: DiskPoint) -> DiskPoint:
    """Apply ``h_k`` to point(s) of the canonically placed source hexagon.

    Band points go through the band chart of their nearest short edge.  A
    point of the non-foliated region at distance ``r`` from the center in
    direction ``phi`` goes to distance ``r * rho' / rho`` along the ray to the
    image ``b'`` of the boundary point ``b`` of that ray, where ``rho`` and
    ``rho'`` are the center distances of ``b`` and ``b'``.
    """
    u2, v2 = hexagon_map(spec, p.u, p.v)
    if np.ndim(u2) == 0:
        return DiskPoint(float(u2), float(v2))
    return DiskPoint(u2, v2)


def sample_hexagon(rng, m: int, hexagon: SymmetricHexagon):
    """``m`` points uniform (in disk coordinates) in the placed hexagon, by rejection."""
    P = placement(hexagon)
    lo = P.vertices.min(axis=0)
    hi = P.vertices.max(axis=0)
    out = np.empty((0, 2))
    while len(out) < m:
        cand = rng.uniform(lo, hi, size=(2 * m, 2))
        keep = P.contains(cand[:, 0], cand[:, 1], tol=0.0)
        out = np.concatenate([out, cand[keep]])
    return out[:m]


def _hexagon_chunk(spec: StretchMapSpec):
    def run(rng, m):
        a = sample_hexagon(rng, m, spec.source)
        b = sample_hexagon(rng, m, spec.source)
        # half of the pairs are local, to probe the differential
        half = m // 2
        b[:half] = a[:half] + rng.normal(scale=1e-3, size=(half, 2))
        inside = placement(spec.source).contains(b[:, 0], b[:, 1], tol=0.0)
        b[~inside] = sample_hexagon(rng, int((~inside).sum()), spec.source)
        dist = disk_distance(DiskPoint(a[:, 0], a[:, 1]), DiskPoint(b[:, 0], b[:, 1]))
        ok = dist > 1e-12
        fa = hexagon_map(spec, a[ok, 0], a[ok, 1])
        fb = hexagon_map(spec, b[ok, 0], b[ok, 1])
        img = disk_distance(DiskPoint(*fa), DiskPoint(*fb))
        return np.max(img / dist[ok])
    return run


def hexagon_lipschitz_sample(spec: StretchMapSpec, n_pairs: int = 100_000, seed: int = 0,
                             workers: int | None = None) -> float:
    """Largest distance ratio of :func:`eval_hexagon` over random pairs in the hexagon."""
    if n_pairs < 1:
        raise DomainError("n_pairs must be positive")
    return _parallel_max(_hexagon_chunk(spec), n_pairs, seed, workers)


# --- limits and reports ---------------------------------------------------

def horocyclic_limit_report(L: float, k_grid, n: int = 200) -> list[dict]:
    """Indicators of convergence to the ideal-triangle picture as ``k`` grows.

    Per ``k``: the innermost band angle ``theta_k`` (tends to 0), the
    curvature ``tanh(kL)`` of the innermost hypercycle (tends to 1), and the
    Euclidean Hausdorff distance in the disk between the non-foliated
    boundary samples at this ``k`` and at the previous one (NaN on the first
    row).
    """
    k_grid = [float(k) for k in k_grid]
    if any(b <= a for a, b in zip(k_grid, k_grid[1:])):
        raise DomainError("k_grid must be increasing")
    base = from_half_long(L)
    rows = []
    prev = None
    for k in k_grid:
        hk = stretch(base, k)
        pts = nonfoliated_region(hk, n).samples
        drift = float("nan")
        if prev is not None:
            drift = max(directed_hausdorff(pts, prev)[0], directed_hausdorff(prev, pts)[0])
        rows.append({"k": k, "theta_k": theta1(hk), "curvature": float(np.tanh(k * L)),
                     "drift": drift})
        prev = pts
    return rows


def verification_report(spec: StretchMapSpec, grid: int = 200, n_pairs: int = 100_000,
                        seed: int = 7, workers: int | None = None) -> dict:
    sup = sup_diff_norm(spec, grid)
    ratio = lipschitz_sample(spec, n_pairs, seed, workers)
    k = spec.k
    ok = abs(sup - k) <= 1e-12 * k and k * (1 - 0.01) <= ratio <= k * (1 + 1e-9)
    return {"spec": spec.to_dict(), "grid": grid, "sup_norm": sup,
            "sample_max_ratio": ratio, "pass": bool(ok)}


__all__ = [
    "StretchMapSpec", "DifferentialValue", "stretch_map", "band_map", "eval_band",
    "differential", "metric_stretch", "band_grid", "diff_norm_grid", "sup_diff_norm",
    "lipschitz_sample", "reverse_spec", "hexagon_map", "eval_hexagon",
    "sample_hexagon", "hexagon_lipschitz_sample", "horocyclic_limit_report",
    "verification_report",
]
