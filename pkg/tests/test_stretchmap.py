import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stretchlab.hexagon import band, dilatation, from_half_long, nonfoliated_region, placement, stretch, theta1
from stretchlab.hplane import DiskPoint, DomainError, PolarPoint, UhpPoint, disk_distance, polar_to_uhp, uhp_distance
from stretchlab.stretchmap import (
    StretchMapSpec,
    band_grid,
    band_map,
    diff_norm_grid,
    differential,
    eval_band,
    eval_hexagon,
    hexagon_lipschitz_sample,
    hexagon_map,
    horocyclic_limit_report,
    lipschitz_sample,
    metric_stretch,
    reverse_spec,
    sample_hexagon,
    stretch_map,
    sup_diff_norm,
    verification_report,
)

L_ARSINH1 = float(np.arcsinh(1.0))
LS = [0.3, 0.881374, 2.0]
KS = [1.0, 1.5, 2.0, 5.0]
CASES = [(L, k) for L in LS for k in KS]


def _pt(R, theta):
    return polar_to_uhp(PolarPoint(R, theta))


# --- spec ------------------------------------------------------------------------

def test_spec_fields():
    H = from_half_long(L_ARSINH1)
    spec = stretch_map(H, 2.0)
    assert spec.target == stretch(H, 2.0)
    assert spec.exponent == pytest.approx(spec.target.l / H.l, rel=1e-15)
    assert spec.to_dict()["k"] == 2.0
    with pytest.raises(DomainError):
        StretchMapSpec(H, 2.0, stretch(H, 3.0), 1.0)
    with pytest.raises(DomainError):
        stretch_map(H, -1.0)


def test_contraction_goes_through_reverse():
    H = from_half_long(L_ARSINH1)
    spec = stretch_map(H, 0.5)
    Hh = stretch(H, 0.5)
    # the reverse of the factor-2 stretch of H/2, read with long and short exchanged
    assert spec.source == H.swapped()
    assert spec.k == pytest.approx(dilatation(Hh, 2.0), rel=1e-14)
    assert spec.target.L == pytest.approx(Hh.l, rel=1e-12)
    assert spec.target.l == pytest.approx(Hh.L, rel=1e-10)


# --- band map ---------------------------------------------------------------------

@pytest.mark.parametrize("L", LS)
def test_identity_at_k1(L):
    spec = stretch_map(from_half_long(L), 1.0)
    R, th = band_grid(spec.source, 30)
    R2, th2 = band_map(spec, R, th)
    np.testing.assert_allclose(R2, R, rtol=1e-15)
    np.testing.assert_allclose(th2, th, rtol=1e-14)


@pytest.mark.parametrize("L, k", CASES)
def test_band_onto_band(L, k):
    spec = stretch_map(from_half_long(L), k)
    src, tgt = band(spec.source), band(spec.target)
    # corners go to corners
    img = eval_band(spec, PolarPoint(src.r_max, src.theta_min))
    assert img.R == pytest.approx(tgt.r_max, rel=1e-13)
    assert img.theta == pytest.approx(tgt.theta_min, rel=1e-12)
    img = eval_band(spec, PolarPoint(1.0, np.pi / 2))
    assert img.R == 1.0 and img.theta == pytest.approx(np.pi / 2, abs=1e-15)
    R, th = band_grid(spec.source, 40)
    R2, th2 = band_map(spec, R, th)
    assert np.all(tgt.contains(R2, th2))


@pytest.mark.parametrize("L, k", CASES)
def test_side_ratios(L, k):
    spec = stretch_map(from_half_long(L), k)
    H = spec.source
    # the short side is scaled by l_k / l
    a, b = PolarPoint(1.0, np.pi / 2), PolarPoint(np.exp(2 * H.l), np.pi / 2)
    fa, fb = eval_band(spec, a), eval_band(spec, b)
    ratio = uhp_distance(polar_to_uhp(fa), polar_to_uhp(fb)) / uhp_distance(polar_to_uhp(a), polar_to_uhp(b))
    assert ratio == pytest.approx(spec.target.l / H.l, rel=1e-12)
    # geodesic leaves R = const are scaled by exactly k
    th = np.linspace(theta1(H), np.pi / 2, 7)
    for R in (1.0, np.exp(H.l)):
        p = _pt(np.full(7, R), th)
        f = eval_band(spec, PolarPoint(np.full(7, R), th))
        q = polar_to_uhp(f)
        d_src = uhp_distance(UhpPoint(p.x[0], p.y[0]), UhpPoint(p.x[1:], p.y[1:]))
        d_img = uhp_distance(UhpPoint(q.x[0], q.y[0]), UhpPoint(q.x[1:], q.y[1:]))
        np.testing.assert_allclose(d_img, k * d_src, rtol=1e-10)


def test_eval_band_domain():
    spec = stretch_map(from_half_long(L_ARSINH1), 2.0)
    with pytest.raises(DomainError, match="theta < theta1"):
        eval_band(spec, PolarPoint(1.2, 0.5))
    with pytest.raises(DomainError, match="R < 1"):
        eval_band(spec, PolarPoint(0.9, 1.0))


@settings(max_examples=60, deadline=None)
@given(st.floats(0.1, 3), st.floats(1, 3), st.floats(1, 3), st.floats(0, 1), st.floats(0, 1))
def test_composition(L, k1, k2, a, b):
    H = from_half_long(L)
    first = stretch_map(H, k1)
    second = stretch_map(first.target, k2)
    both = stretch_map(H, k1 * k2)
    B = band(H)
    R = np.exp(a * np.log(B.r_max))
    th = B.theta_min + b * (np.pi / 2 - B.theta_min)
    R1, th1 = band_map(first, R, th)
    R2, th2 = band_map(second, R1, th1)
    R3, th3 = band_map(both, R, th)
    assert R2 == pytest.approx(R3, rel=1e-11)
    assert th2 == pytest.approx(th3, rel=1e-10, abs=1e-13)


# --- differential --------------------------------------------------------------------

@pytest.mark.parametrize("L, k", CASES)
def test_partials_against_finite_differences(L, k):
    spec = stretch_map(from_half_long(L), k)
    R, th = band_grid(spec.source, 50)
    dv = differential(spec, PolarPoint(R, th))
    h = 1e-6
    fd_R = (band_map(spec, R + h, th)[0] - band_map(spec, R - h, th)[0]) / (2 * h)
    fd_T = (band_map(spec, R, th + h)[1] - band_map(spec, R, th - h)[1]) / (2 * h)
    np.testing.assert_allclose(fd_R, dv.dR, rtol=1e-6)
    np.testing.assert_allclose(fd_T, dv.dTheta, rtol=1e-6)
    # mixed partials vanish
    mixed_R = (band_map(spec, R, th + h)[0] - band_map(spec, R, th - h)[0]) / (2 * h)
    mixed_T = (band_map(spec, R + h, th)[1] - band_map(spec, R - h, th)[1]) / (2 * h)
    assert np.max(np.abs(mixed_R)) < 1e-8 and np.max(np.abs(mixed_T)) < 1e-8


@pytest.mark.parametrize("L, k", CASES)
def test_sup_norm_is_k(L, k):
    spec = stretch_map(from_half_long(L), k)
    norms = diff_norm_grid(spec, 200)
    assert abs(sup_diff_norm(spec, 200) - k) <= 1e-12 * k
    # attained on the short side theta = pi/2 (last column)
    np.testing.assert_allclose(norms[:, -1], k, rtol=1e-12)
    if k > 1:
        assert np.all(norms[:, :-1] < k)
    else:
        assert np.all(norms <= 1 + 1e-15)


@pytest.mark.parametrize("L, k", [(0.3, 2.0), (L_ARSINH1, 1.5), (2.0, 5.0)])
def test_metric_stretch_by_finite_differences(L, k):
    spec = stretch_map(from_half_long(L), k)
    B = band(spec.source)
    rng = np.random.default_rng(5)
    R = np.exp(rng.uniform(0, np.log(B.r_max), 20))
    th = rng.uniform(B.theta_min, np.pi / 2, 20)
    g, f = metric_stretch(spec, PolarPoint(R, th))
    h = 1e-6

    def ratio(R2, th2):
        a, b = eval_band(spec, PolarPoint(R, th)), eval_band(spec, PolarPoint(R2, th2))
        return (uhp_distance(polar_to_uhp(a), polar_to_uhp(b))
                / uhp_distance(_pt(R, th), _pt(R2, th2)))

    np.testing.assert_allclose(ratio(R, np.maximum(th - h, B.theta_min)), g, rtol=1e-5)
    np.testing.assert_allclose(ratio(R * (1 + h), th), f, rtol=1e-5)
    assert np.all(f <= k + 1e-12)


# --- sampling ------------------------------------------------------------------------

@pytest.mark.parametrize("L, k", [(0.3, 1.5), (L_ARSINH1, 2.0), (2.0, 5.0)])
def test_lipschitz_sample_bracket(L, k):
    spec = stretch_map(from_half_long(L), k)
    r = lipschitz_sample(spec, 20_000, seed=7)
    assert k * (1 - 0.01) <= r <= k * (1 + 1e-9)


def test_lipschitz_sample_identity():
    spec = stretch_map(from_half_long(L_ARSINH1), 1.0)
    assert abs(lipschitz_sample(spec, 20_000, seed=1) - 1.0) < 1e-9


def test_sampling_independent_of_workers():
    spec = stretch_map(from_half_long(L_ARSINH1), 2.0)
    a = lipschitz_sample(spec, 30_000, seed=7, workers=1)
    b = lipschitz_sample(spec, 30_000, seed=7, workers=4)
    assert a == b
    assert lipschitz_sample(spec, 30_000, seed=8) != a
    h1 = hexagon_lipschitz_sample(spec, 10_000, seed=3, workers=1)
    h3 = hexagon_lipschitz_sample(spec, 10_000, seed=3, workers=3)
    assert h1 == h3


def test_sampling_domain():
    spec = stretch_map(from_half_long(1.0), 2.0)
    with pytest.raises(DomainError):
        lipschitz_sample(spec, 0)


def test_verification_report():
    spec = stretch_map(from_half_long(L_ARSINH1), 2.0)
    rep = verification_report(spec, grid=50, n_pairs=10_000, seed=7)
    assert rep["pass"] and rep["sup_norm"] == pytest.approx(2.0, rel=1e-12)
    assert set(rep) == {"spec", "grid", "sup_norm", "sample_max_ratio", "pass"}


# --- reverse map ---------------------------------------------------------------------

@pytest.mark.parametrize("L, k", CASES)
def test_reverse_spec(L, k):
    spec = stretch_map(from_half_long(L), k)
    rev = reverse_spec(spec)
    d_k = spec.source.l / spec.target.l
    assert rev.k == pytest.approx(d_k, rel=1e-14)
    assert abs(sup_diff_norm(rev, 200) - d_k) < 1e-10
    # reverse maps the swapped target onto the swapped source
    assert rev.target.L == pytest.approx(spec.source.l, rel=1e-12)
    assert rev.target.l == pytest.approx(spec.source.L, rel=1e-10)
    assert rev.exponent == pytest.approx(1 / k, rel=1e-12)


def test_reverse_spot_value():
    spec = stretch_map(from_half_long(L_ARSINH1), 2.0)
    d2 = np.arcsinh(0.5) / np.arcsinh(1 / (4 * np.sqrt(2)))
    assert reverse_spec(spec).k == pytest.approx(d2, rel=1e-14)
    assert d2 == pytest.approx(2.7362, abs=1e-4)


# --- whole hexagon -------------------------------------------------------------------

@pytest.mark.parametrize("k", [1.0, 1.5, 2.0, 5.0])
def test_hexagon_map_fixes_symmetric_points(k):
    spec = stretch_map(from_half_long(L_ARSINH1), k)
    c = eval_hexagon(spec, DiskPoint(0.0, 0.0))
    assert abs(c.u) < 1e-15 and abs(c.v) < 1e-15
    src, tgt = placement(spec.source), placement(spec.target)
    V = src.vertices * (1 - 1e-13)
    img = np.stack(hexagon_map(spec, V[:, 0], V[:, 1]), axis=-1)
    np.testing.assert_allclose(img, tgt.vertices, atol=1e-9)
    M = src.long_midpoints
    img = np.stack(hexagon_map(spec, M[:, 0], M[:, 1]), axis=-1)
    np.testing.assert_allclose(img, tgt.long_midpoints, atol=1e-9)


def test_hexagon_map_identity():
    spec = stretch_map(from_half_long(0.6), 1.0)
    rng = np.random.default_rng(0)
    pts = sample_hexagon(rng, 2000, spec.source)
    u, v = hexagon_map(spec, pts[:, 0], pts[:, 1])
    np.testing.assert_allclose(u, pts[:, 0], atol=1e-12)
    np.testing.assert_allclose(v, pts[:, 1], atol=1e-12)


@pytest.mark.parametrize("k", [1.5, 3.0])
def test_hexagon_map_scales_axis_distance_in_bands(k):
    spec = stretch_map(from_half_long(L_ARSINH1), k)
    src, tgt = placement(spec.source), placement(spec.target)
    pts = sample_hexagon(np.random.default_rng(1), 4000, spec.source)
    d = src.short_axis_distances(pts[:, 0], pts[:, 1])
    j = np.argmin(d, axis=0)
    sel = np.min(d, axis=0) < spec.source.L
    u, v = hexagon_map(spec, pts[sel, 0], pts[sel, 1])
    d2 = tgt.short_axis_distances(u, v)
    idx = np.arange(sel.sum())
    np.testing.assert_allclose(d2[j[sel], idx], k * d[:, sel][j[sel], idx], rtol=1e-9, atol=1e-12)


@pytest.mark.parametrize("k", [1.5, 2.0])
def test_hexagon_map_continuous_across_core_boundary(k):
    spec = stretch_map(from_half_long(L_ARSINH1), k)
    pts = nonfoliated_region(spec.source, 80).samples
    # push slightly in and out along the ray from the center
    outer, inner = pts * (1 + 1e-9), pts * (1 - 1e-9)
    a = hexagon_map(spec, outer[:, 0], outer[:, 1])
    b = hexagon_map(spec, inner[:, 0], inner[:, 1])
    gap = disk_distance(DiskPoint(*a), DiskPoint(*b))
    assert np.max(gap) < 1e-6
    # and the boundary lands on the target's boundary
    tgt = nonfoliated_region(spec.target, 80).samples
    img = np.stack(hexagon_map(spec, pts[:, 0], pts[:, 1]), axis=-1)
    np.testing.assert_allclose(img, tgt, atol=1e-8)


@pytest.mark.parametrize("k", [1.5, 2.0, 5.0])
def test_hexagon_lipschitz(k):
    spec = stretch_map(from_half_long(L_ARSINH1), k)
    r = hexagon_lipschitz_sample(spec, 20_000, seed=7)
    assert r <= k * (1 + 1e-6)
    assert r > 0.9 * k


def test_hexagon_map_domain():
    spec = stretch_map(from_half_long(L_ARSINH1), 2.0)
    with pytest.raises(DomainError):
        eval_hexagon(spec, DiskPoint(0.9, 0.0))


# --- horocyclic limit ----------------------------------------------------------------

def test_horocyclic_limit_report():
    L = 0.5
    ks = [1, 2, 4, 8, 16, 32]
    rows = horocyclic_limit_report(L, ks)
    theta = [r["theta_k"] for r in rows]
    curv = [r["curvature"] for r in rows]
    drift = [r["drift"] for r in rows]
    assert np.isnan(drift[0])
    assert np.all(np.diff(theta) < 0) and np.all(np.diff(curv) > 0)
    assert np.all(np.diff(drift[1:]) < 0)
    for r in rows:
        if r["k"] * L >= 7.3:
            assert 1 - r["curvature"] < 1e-6
    with pytest.raises(DomainError):
        horocyclic_limit_report(L, [2, 1])
