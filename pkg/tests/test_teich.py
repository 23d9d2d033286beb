import csv
import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from stretchlab.hexagon import from_half_long
from stretchlab.hplane import DomainError
from stretchlab.pants import J_restricted, double, stretch_pants
from stretchlab.teich import (
    FNPoint,
    PantsDecompositionGraph,
    asymmetry_report,
    backward_distance,
    build_symmetric_surface,
    canonical_graph,
    forward_backward_counterexamples,
    forward_distance,
    maximal_lamination,
    report_csv,
    stretch_line,
    stretch_point,
)

L_ARSINH1 = float(np.arcsinh(1.0))
TYPES = [(0, 3), (1, 1), (2, 0), (0, 4), (1, 2), (3, 0), (2, 3)]


def _connected(graph):
    parent = list(range(graph.pants_count))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in graph.interior_edges:
        parent[find(i)] = find(j)
    return len({find(i) for i in range(graph.pants_count)}) == 1


@pytest.mark.parametrize("g, b", TYPES)
def test_canonical_graph_counts(g, b):
    G = canonical_graph(g, b)
    assert G.pants_count == 2 * g - 2 + b
    assert len(G.interior_edges) == 3 * g - 3 + b
    assert G.boundary_count == b and G.genus == g
    assert G.n_lengths == 3 * g - 3 + 2 * b
    assert _connected(G)


def test_canonical_graph_examples():
    assert canonical_graph(0, 3).to_dict() == {"pants": 1, "edges": [], "legs": [0, 0, 0]}
    assert canonical_graph(1, 1).to_dict() == {"pants": 1, "edges": [[0, 0]], "legs": [0]}
    assert canonical_graph(2, 0).to_dict() == {"pants": 2, "edges": [[0, 1], [0, 0], [1, 1]], "legs": []}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_canonical_graph_property(g, b):
    if 2 * g - 2 + b < 1:
        with pytest.raises(DomainError):
            canonical_graph(g, b)
        return
    G = canonical_graph(g, b)
    assert (G.genus, G.boundary_count) == (g, b)
    assert _connected(G)


def test_graph_validation():
    with pytest.raises(DomainError):
        PantsDecompositionGraph(1, ((0, 0),), (0, 0))
    # two one-holed tori: the counts fit (1, 2) but the graph is disconnected
    with pytest.raises(DomainError, match="disconnected"):
        PantsDecompositionGraph(2, ((0, 0), (1, 1)), (0, 1))
    assert PantsDecompositionGraph(2, ((0, 1),), (0, 0, 1, 1)).genus == 0
    with pytest.raises(DomainError):
        canonical_graph(-1, 5)


@pytest.mark.parametrize("g, b", TYPES)
def test_stretch_point(g, b):
    line = stretch_line(g, b, L_ARSINH1)
    for t in (-0.5, 0.0, 1.2):
        S = stretch_point(line, t)
        np.testing.assert_allclose(S.lengths, 4 * L_ARSINH1 * np.exp(t), rtol=1e-15)
        assert all(x == 0.0 for x in S.twists)
    assert stretch_point(line, 0.0) == line.base


def test_fn_point_json_and_validation():
    S = build_symmetric_surface(canonical_graph(2, 0), 0.7)
    assert FNPoint.from_dict(S.to_dict()) == S
    with pytest.raises(DomainError):
        FNPoint(S.graph, S.lengths[:-1], S.twists)
    with pytest.raises(DomainError):
        build_symmetric_surface(S.graph, 0.0)


@pytest.mark.parametrize("g, b", [(0, 3), (1, 1), (2, 0)])
def test_distances_along_line(g, b):
    line = stretch_line(g, b, L_ARSINH1)
    rng = np.random.default_rng(9)
    for t1, t2, t3 in np.sort(rng.uniform(-1, 2, (40, 3)), axis=1):
        assert forward_distance(line, t1, t3) == t3 - t1
        total = backward_distance(line, t1, t3)
        assert abs(total - backward_distance(line, t1, t2) - backward_distance(line, t2, t3)) < 1e-12
    with pytest.raises(DomainError):
        forward_distance(line, 1.0, 0.0)
    with pytest.raises(DomainError):
        backward_distance(line, 1.0, 0.0)


def test_backward_is_log_dilatation():
    line = stretch_line(0, 3, L_ARSINH1)
    assert np.exp(backward_distance(line, 0.0, np.log(2))) == pytest.approx(2.7362, abs=1e-4)


@pytest.mark.parametrize("t", [0.25, 0.5, 1.0, 2.0])
def test_J_agrees_on_pants(t):
    line = stretch_line(0, 3, L_ARSINH1)
    P = double(from_half_long(L_ARSINH1))
    Pt = stretch_pants(P, np.exp(t))
    assert J_restricted(P, Pt) == pytest.approx(forward_distance(line, 0, t), abs=1e-12)
    assert J_restricted(Pt, P) == pytest.approx(backward_distance(line, 0, t), abs=1e-12)


@pytest.mark.parametrize("L", [0.3, L_ARSINH1, 2.0])
def test_asymmetry_asymptote(L):
    ts = np.linspace(0, np.log(12 / L), 60)
    rows = asymmetry_report(L, ts)
    assert rows[0]["forward"] == 0 and rows[0]["backward"] == 0
    for r in rows:
        x = np.exp(r["t"]) * L
        if x >= 4:
            assert abs(r["ratio"] - 1) < 1e-2
        if x >= 8:
            assert abs(r["ratio"] - 1) < 1e-4


def test_asymmetry_report_negative_t_is_signed():
    rows = asymmetry_report(L_ARSINH1, [-1.0, 0.0, 1.0])
    assert rows[0]["forward"] == -1.0 and rows[0]["backward"] < 0
    with pytest.raises(DomainError):
        asymmetry_report(L_ARSINH1, [1.0, 0.0])


def test_report_csv_round_trips_exactly():
    rows = asymmetry_report(0.37, np.linspace(0, 2, 9))
    text = report_csv(rows)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert list(parsed[0]) == ["t", "forward", "backward", "asymptote", "ratio"]
    for r, p in zip(rows, parsed):
        assert all(float(p[c]) == r[c] for c in p)


def test_forward_backward_threshold():
    """backward >= forward for all t > 0 exactly when x -> x * l(x) is non-increasing past L."""
    res = minimize_scalar(lambda x: -x * from_half_long(x).l, bounds=(0.1, 2.0), method="bounded",
                          options={"xatol": 1e-10})
    assert res.x == pytest.approx(np.arcsinh(1 / np.sqrt(2)), abs=1e-6)
    ts = np.linspace(0.01, 3, 60)
    assert forward_backward_counterexamples([0.66, L_ARSINH1, 1.5, 3.0], ts) == []
    bad = forward_backward_counterexamples([0.2, 0.5], ts)
    assert {L for L, _ in bad} == {0.2, 0.5}
    # failures are confined to small t
    assert max(t for L, t in bad if L == 0.5) < 1.0


@pytest.mark.parametrize("g, b, exact", [(2, 0, True), (0, 3, False), (1, 1, False), (3, 0, False)])
def test_maximal_lamination(g, b, exact):
    line = stretch_line(g, b, 1.0)
    fwd = maximal_lamination(line, "forward")
    assert fwd.kind == "pants_decomposition" and fwd.exact
    bwd = maximal_lamination(line, "backward")
    assert bwd.kind == "seam_multicurve" and bwd.exact is exact
    with pytest.raises(DomainError):
        maximal_lamination(line, "sideways")
