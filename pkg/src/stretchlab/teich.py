"""Fenchel-Nielsen coordinates and the bidirectional stretch lines.

A surface of type ``(g, b)`` is assembled from ``2g - 2 + b`` symmetric
pairs of pants glued without twist (feet of seams coincide).  Along the line
``t -> S_{e^t}`` every length parameter is multiplied by ``e^t`` and every
twist stays zero; the forward distance is ``t2 - t1`` and the backward one is
the log of the ratio of seam half-lengths.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .hexagon import from_half_long
from .hplane import DomainError


@dataclass(frozen=True)
class PantsDecompositionGraph:
    pants_count: int
    interior_edges: tuple[tuple[int, int], ...]
    boundary_legs: tuple[int, ...]

    def __post_init__(self):
        P = self.pants_count
        if P < 1:
            raise DomainError("need at least one pair of pants")
        deg = [0] * P
        for i, j in self.interior_edges:
            if not (0 <= i < P and 0 <= j < P):
                raise DomainError(f"edge ({i}, {j}) refers to a missing pair of pants")
            deg[i] += 1
            deg[j] += 1
        for i in self.boundary_legs:
            if not 0 <= i < P:
                raise DomainError(f"leg on missing pair of pants {i}")
            deg[i] += 1
        if any(d != 3 for d in deg):
            raise DomainError(f"every pair of pants needs 3 incidences, got {deg}")
        g, b = self.genus, self.boundary_count
        if g < 0 or 2 * g - 2 + b != P or 3 * g - 3 + b != len(self.interior_edges):
            raise DomainError("counts do not match any surface type (g, b)")
        if not _is_connected(P, self.interior_edges):
            raise DomainError("pants graph is disconnected")

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_legs)

    @property
    def genus(self) -> int:
        # P = 2g - 2 + b
        return (self.pants_count + 2 - self.boundary_count) // 2

    @property
    def n_lengths(self) -> int:
        return len(self.interior_edges) + len(self.boundary_legs)

    def to_dict(self) -> dict:
        return {"pants": self.pants_count,
                "edges": [list(e) for e in self.interior_edges],
                "legs": list(self.boundary_legs)}


def _is_connected(n: int, edges) -> bool:
    seen, stack = {0}, [0]
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def canonical_graph(g: int, b: int) -> PantsDecompositionGraph:
    """Deterministic pants graph of type ``(g, b)``.

    The pants form a chain ``0 - 1 - ... - (P-1)``.  The free slots left on
    the chain, taken in pants order, receive the ``b`` legs first; the last
    ``2g`` slots are paired consecutively into the remaining ``g`` edges,
    which are self-gluings whenever both slots sit on one pair of pants.
    """
    if g < 0 or b < 0:
        raise DomainError("g and b must be non-negative")
    P = 2 * g - 2 + b
    if P < 1:
        raise DomainError(f"type ({g}, {b}) has non-negative Euler characteristic")
    chain = [(i, i + 1) for i in range(P - 1)]
    used = [0] * P
    for i, j in chain:
        used[i] += 1
        used[j] += 1
    slots = [i for i in range(P) for _ in range(3 - used[i])]
    legs = tuple(slots[:b])
    rest = slots[b:]
    extra = [(rest[2 * i], rest[2 * i + 1]) for i in range(g)]
    return PantsDecompositionGraph(P, tuple(chain + extra), legs)


@dataclass(frozen=True)
class FNPoint:
    """Fenchel-Nielsen coordinates: one length per interior edge then per leg, one twist per edge.

    Twists are in length units with origin where the feet of the seams coincide.
    """

    graph: PantsDecompositionGraph
    lengths: tuple[float, ...]
    twists: tuple[float, ...]

    def __post_init__(self):
        if len(self.lengths) != self.graph.n_lengths:
            raise DomainError("one length per interior edge and per leg is required")
        if len(self.twists) != len(self.graph.interior_edges):
            raise DomainError("one twist per interior edge is required")
        if not all(np.isfinite(x) and x > 0 for x in self.lengths):
            raise DomainError("lengths must be positive and finite")

    def to_dict(self) -> dict:
        out = self.graph.to_dict()
        out["lengths"] = list(self.lengths)
        out["twists"] = list(self.twists)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "FNPoint":
        graph = PantsDecompositionGraph(int(data["pants"]),
                                        tuple(tuple(e) for e in data["edges"]),
                                        tuple(data["legs"]))
        return cls(graph, tuple(map(float, data["lengths"])), tuple(map(float, data["twists"])))


def build_symmetric_surface(graph: PantsDecompositionGraph, L: float) -> FNPoint:
    if not L > 0:
        raise DomainError("L must be positive")
    return FNPoint(graph, (4.0 * L,) * graph.n_lengths, (0.0,) * len(graph.interior_edges))


@dataclass(frozen=True)
class StretchLineSpec:
    graph: PantsDecompositionGraph
    base_L: float

    def __post_init__(self):
        if not (np.isfinite(self.base_L) and self.base_L > 0):
            raise DomainError("base_L must be positive and finite")

    @property
    def base(self) -> FNPoint:
        return build_symmetric_surface(self.graph, self.base_L)


def stretch_line(g: int, b: int, base_L: float) -> StretchLineSpec:
    return StretchLineSpec(canonical_graph(g, b), float(base_L))


def stretch_point(line: StretchLineSpec, t: float) -> FNPoint:
    return build_symmetric_surface(line.graph, line.base_L * np.exp(t))


def _half_short(line: StretchLineSpec, t: float) -> float:
    return from_half_long(line.base_L * np.exp(t)).half_short


def forward_distance(line: StretchLineSpec, t1: float, t2: float) -> float:
    if t2 < t1:
        raise DomainError("forward distance needs t1 <= t2; use backward_distance")
    return float(t2 - t1)


def backward_distance(line: StretchLineSpec, t1: float, t2: float) -> float:
    """Distance from ``S(t2)`` back to ``S(t1)``: ``log(l(t1) / l(t2))``."""
    if t2 < t1:
        raise DomainError("backward distance needs t1 <= t2")
    return float(np.log(_half_short(line, t1) / _half_short(line, t2)))


def asymmetry_report(base_L: float, t_grid) -> list[dict]:
    """Forward and backward distances from ``S(0)`` with the large-``t`` asymptote.

    Rows with ``t < 0`` carry signed values.  The asymptote is ``log(argsinh(1 / (2 sinh L))) + e^t L``.
    """
    t_grid = [float(t) for t in t_grid]
    if any(b <= a for a, b in zip(t_grid, t_grid[1:])):
        raise DomainError("t_grid must be increasing")
    line = StretchLineSpec(canonical_graph(0, 3), float(base_L))
    log_l = np.log(_half_short(line, 0.0))
    rows = []
    for t in t_grid:
        # signed for t < 0: forward = t, backward = log d_{e^t} < 0
        fwd = t
        bwd = float(log_l - np.log(_half_short(line, t)))
        asym = float(log_l + np.exp(t) * base_L)
        rows.append({"t": t, "forward": fwd, "backward": bwd, "asymptote": asym,
                     "ratio": bwd / asym})
    return rows


def report_csv(rows: list[dict], columns=("t", "forward", "backward", "asymptote", "ratio")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([f"{r[c]:.17g}" for c in columns])
    return buf.getvalue()


def forward_backward_counterexamples(base_L_grid, t_grid) -> list[tuple[float, float]]:
    """Pairs ``(base_L, t)``, ``t > 0``, where the backward distance falls below the forward one."""
    bad = []
    for L in base_L_grid:
        line = StretchLineSpec(canonical_graph(0, 3), float(L))
        for t in t_grid:
            if t > 0 and backward_distance(line, 0.0, t) < forward_distance(line, 0.0, t):
                bad.append((float(L), float(t)))
    return bad


@dataclass(frozen=True)
class MulticurveDescriptor:
    kind: str
    graph: PantsDecompositionGraph
    exact: bool
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in ("pants_decomposition", "seam_multicurve"):
            raise DomainError(f"unknown multicurve kind {self.kind!r}")


def maximal_lamination(line: StretchLineSpec, direction: str) -> MulticurveDescriptor:
    """Maximal maximally stretched lamination between two points of the line.

    Forward it is the pants decomposition itself.  Backward the seams are
    maximally stretched, so they are contained in it; equality is only known
    for the closed genus-2 surface, where the seams form a pants decomposition.
    """
    if direction == "forward":
        return MulticurveDescriptor("pants_decomposition", line.graph, True,
                                    "equal to the pants decomposition")
    if direction == "backward":
        exact = line.graph.genus == 2 and line.graph.boundary_count == 0
        note = "equal to the union of seams" if exact else "union of seams is contained in it"
        return MulticurveDescriptor("seam_multicurve", line.graph, exact, note)
    raise DomainError("direction must be 'forward' or 'backward'")
