"""Symmetric right-angled hexagons and their hypercycle foliations.

A symmetric right-angled hexagon has three pairwise non-adjacent "long" edges
of length ``2L`` and three "short" edges of length ``2l``, with
``2 sinh(l) sinh(L) = 1``.  "Long" and "short" are role labels: the long edges
are the ones multiplied by ``k`` under :func:`stretch`, whichever is longer.

Each short edge carries a band of hypercycles (curves equidistant from that
edge) reaching out to distance ``L``; the three bands leave a central
non-foliated region bounded by three hypercycle arcs that touch at the
midpoints of the long edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from scipy.optimize import brentq

from .hplane import (
    DiskPoint,
    DomainError,
    disk_polar,
    disk_to_hyperboloid,
    hyperboloid_to_disk,
    minkowski_dot,
    ray_point,
)

RELATION_TOL = 1e-12
SECTOR = 2 * np.pi / 3


def _short_from_long(L):
    return np.arcsinh(1.0 / (2.0 * np.sinh(L)))


@dataclass(frozen=True)
class SymmetricHexagon:
    half_long: float
    half_short: float

    def __post_init__(self):
        L, l = self.half_long, self.half_short
        if not (np.isfinite(L) and np.isfinite(l)) or L <= 0 or l <= 0:
            raise DomainError(f"half-lengths must be positive and finite, got L={L}, l={l}")
        if abs(self.relation_residual) > RELATION_TOL:
            raise DomainError(f"2 sinh(l) sinh(L) = 1 violated (residual {self.relation_residual:.3e})")

    @property
    def L(self) -> float:
        return self.half_long

    @property
    def l(self) -> float:
        return self.half_short

    @property
    def relation_residual(self) -> float:
        return 2.0 * np.sinh(self.half_short) * np.sinh(self.half_long) - 1.0

    def swapped(self) -> "SymmetricHexagon":
        """The same hexagon with the long and short roles exchanged."""
        return SymmetricHexagon(self.half_short, self.half_long)

    def to_dict(self) -> dict:
        return {"L": self.half_long, "l": self.half_short}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SymmetricHexagon":
        return cls(float(data["L"]), float(data["l"]))


def from_half_long(L: float) -> SymmetricHexagon:
    L = float(L)
    if not np.isfinite(L) or L <= 0:
        raise DomainError(f"half-long length must be positive and finite, got {L}")
    return SymmetricHexagon(L, float(_short_from_long(L)))


def stretch(hexagon: SymmetricHexagon, k: float) -> SymmetricHexagon:
    """Multiply the long edges by ``k``; the short edges follow from the relation."""
    if not np.isfinite(k) or k <= 0:
        raise DomainError(f"stretch factor must be positive, got {k}")
    if k == 1:
        return hexagon
    return from_half_long(k * hexagon.half_long)


def dilatation(hexagon: SymmetricHexagon, k: float) -> float:
    """Ratio ``l / l_k`` by which the short edges shrink under a ``k``-stretch.

    This is the Lipschitz constant of the reverse map ``H_k -> H``.
    """
    if k < 1:
        raise DomainError(f"dilatation is defined for k >= 1, got {k}")
    return hexagon.half_short / stretch(hexagon, k).half_short


def theta1(hexagon: SymmetricHexagon) -> float:
    # cos(theta1) = tanh(L), written so it stays accurate as L grows
    return float(np.arctan2(1.0, np.sinh(hexagon.half_long)))


@dataclass(frozen=True)
class FoliatedBand:
    """The polar rectangle ``1 <= R <= r_max, theta_min <= theta <= pi/2``.

    Leaves ``theta = const`` are hypercycles (the foliation F), leaves
    ``R = const`` are geodesic arcs of length ``half_long`` (the foliation G).
    The short side is ``theta = pi/2``.
    """

    r_max: float
    theta_min: float
    half_short: float
    half_long: float

    def contains(self, R, theta, tol: float = 1e-12):
        R = np.asarray(R)
        theta = np.asarray(theta)
        return ((R >= 1 - tol) & (R <= self.r_max * (1 + tol))
                & (theta >= self.theta_min - tol) & (theta <= np.pi / 2 + tol))

    def check(self, R, theta, tol: float = 1e-12):
        R = np.asarray(R)
        theta = np.asarray(theta)
        if np.any(R < 1 - tol):
            raise DomainError("point below the band: R < 1")
        if np.any(R > self.r_max * (1 + tol)):
            raise DomainError("point above the band: R > exp(2l)")
        if np.any(theta < self.theta_min - tol):
            raise DomainError("point beyond the innermost hypercycle: theta < theta1")
        if np.any(theta > np.pi / 2 + tol):
            raise DomainError("point past the short side: theta > pi/2")

    def f_leaf_length(self, theta):
        """Length of the hypercycle leaf at angle ``theta``; ``2l`` on the short side."""
        return 2.0 * self.half_short / np.sin(theta)

    def g_leaf_length(self) -> float:
        return self.half_long

    def area(self) -> float:
        # integral of dR dtheta / (R sin^2 theta) over the band
        return 2.0 * self.half_short * np.cos(self.theta_min) / np.sin(self.theta_min)


def band(hexagon: SymmetricHexagon) -> FoliatedBand:
    return FoliatedBand(
        r_max=float(np.exp(2 * hexagon.half_short)),
        theta_min=theta1(hexagon),
        half_short=hexagon.half_short,
        half_long=hexagon.half_long,
    )


@dataclass(frozen=True)
class RightHexagonSides:
    a: float
    b: float
    c: float
    a_opp: float
    b_opp: float
    c_opp: float

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.a_opp, self.b_opp, self.c_opp) <= 0:
            raise DomainError("right hexagon sides must be positive")


def _opposite(a, b, c):
    return np.arccosh((np.cosh(c) + np.cosh(a) * np.cosh(b)) / (np.sinh(a) * np.sinh(b)))


def solve_right_hexagon(a: float, b: float, c: float) -> RightHexagonSides:
    """Right-angled hexagon with alternating sides ``a, b, c``.

    ``c_opp`` is the side between ``a`` and ``b``, and so on cyclically.
    """
    if min(a, b, c) <= 0:
        raise DomainError("alternating sides must be positive")
    return RightHexagonSides(
        a, b, c,
        a_opp=float(_opposite(b, c, a)),
        b_opp=float(_opposite(c, a, b)),
        c_opp=float(_opposite(a, b, c)),
    )


class HexagonPlacement:
    """Canonical position of a hexagon in the Poincare disk.

    The center of threefold symmetry is the origin and short edge ``j`` is
    perpendicular to the ray of angle ``2 pi j / 3``.  Around short edge ``j``
    we use Fermi coordinates ``(tau, dist)``: ``tau`` is arc length along the
    edge's geodesic measured from the edge midpoint (counterclockwise
    positive) and ``dist`` is distance from that geodesic toward the center.
    """

    def __init__(self, hexagon: SymmetricHexagon):
        self.hexagon = hexagon
        self.alphas = SECTOR * np.arange(3)
        self.center_to_short = _solve_center_to_short(hexagon.half_long)
        s = self.center_to_short
        ca, sa = np.cos(self.alphas), np.sin(self.alphas)
        self.feet = ray_point(s, self.alphas)
        self.normals = np.stack([np.full(3, np.sinh(s)), np.cosh(s) * ca, np.cosh(s) * sa], axis=-1)
        self.tangents = np.stack([np.zeros(3), -sa, ca], axis=-1)

    @cached_property
    def vertices_hyperboloid(self):
        """Six vertices, counterclockwise, starting with the lower end of short edge 0."""
        out = []
        for j in range(3):
            nxt = (j + 1) % 3
            out.append(_perpendicular_foot(self.normals[j], self.normals[j - 1]))
            out.append(_perpendicular_foot(self.normals[j], self.normals[nxt]))
        return np.array(out)

    @cached_property
    def vertices(self) -> np.ndarray:
        u, v = hyperboloid_to_disk(self.vertices_hyperboloid)
        return np.stack([u, v], axis=-1)

    @cached_property
    def long_midpoints(self) -> np.ndarray:
        """Midpoint of the long edge between short edges ``j`` and ``j+1`` (disk coords)."""
        V = self.vertices_hyperboloid
        mids = []
        for j in range(3):
            m = V[2 * j + 1] + V[(2 * j + 2) % 6]
            mids.append(m / np.sqrt(-minkowski_dot(m, m)))
        u, v = hyperboloid_to_disk(np.array(mids))
        return np.stack([u, v], axis=-1)

    @cached_property
    def center_to_long(self) -> float:
        r, _ = disk_polar(*self.long_midpoints[0])
        return float(r)

    @cached_property
    def long_normals(self) -> np.ndarray:
        t = self.center_to_long
        beta = self.alphas + np.pi / 3
        return np.stack([np.full(3, np.sinh(t)), np.cosh(t) * np.cos(beta), np.cosh(t) * np.sin(beta)], axis=-1)

    # --- Fermi charts -----------------------------------------------------

    def to_fermi(self, j: int, x):
        """Hyperboloid point(s) -> ``(tau, dist)`` relative to short edge ``j``."""
        x0, xe, xp = self._rotated(j, x)
        s = self.center_to_short
        sinh_dist = x0 * np.sinh(s) - xe * np.cosh(s)
        dist = np.arcsinh(sinh_dist)
        return np.arcsinh(xp / np.sqrt(1.0 + sinh_dist * sinh_dist)), dist

    def from_fermi(self, j: int, tau, dist):
        # cosh(d) (cosh(tau) f + sinh(tau) t) - sinh(d) n, expanded in the frame
        # (center, ray j, perpendicular) so that nothing of size e^{2s} cancels
        tau = np.asarray(tau, dtype=float)
        dist = np.asarray(dist, dtype=float)
        s = self.center_to_short
        ch = np.cosh(dist)
        bump = 2.0 * np.sinh(tau / 2) ** 2
        x0 = ch * np.cosh(s) * bump + np.cosh(s - dist)
        xe = ch * np.sinh(s) * bump + np.sinh(s - dist)
        xp = ch * np.sinh(tau)
        a = self.alphas[j]
        ca, sa = np.cos(a), np.sin(a)
        return np.stack(np.broadcast_arrays(x0, xe * ca - xp * sa, xe * sa + xp * ca), axis=-1)

    def _rotated(self, j: int, x):
        x = np.asarray(x, dtype=float)
        a = self.alphas[j]
        ca, sa = np.cos(a), np.sin(a)
        return x[..., 0], x[..., 1] * ca + x[..., 2] * sa, -x[..., 1] * sa + x[..., 2] * ca

    def short_axis_distances(self, u, v):
        """Signed distances (inward positive) from ``(u, v)`` to the three short-edge geodesics.

        Shape ``(3,) + shape(u)``.
        """
        x = disk_to_hyperboloid(u, v)
        return np.stack([-np.arcsinh(minkowski_dot(x, self.normals[j])) for j in range(3)])

    def contains(self, u, v, tol: float = 1e-12):
        x = disk_to_hyperboloid(u, v)
        inside = np.ones(np.shape(x)[:-1], dtype=bool)
        for n in (*self.normals, *self.long_normals):
            inside &= minkowski_dot(x, n) <= tol
        return inside

    def sector(self, phi):
        """Index of the short edge whose sector contains direction ``phi``."""
        return np.mod(np.rint(np.asarray(phi) / SECTOR), 3).astype(int)

    def nonfoliated_radius(self, phi):
        """Distance from the center to the non-foliated boundary in direction ``phi``.

        Solves ``<ray(r), n_j> = -sinh L`` for the smallest root; with
        ``u = e^r`` this is a quadratic whose stable root is
        ``(A + B) / (C + sqrt(C^2 + B^2 - A^2))``.  Since
        ``cosh^2 s = 4 cosh^2 L / 3`` the discriminant factors as
        ``cosh^2 s (cos delta - 1/2)(cos delta + 1/2)``, which stays accurate
        near the tangency points where it vanishes.
        """
        phi = np.asarray(phi, dtype=float)
        j = self.sector(phi)
        delta = phi - self.alphas[j]
        s = self.center_to_short
        A = np.sinh(s)
        B = np.cosh(s) * np.cos(delta)
        C = np.sinh(self.hexagon.half_long)
        # cos(delta) - cos(pi/3) without cancellation
        gap = 2.0 * np.sin((np.pi / 3 + delta) / 2) * np.sin((np.pi / 3 - delta) / 2)
        disc = np.cosh(s) * np.sqrt(np.maximum(gap * (np.cos(delta) + 0.5), 0.0))
        return np.log((A + B) / (C + disc))


def _perpendicular_foot(n1, n2):
    """Foot on geodesic ``n1`` of the common perpendicular with geodesic ``n2``."""
    c = minkowski_dot(n1, n2)
    x = (n2 - c * n1) / np.sqrt(c * c - 1.0)
    return x if x[0] > 0 else -x


def _short_geodesic_gap(s, L):
    # the unit normal of a short-edge geodesic is the ray tangent at its foot
    a = SECTOR * np.arange(2)
    normals = np.stack([np.full(2, np.sinh(s)), np.cosh(s) * np.cos(a), np.cosh(s) * np.sin(a)], axis=-1)
    c = abs(minkowski_dot(normals[0], normals[1]))
    return np.arccosh(max(c, 1.0)) - 2.0 * L


def _solve_center_to_short(L: float) -> float:
    hi = 1.0
    while _short_geodesic_gap(hi, L) <= 0:
        hi *= 2.0
    return brentq(_short_geodesic_gap, 0.0, hi, args=(L,), xtol=1e-15, rtol=4 * np.finfo(float).eps)


@lru_cache(maxsize=256)
def placement(hexagon: SymmetricHexagon) -> HexagonPlacement:
    return HexagonPlacement(hexagon)


def canonical_disk_embedding(hexagon: SymmetricHexagon) -> tuple[DiskPoint, ...]:
    V = placement(hexagon).vertices
    return tuple(DiskPoint(float(u), float(v)) for u, v in V)


@dataclass(frozen=True, eq=False)
class NonFoliatedRegion:
    """Central region of the hypercycle foliation.

    ``tangency_points`` has shape ``(3, 2)`` (long-edge midpoints) and
    ``arc_samples`` shape ``(3, n, 2)``: arc ``j`` runs at distance ``L``
    from short edge ``j`` between two consecutive tangency points.
    """

    hexagon: SymmetricHexagon
    tangency_points: np.ndarray
    arc_samples: np.ndarray

    @property
    def samples(self) -> np.ndarray:
        return self.arc_samples.reshape(-1, 2)


def nonfoliated_region(hexagon: SymmetricHexagon, n: int = 64) -> NonFoliatedRegion:
    if n < 3:
        raise DomainError("need at least 3 samples per arc")
    P = placement(hexagon)
    tau = np.linspace(-hexagon.half_short, hexagon.half_short, n)
    arcs = []
    for j in range(3):
        u, v = hyperboloid_to_disk(P.from_fermi(j, tau, np.full(n, hexagon.half_long)))
        arcs.append(np.stack([u, v], axis=-1))
    return NonFoliatedRegion(hexagon, P.long_midpoints.copy(), np.array(arcs))


def nonfoliated_contains(region: NonFoliatedRegion, p: DiskPoint, margin: float = 1e-9):
    """Strictly inside: farther than ``L + margin`` from every short-edge axis, and in the hexagon."""
    P = placement(region.hexagon)
    d = P.short_axis_distances(p.u, p.v)
    far = np.all(d > region.hexagon.half_long + margin, axis=0)
    return far & P.contains(p.u, p.v)
