"""Models of the hyperbolic plane.

Points in the upper half-plane, polar coordinates about the origin of the
upper half-plane, the Poincare disk, and the hyperboloid (used internally for
Fermi coordinates around geodesics).  Every function is written with numpy
ufuncs, so point fields may be floats or equally-shaped arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _finite(*values) -> bool:
    return all(np.all(np.isfinite(v)) for v in values)


@dataclass(frozen=True)
class UhpPoint:
    x: float
    y: float

    def __post_init__(self):
        if not _finite(self.x, self.y):
            raise DomainError("non-finite upper half-plane coordinate")
        if not np.all(np.asarray(self.y) > 0):
            raise DomainError("upper half-plane point needs y > 0")

    @property
    def z(self):
        return np.asarray(self.x) + 1j * np.asarray(self.y)


@dataclass(frozen=True)
class PolarPoint:
    """``z = R exp(i theta)`` in the upper half-plane."""

    R: float
    theta: float

    def __post_init__(self):
        if not _finite(self.R, self.theta):
            raise DomainError("non-finite polar coordinate")
        if not np.all(np.asarray(self.R) > 0):
            raise DomainError("polar radius must be positive")
        th = np.asarray(self.theta)
        if not np.all((th > 0) & (th < np.pi)):
            raise DomainError("polar angle must lie in (0, pi)")


@dataclass(frozen=True)
class DiskPoint:
    u: float
    v: float

    def __post_init__(self):
        if not _finite(self.u, self.v):
            raise DomainError("non-finite disk coordinate")
        if not np.all(np.asarray(self.u) ** 2 + np.asarray(self.v) ** 2 < 1):
            raise DomainError("disk point must satisfy u^2 + v^2 < 1")

    @property
    def w(self):
        return np.asarray(self.u) + 1j * np.asarray(self.v)


def uhp_distance(p: UhpPoint, q: UhpPoint):
    # asinh form keeps full relative precision for nearby points
    chord = np.hypot(np.subtract(p.x, q.x), np.subtract(p.y, q.y))
    return 2.0 * np.arcsinh(chord / (2.0 * np.sqrt(np.multiply(p.y, q.y))))


def disk_distance(p: DiskPoint, q: DiskPoint):
    chord = np.hypot(np.subtract(p.u, q.u), np.subtract(p.v, q.v))
    denom = np.sqrt((1.0 - np.square(p.u) - np.square(p.v))
                    * (1.0 - np.square(q.u) - np.square(q.v)))
    return 2.0 * np.arcsinh(chord / denom)


def polar_to_uhp(p: PolarPoint) -> UhpPoint:
    return UhpPoint(p.R * np.cos(p.theta), p.R * np.sin(p.theta))


def uhp_to_polar(p: UhpPoint) -> PolarPoint:
    return PolarPoint(np.hypot(p.x, p.y), np.arctan2(p.y, p.x))


def angle_to_distance(theta1):
    """Distance from the imaginary axis to the ray of angle ``theta1``.

    The ray ``arg z = theta1`` is a hypercycle about the imaginary axis and
    ``cos(theta1) = tanh(distance)``.  Evaluated as ``asinh(cot theta1)``,
    which stays accurate near ``pi/2``.
    """
    th = np.asarray(theta1, dtype=float)
    if not _finite(th):
        raise DomainError("non-finite angle")
    if np.any(th <= 0):
        raise DomainError("theta1 <= 0 is at infinite distance")
    if np.any(th > np.pi / 2):
        raise DomainError("theta1 must lie in (0, pi/2]")
    out = np.arcsinh(np.cos(th) / np.sin(th))
    return float(out) if out.ndim == 0 else out


def distance_to_angle(d):
    """Inverse of :func:`angle_to_distance`: ``arccos(tanh d)``."""
    d = np.asarray(d, dtype=float)
    if np.any(d < 0) or not _finite(d):
        raise DomainError("distance must be finite and non-negative")
    out = np.arctan2(1.0, np.sinh(d))
    return float(out) if out.ndim == 0 else out


def hypercycle_curvature(d):
    """Geodesic curvature of the curve at constant distance ``d`` from a geodesic."""
    d = np.asarray(d, dtype=float)
    if np.any(d < 0):
        raise DomainError("distance must be non-negative")
    out = np.tanh(d)
    return float(out) if out.ndim == 0 else out


# Cayley normalization: i -> 0, the upward imaginary axis -> the positive v-axis.

def uhp_to_disk(p: UhpPoint) -> DiskPoint:
    z = p.z
    w = 1j * (z - 1j) / (z + 1j)
    return DiskPoint(w.real, w.imag)


def disk_to_uhp(p: DiskPoint) -> UhpPoint:
    q = -1j * p.w
    z = 1j * (1 + q) / (1 - q)
    return UhpPoint(z.real, z.imag)


# Hyperboloid model, signature (-, +, +); arrays carry the 3 coordinates on
# the last axis.

def minkowski_dot(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return -a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2]


def disk_to_hyperboloid(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    den = 1.0 - u * u - v * v
    return np.stack([(1.0 + u * u + v * v) / den, 2 * u / den, 2 * v / den], axis=-1)


def hyperboloid_to_disk(x):
    x = np.asarray(x)
    den = 1.0 + x[..., 0]
    return x[..., 1] / den, x[..., 2] / den


def ray_point(r, phi):
    """Hyperboloid point at distance ``r`` from the origin in direction ``phi``."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sr = np.sinh(r)
    return np.stack(np.broadcast_arrays(np.cosh(r), sr * np.cos(phi), sr * np.sin(phi)), axis=-1)


def disk_polar(u, v):
    """Hyperbolic distance to the disk center and direction angle."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    rho = np.hypot(u, v)
    return 2.0 * np.arctanh(rho), np.arctan2(v, u)


def disk_from_polar(r, phi):
    rho = np.tanh(np.asarray(r, dtype=float) / 2.0)
    return rho * np.cos(phi), rho * np.sin(phi)
