"""Symmetric pairs of pants and length-ratio functionals on them.

A symmetric pair of pants is the double of a symmetric hexagon glued along
its short edges: each cuff (boundary geodesic) is made of two long edges and
has length ``4L``, each seam is a doubled short edge of length ``2l``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .hexagon import SymmetricHexagon, from_half_long, stretch
from .hplane import DomainError


@dataclass(frozen=True)
class SymmetricPants:
    cuff_length: float
    seam_length: float
    hexagon: SymmetricHexagon

    @property
    def cuffs(self) -> tuple[float, float, float]:
        return (self.cuff_length,) * 3

    @property
    def seams(self) -> tuple[float, float, float]:
        return (self.seam_length,) * 3

    def orthogeodesic_residual(self) -> float:
        """``cosh(seam) - cosh(cuff/2) / (cosh(cuff/2) - 1)``; vanishes for every valid pants."""
        c = np.cosh(self.cuff_length / 2)
        return float(np.cosh(self.seam_length) - c / (c - 1.0))

    def to_dict(self) -> dict:
        return {"cuffs": list(self.cuffs), "seams": list(self.seams)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class GeneralPants:
    cuffs: tuple[float, float, float]

    def __post_init__(self):
        if len(self.cuffs) != 3 or min(self.cuffs) <= 0:
            raise DomainError("a pair of pants needs three positive cuff lengths")


def double(hexagon: SymmetricHexagon) -> SymmetricPants:
    return SymmetricPants(4.0 * hexagon.half_long, 2.0 * hexagon.half_short, hexagon)


def symmetric_pants(L: float) -> SymmetricPants:
    return double(from_half_long(L))


def orthogeodesics(p: GeneralPants) -> tuple[float, float, float]:
    """Lengths of the three seams; entry ``i`` joins cuffs ``i+1`` and ``i+2`` (mod 3).

    Each seam is the side of the right-angled hexagon opposite the half-cuff
    it does not touch.
    """
    h = np.asarray(p.cuffs, dtype=float) / 2.0
    out = []
    for i in range(3):
        a, b, c = h[(i + 1) % 3], h[(i + 2) % 3], h[i]
        out.append(float(np.arccosh((np.cosh(c) + np.cosh(a) * np.cosh(b))
                                    / (np.sinh(a) * np.sinh(b)))))
    return tuple(out)


def stretch_pants(p: SymmetricPants, k: float) -> SymmetricPants:
    return double(stretch(p.hexagon, k))


def J_restricted(a: SymmetricPants, b: SymmetricPants) -> float:
    """``log`` of the largest length ratio over the cuffs and seams, ``a`` to ``b``.

    This is the asymmetric metric J restricted to the finite family that
    realizes it along the stretch line; off the line it is only a lower bound.
    """
    return float(np.log(max(b.cuff_length / a.cuff_length, b.seam_length / a.seam_length)))


def K_pants(x: GeneralPants, y: GeneralPants) -> float:
    """Log of the largest cuff-length ratio.  Can be negative and fails to separate points."""
    return float(np.log(max(ly / lx for lx, ly in zip(x.cuffs, y.cuffs))))


def K_symmetric(a: SymmetricPants, b: SymmetricPants) -> float:
    return K_pants(GeneralPants(a.cuffs), GeneralPants(b.cuffs))
