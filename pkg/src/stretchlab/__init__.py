"""Stretch maps between symmetric right-angled hexagons and the stretch lines they generate."""

from .hexagon import (
    FoliatedBand,
    NonFoliatedRegion,
    SymmetricHexagon,
    band,
    canonical_disk_embedding,
    dilatation,
    from_half_long,
    nonfoliated_contains,
    nonfoliated_region,
    solve_right_hexagon,
    stretch,
    theta1,
)
from .hplane import (
    DiskPoint,
    DomainError,
    PolarPoint,
    UhpPoint,
    angle_to_distance,
    disk_distance,
    distance_to_angle,
    hypercycle_curvature,
    uhp_distance,
)
from .pants import GeneralPants, J_restricted, K_pants, SymmetricPants, double, orthogeodesics, stretch_pants
from .stretchmap import (
    StretchMapSpec,
    differential,
    eval_band,
    eval_hexagon,
    hexagon_lipschitz_sample,
    lipschitz_sample,
    reverse_spec,
    stretch_map,
    sup_diff_norm,
)
from .teich import (
    FNPoint,
    PantsDecompositionGraph,
    asymmetry_report,
    backward_distance,
    canonical_graph,
    forward_distance,
    stretch_line,
    stretch_point,
)

__version__ = "0.1.0"
