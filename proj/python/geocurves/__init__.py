"""Bezier, B-spline and centroid curves in geodesic spaces."""

from ._core import (
    DomainError,
    KarcherSolution,
    SolverError,
    Space,
    SpacePoint,
    SphereMidpointReport,
    Spline,
    TangentVector,
    ValidationError,
    aitken_neville,
    bernstein,
    bernstein_row,
    casteljau_lower_bounds,
    centroid_curve,
    closed_spline,
    condition1_defect,
    de_casteljau,
    distance_weights,
    e3,
    e3_pose,
    e3_rotation,
    e3_translation,
    endpoint_tangent_check,
    euclidean,
    karcher_mean,
    manhattan,
    paris,
    rational_de_casteljau,
    sample_centroid,
    segment_median,
    sphere,
    sphere_counterexample,
    spd2,
    spd2_matrix,
    spd2_point,
    spline,
    split,
    stagewise_energies,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
