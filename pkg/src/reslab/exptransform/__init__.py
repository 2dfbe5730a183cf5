"""Exponential transform of plane domains: quadrature, closed forms for
quadrature domains, pushforward under rational maps and the boundary curve."""
from .closed import (
    HermitianRationalKernel,
    disk_kernel,
    exp_transform_disk,
    exp_transform_explicit,
    exp_transform_polydet,
    exp_transform_qd,
    polydet_matrix,
    pushforward_transform,
    reflect,
)
from .quadrature import (
    MomentReport,
    QuadratureError,
    cauchy_transform,
    exp_transform_numeric,
    extended_exp_transform,
    moment_matrix,
    recode_moments,
)
from .regions import (
    Disk,
    MapImage,
    NotUnivalentError,
    Polygon,
    RegionError,
    UnivalenceCertificate,
    Union,
    certify_univalent,
    region_from_json,
)
from .schwarz import boundary_contours, boundary_svg, curve_residual, schwarz_curve

__all__ = [
    "HermitianRationalKernel",
    "disk_kernel",
    "exp_transform_disk",
    "exp_transform_explicit",
    "exp_transform_polydet",
    "exp_transform_qd",
    "polydet_matrix",
    "pushforward_transform",
    "reflect",
    "MomentReport",
    "QuadratureError",
    "cauchy_transform",
    "exp_transform_numeric",
    "extended_exp_transform",
    "moment_matrix",
    "recode_moments",
    "Disk",
    "MapImage",
    "NotUnivalentError",
    "Polygon",
    "RegionError",
    "UnivalenceCertificate",
    "Union",
    "certify_univalent",
    "region_from_json",
    "boundary_contours",
    "boundary_svg",
    "curve_residual",
    "schwarz_curve",
]
