"""Frenet apparatus of slant and Legendre null curves on Sasaki-like
almost contact B-metric 3-manifolds."""

from nullcurve._core import (
    Curve,
    LieFrame,
    NullCurveError,
    NullFrame,
    Structure,
    TangentSpec,
    ad_matrix,
    adjoint_curve,
    classify,
    connection_coefficients,
    curve,
    curve_from_csv,
    frame_F,
    frame_Fbar,
    group_exp,
    helix_tangent,
    lie_frame,
    nonnull_apparatus,
    slant_data,
    slant_null_tangent,
    structure,
    verify_structure,
)

__all__ = [
    "Curve",
    "LieFrame",
    "NullCurveError",
    "NullFrame",
    "Structure",
    "TangentSpec",
    "ad_matrix",
    "adjoint_curve",
    "classify",
    "connection_coefficients",
    "curve",
    "curve_from_csv",
    "frame_F",
    "frame_Fbar",
    "group_exp",
    "helix_tangent",
    "lie_frame",
    "nonnull_apparatus",
    "slant_data",
    "slant_null_tangent",
    "structure",
    "verify_structure",
]

__version__ = "0.1.0"
