"""Numerical theta, mu, Mordell integral and Appell functions with identity checks."""

from .core import (
    DEFAULT_CONTEXT,
    ConeSpec,
    EvalContext,
    UpperHalfPoint,
    appell,
    bilateral_sum,
    mordell_h,
    mordell_h_with_error,
    mu,
    sqrt_minus_i_tau,
    theta,
)
from .identities import (
    GRID_TAUS,
    appell1_on_double,
    appell1_transformed,
    h_residual,
    mordell_bound,
    mordell_bound_real_form,
    mordell_term,
    partial_fraction_residual,
    qpoch_ratio,
    rank_eval_appell,
    residual_scan,
    theta_residual,
    transform_grid,
    transform_residual,
)

__all__ = [
    "DEFAULT_CONTEXT",
    "ConeSpec",
    "EvalContext",
    "GRID_TAUS",
    "UpperHalfPoint",
    "appell",
    "appell1_on_double",
    "appell1_transformed",
    "bilateral_sum",
    "h_residual",
    "mordell_bound",
    "mordell_bound_real_form",
    "mordell_h",
    "mordell_h_with_error",
    "mordell_term",
    "mu",
    "partial_fraction_residual",
    "qpoch_ratio",
    "rank_eval_appell",
    "residual_scan",
    "sqrt_minus_i_tau",
    "theta",
    "theta_residual",
    "transform_grid",
    "transform_residual",
]
