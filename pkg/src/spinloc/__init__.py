"""Exact localization of the equivariant A-hat genus for circle actions
with isolated fixed points, plus the weight-sum spin obstruction test."""

__version__ = "0.1.0"

from .fixedpoints import (
    FixedPoint,
    FixedPointData,
    LinearAction,
    cp_standard_action,
    cp_weight_sum_formula,
    fixed_point_data,
    parse_fixed_point_data,
    serialize_fixed_point_data,
    weight_sum,
)
from .localization import (
    CrossValidationReport,
    ObstructionReport,
    VanishingReport,
    Verdict,
    ahat_equivariant_series,
    cross_validate,
    default_order,
    is_cpn_spin,
    spin_obstruction_check,
    verify_vanishing,
)
from .series import TruncatedSeries, geometric

__all__ = [
    "CrossValidationReport",
    "FixedPoint",
    "FixedPointData",
    "LinearAction",
    "ObstructionReport",
    "TruncatedSeries",
    "VanishingReport",
    "Verdict",
    "ahat_equivariant_series",
    "cp_standard_action",
    "cp_weight_sum_formula",
    "cross_validate",
    "default_order",
    "fixed_point_data",
    "geometric",
    "is_cpn_spin",
    "parse_fixed_point_data",
    "serialize_fixed_point_data",
    "spin_obstruction_check",
    "verify_vanishing",
    "weight_sum",
]
