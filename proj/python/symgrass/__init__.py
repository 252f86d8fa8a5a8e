"""Symplectic Grassmann codes over small finite fields."""

from ._core import (
    BudgetExceeded,
    LinearCode,
    build_code,
    code_from_generator,
    code_params,
    count_isotropic,
    dimension,
    dmin_line,
    eta_max,
    gaussian_binomial,
    grassmann_bound_line,
    length,
    min_distance,
    plucker_points,
    pz_upper,
    random_eta,
    sweep_cost,
    w22_table,
    w33_table,
    weight_enumerator,
    worst_case_eta,
)

__all__ = [
    "BudgetExceeded",
    "LinearCode",
    "build_code",
    "code_from_generator",
    "code_params",
    "count_isotropic",
    "dimension",
    "dmin_line",
    "eta_max",
    "gaussian_binomial",
    "grassmann_bound_line",
    "length",
    "min_distance",
    "plucker_points",
    "pz_upper",
    "random_eta",
    "sweep_cost",
    "w22_table",
    "w33_table",
    "weight_enumerator",
    "worst_case_eta",
]
