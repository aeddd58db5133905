"""Desk-scale verification suites: exact matrix logs, p-group central
series, digit scans, and generator relations."""

from .digits import DigitViolation, digit_lemma_scan, digits, rotated_value
from .pgroup import (
    DEFAULT_ALGEBRA_BOUND,
    DEFAULT_WORK_BOUND,
    PGroup,
    cyclic_module_is_free,
    nilpotency_index_by_enumeration,
    pgroup_nilpotency_index,
    power_sum_identity,
    scalar_power_sum,
)
from .relations import (
    addswap_linear,
    halving_homothety,
    relations_report,
    square_shear,
)
from .report import CheckRecord, Report
from .unipotent import (
    LogScalingResult,
    RationalMatrix,
    cyclotomic,
    euler_phi,
    is_unipotent,
    log_scaling_check,
    matrix_exp,
    quasi_unipotent_order,
    unipotent_log,
)

__all__ = [
    "CheckRecord",
    "DEFAULT_ALGEBRA_BOUND",
    "DEFAULT_WORK_BOUND",
    "DigitViolation",
    "LogScalingResult",
    "PGroup",
    "RationalMatrix",
    "Report",
    "addswap_linear",
    "cyclic_module_is_free",
    "cyclotomic",
    "digit_lemma_scan",
    "digits",
    "euler_phi",
    "halving_homothety",
    "is_unipotent",
    "log_scaling_check",
    "matrix_exp",
    "nilpotency_index_by_enumeration",
    "pgroup_nilpotency_index",
    "power_sum_identity",
    "quasi_unipotent_order",
    "relations_report",
    "rotated_value",
    "scalar_power_sum",
    "square_shear",
    "unipotent_log",
]
