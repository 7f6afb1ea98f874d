from .base import BaseCheck, Evaluation, is_lab_primitive, lab_is_2_closed
from .exact_cover import ExactCoverSolver, exact_cover
from .registry import CHECKS, CONTROL_CHECKS, get_checks
from .result import CheckResult, CheckStatus, instance_id
from .suite import (
    SuiteReport,
    check_rows,
    read_report,
    run_check,
    run_suite,
    summarize,
    verify_witness,
)

__all__ = [
    "BaseCheck",
    "CHECKS",
    "CONTROL_CHECKS",
    "CheckResult",
    "CheckStatus",
    "Evaluation",
    "ExactCoverSolver",
    "SuiteReport",
    "check_rows",
    "exact_cover",
    "get_checks",
    "instance_id",
    "is_lab_primitive",
    "lab_is_2_closed",
    "read_report",
    "run_check",
    "run_suite",
    "summarize",
    "verify_witness",
]
