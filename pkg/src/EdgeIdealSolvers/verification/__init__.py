from EdgeIdealSolvers.verification.check_result import CheckResult
from EdgeIdealSolvers.verification.checks import CHECKS, run_check
from EdgeIdealSolvers.verification.suite import Report, explore_conjecture, report_to_frame, run_suite, save_report
