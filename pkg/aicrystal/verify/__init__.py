"""Exhaustive small-parameter verification of the library's identities."""

from aicrystal.verify.harness import CheckResult, VerificationReport, check, no_violations
from aicrystal.verify.runner import resolve_suites, run_suite, run_verification
from aicrystal.verify.suites import SUITES

__all__ = [
    "SUITES",
    "CheckResult",
    "VerificationReport",
    "check",
    "no_violations",
    "resolve_suites",
    "run_suite",
    "run_verification",
]
