"""Verification runner: suite dispatch across a thread pool.

Suites run concurrently but the report lists them in registry order, so the
text and JSON output of a run does not depend on scheduling.
"""

from __future__ import annotations

import time
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from aicrystal.config import SuiteLimits, get_settings, get_suite_limits
from aicrystal.log import bind_suite_context, clear_context, get_logger
from aicrystal.metrics import SUITE_DURATION, VERIFY_CHECKS
from aicrystal.verify.harness import CheckResult, VerificationReport
from aicrystal.verify.suites import SUITES

logger = get_logger(__name__)


def resolve_suites(requested: Sequence[str] | None) -> list[str]:
    """Registry-ordered suite names; ``None``, empty or "all" selects every suite."""
    if not requested or "all" in requested:
        return list(SUITES)
    unknown = [name for name in requested if name not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [name for name in SUITES if name in requested]


def run_suite(
    name: str,
    *,
    max_n: int | None = None,
    max_size: int | None = None,
    max_len: int | None = None,
) -> list[CheckResult]:
    """Run one suite; an exception inside it becomes a single failed check.

    Invalid bounds raise before the suite starts.  The suite context is
    cleared on every exit so a pool thread never leaks it into its next task.
    """
    bind_suite_context(name)
    try:
        limits = get_suite_limits(name, max_n=max_n, max_size=max_size, max_len=max_len)
        bind_suite_context(name, **limits.model_dump())
        return _timed(name, limits)
    finally:
        clear_context()


def _timed(name: str, limits: SuiteLimits) -> list[CheckResult]:
    start = time.monotonic()
    try:
        results = SUITES[name](limits)
    except Exception as exc:
        logger.error("suite_crashed", error=str(exc), error_type=type(exc).__name__)
        results = [
            CheckResult(suite=name, check="completed", passed=False, details=repr(exc))
        ]
    elapsed = time.monotonic() - start
    SUITE_DURATION.labels(suite=name).observe(elapsed)
    for r in results:
        VERIFY_CHECKS.labels(suite=name, result="pass" if r.passed else "fail").inc()
    failed = sum(1 for r in results if not r.passed)
    logger.info(
        "suite_finished",
        checks=len(results),
        failed=failed,
        seconds=round(elapsed, 3),
    )
    return results


def run_verification(
    suites: Sequence[str] | None = None,
    *,
    threads: int | None = None,
    max_n: int | None = None,
    max_size: int | None = None,
    max_len: int | None = None,
) -> VerificationReport:
    names = resolve_suites(suites)
    workers = threads or get_settings().verify_threads
    report = VerificationReport(suites=names)
    logger.info("verify_started", suites=names, threads=workers)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(run_suite, name, max_n=max_n, max_size=max_size, max_len=max_len)
            for name in names
        ]
        for future in futures:
            report.extend(future.result())

    report.finalize()
    logger.info(
        "verify_complete",
        total=len(report.results),
        failed=len(report.failures()),
        all_passed=report.all_passed,
    )
    return report
