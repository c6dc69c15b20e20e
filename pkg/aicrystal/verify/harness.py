"""Check records and the aggregated verification report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class CheckResult:
    """Result of a single verification check."""

    suite: str
    check: str
    passed: bool
    details: str = ""
    measured: Optional[str] = None
    expected: Optional[str] = None


@dataclass
class VerificationReport:
    """All check results of one `verify` run, in suite order."""

    suites: list[str] = field(default_factory=list)
    results: list[CheckResult] = field(default_factory=list)
    all_passed: bool = False

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, results: list[CheckResult]) -> None:
        self.results.extend(results)

    def finalize(self) -> None:
        self.all_passed = all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, Any]:
        return {
            "suites": list(self.suites),
            "total_checks": len(self.results),
            "passed": sum(1 for r in self.results if r.passed),
            "failed": sum(1 for r in self.results if not r.passed),
            "all_passed": self.all_passed,
            "failures": [
                {
                    "suite": r.suite,
                    "check": r.check,
                    "details": r.details,
                    "measured": r.measured,
                    "expected": r.expected,
                }
                for r in self.failures()
            ],
        }

    def to_text(self) -> str:
        lines = []
        for suite in self.suites:
            mine = [r for r in self.results if r.suite == suite]
            failed = sum(1 for r in mine if not r.passed)
            status = "PASS" if failed == 0 else "FAIL"
            lines.append(f"{suite}: {status} ({len(mine) - failed}/{len(mine)} checks)")
        for r in self.failures():
            line = f"  FAILED {r.suite}.{r.check}"
            if r.details:
                line += f": {r.details}"
            if r.expected is not None:
                line += f" (expected {r.expected}, got {r.measured})"
            lines.append(line)
        lines.append("all passed" if self.all_passed else "verification failed")
        return "\n".join(lines)


def check(
    suite: str,
    name: str,
    measured: Any,
    expected: Any,
    details: str = "",
) -> CheckResult:
    """Equality check with both sides rendered for the report."""
    return CheckResult(
        suite=suite,
        check=name,
        passed=measured == expected,
        details=details,
        measured=str(measured),
        expected=str(expected),
    )


def no_violations(suite: str, name: str, problems: list[str]) -> CheckResult:
    """Pass when ``problems`` is empty; keeps the first few for the report."""
    shown = "; ".join(problems[:3])
    if len(problems) > 3:
        shown += f"; ... {len(problems) - 3} more"
    return CheckResult(suite=suite, check=name, passed=not problems, details=shown)
