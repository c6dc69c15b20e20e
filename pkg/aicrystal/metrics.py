"""Prometheus-style metrics helpers for verification runs and enumeration."""

from __future__ import annotations

from prometheus_client import Counter, Histogram, generate_latest

# ---------------------------------------------------------------------------
# Counters
# ---------------------------------------------------------------------------

VERIFY_CHECKS = Counter(
    "aicrystal_verify_checks_total",
    "Verification checks evaluated",
    ["suite", "result"],  # result: pass | fail
)

ELEMENTS_ENUMERATED = Counter(
    "aicrystal_crystal_elements_total",
    "Crystal elements produced by CLI enumeration",
    ["kind"],  # kind: gl | ai
)

# ---------------------------------------------------------------------------
# Histograms
# ---------------------------------------------------------------------------

SUITE_DURATION = Histogram(
    "aicrystal_verify_suite_seconds",
    "Wall-clock time per verification suite",
    ["suite"],
    buckets=[0.1, 0.5, 1, 5, 10, 30, 60, 120],
)


def metrics_text() -> bytes:
    """Return Prometheus exposition text."""
    return generate_latest()
