from __future__ import annotations

from collections import Counter
from typing import Any

_checks: list[dict[str, Any]] = []


def record_check(name: str, passed: bool, detail: str | None = None) -> bool:
    _checks.append({
        "name": name,
        "passed": bool(passed),
        "detail": detail,
    })
    return bool(passed)


def get_checks() -> list[dict[str, Any]]:
    return _checks


def clear_checks() -> None:
    _checks.clear()


def summarize_checks(checks: list[dict[str, Any]]) -> dict[str, Any]:
    total = len(checks)
    passed = sum(1 for c in checks if c["passed"])

    # Group by prefix before the first ":" (e.g. "agreement:oracle")
    groups: Counter[str] = Counter()
    failed_groups: Counter[str] = Counter()
    for c in checks:
        group = c["name"].split(":", 1)[0]
        groups[group] += 1
        if not c["passed"]:
            failed_groups[group] += 1

    return {
        "total": total,
        "passed": passed,
        "failed": total - passed,
        "pass_rate": round(passed / total * 100, 1) if total else 0.0,
        "groups": {g: {"checks": n, "failed": failed_groups[g]} for g, n in groups.items()},
        "failures": [c["name"] for c in checks if not c["passed"]],
    }


def first_difference(expected: list, actual: list) -> str | None:
    """Human-readable diff of two coefficient lists, or None when equal."""
    if expected == actual:
        return None
    for k, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return f"first difference at k={k}: expected {e}, got {a}"
    return f"length differs: expected {len(expected)} terms, got {len(actual)}"
