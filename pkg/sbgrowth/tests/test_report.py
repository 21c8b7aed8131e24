from __future__ import annotations

from sbgrowth.cli.report import (
    clear_checks,
    first_difference,
    get_checks,
    record_check,
    summarize_checks,
)


def test_summary_empty_initially():
    clear_checks()
    summary = summarize_checks(get_checks())
    assert summary["total"] == 0
    assert summary["pass_rate"] == 0.0
    assert summary["failures"] == []


def test_record_returns_outcome():
    clear_checks()
    assert record_check("fixture:denominator", True) is True
    assert record_check("fixture:predecessor-table", False, "row g7 differs") is False
    assert len(get_checks()) == 2


def test_summary_groups_by_prefix():
    clear_checks()
    record_check("agreement:genfunc-dp:singular", True)
    record_check("agreement:genfunc-oracle:singular", False, "first difference at k=5")
    record_check("symmetry:flip:singular", True)
    summary = summarize_checks(get_checks())
    assert summary["total"] == 3
    assert summary["passed"] == 2
    assert summary["failed"] == 1
    assert summary["pass_rate"] == 66.7
    assert summary["groups"]["agreement"] == {"checks": 2, "failed": 1}
    assert summary["groups"]["symmetry"] == {"checks": 1, "failed": 0}
    assert summary["failures"] == ["agreement:genfunc-oracle:singular"]


def test_clear_checks():
    record_check("fixture:first-terms", True)
    clear_checks()
    assert get_checks() == []


def test_first_difference():
    assert first_difference([1, 4, 14], [1, 4, 14]) is None
    assert first_difference([1, 4, 14], [1, 4, 15]) == "first difference at k=2: expected 14, got 15"
    assert first_difference([1, 4], [1, 4, 14]) == "length differs: expected 2 terms, got 3"


def test_record_fields():
    clear_checks()
    record_check("fixture:first-terms", True)
    assert set(get_checks()[0]) == {"name", "passed", "detail"}
