import json

import pytest

from z3parts import BiSeries, Counterexample, VerificationReport, WeightKind, partition_count
from z3parts.verify import (
    CHECKS,
    _series_mismatches,
    verify_correction,
    verify_product,
    verify_structure,
    verify_top_coefficients,
    verify_transport,
)


def strip_elapsed(report):
    d = report.to_dict()
    d.pop("elapsed")
    return d


def test_product_checks_pass_at_moderate_scale():
    for kind, name in ((WeightKind.WT, "product-wt"), (WeightKind.WT_TILDE, "product-wt-tilde")):
        report = verify_product(kind, 15)
        assert report.passed
        assert report.check_name == name
        assert report.counterexample is None
        assert report.items_checked == sum(partition_count(n) for n in range(16))


def test_correction_check_passes():
    report = verify_correction(15)
    assert report.passed
    assert report.items_checked == 2 * sum(partition_count(n) for n in range(16))


def test_transport_check_passes():
    report = verify_transport(12)
    assert report.passed
    assert report.items_checked == sum(partition_count(n) for n in range(13))


def test_top_coefficients_check_passes():
    report = verify_top_coefficients(12)
    assert report.passed
    assert report.items_checked > 0


def test_top_coefficients_requires_enough_range():
    with pytest.raises(ValueError):
        verify_top_coefficients(3)


def test_structure_check_passes_and_counts_enough_items():
    report = verify_structure(12)
    assert report.passed
    # at minimum, every partition of every size up to 12 was visited
    assert report.items_checked >= sum(partition_count(n) for n in range(13))


def test_reports_are_deterministic():
    a = verify_transport(10)
    b = verify_transport(10)
    assert strip_elapsed(a) == strip_elapsed(b)


def test_sharded_runs_match_sequential_runs():
    pairs = [
        (verify_product(WeightKind.WT_TILDE, 10), verify_product(WeightKind.WT_TILDE, 10, jobs=2)),
        (verify_transport(8), verify_transport(8, jobs=2)),
        (verify_structure(8), verify_structure(8, jobs=2)),
    ]
    for sequential, sharded in pairs:
        assert strip_elapsed(sequential) == strip_elapsed(sharded)


def test_series_mismatch_reports_smallest_q_then_t():
    claimed = BiSeries(5, {(0, 0): 1, (1, 3): 4, (2, 3): 9, (0, 5): 2})
    observed = BiSeries(5, {(0, 0): 1, (1, 3): 5, (2, 3): 8, (0, 5): 2})
    mismatches = _series_mismatches(claimed, observed)
    keys = [key for key, _ in mismatches]
    assert keys == [(3, 1), (3, 2)]
    first = mismatches[0][1]
    assert first == Counterexample("t^1 q^3", "4", "5")


def test_report_serialization_shape():
    report = verify_transport(6)
    data = json.loads(report.to_json())
    assert list(data) == ["check_name", "max_n", "status", "counterexample", "elapsed", "items_checked"]
    assert data["status"] == "pass"
    assert data["counterexample"] is None
    assert data["elapsed"] >= 0


def test_failing_report_carries_the_counterexample():
    report = VerificationReport(
        check_name="demo",
        max_n=3,
        status="fail",
        counterexample=Counterexample("t^1 q^2", "1", "0"),
        elapsed_ms=1.25,
        items_checked=7,
    )
    data = json.loads(report.to_json())
    assert data["status"] == "fail"
    assert data["counterexample"] == {"object": "t^1 q^2", "expected": "1", "actual": "0"}
    assert not report.passed


def test_registry_names_and_defaults():
    assert sorted(CHECKS) == [
        "correction",
        "product-wt",
        "product-wt-tilde",
        "structure",
        "top-coeffs",
        "transport",
    ]
    for runner, default_max_n in CHECKS.values():
        assert default_max_n >= 4
        assert callable(runner)
