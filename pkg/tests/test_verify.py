import json

import pytest

from qsphere.verify import (CheckResult, CHECKS, emit_report, run_suite,
                            suite_failed)


def test_fast_checks_pass():
    results = run_suite({"C2", "C3", "C6", "C7", "C9", "C10", "C11"})
    assert [r.name for r in results] == ["C2", "C3", "C6", "C7", "C9", "C10", "C11"]
    assert not suite_failed(results)
    statuses = {r.name: r.status for r in results}
    assert statuses["C2"] == "pass"
    assert statuses["C3"] == "bounded-pass"


def test_cap_table_check_carries_reading_note():
    (result,) = run_suite({"C9"})
    assert result.status == "pass"
    assert "reproduced exactly" in result.note


def test_bounded_checks_on_tiny_truncation():
    results = run_suite({"C1", "C4", "C13"}, truncation=(1, 1))
    assert not suite_failed(results)
    assert all(r.status == "bounded-pass" for r in results)


def test_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown checks"):
        run_suite({"C99"})


def test_every_check_is_registered():
    assert sorted(CHECKS) == sorted(f"C{i}" for i in range(1, 16))
    for name, (description, fn) in CHECKS.items():
        assert description and callable(fn)


def test_markdown_report_shape():
    results = [
        CheckResult("C2", "fundamental cycle is closed", "pass", 1.0),
        CheckResult("C1", "double boundary vanishes", "bounded-pass", 2.0,
                    note="degree 2: 81 tensors"),
    ]
    text = emit_report(results, "markdown")
    assert "| C2 | fundamental cycle is closed | pass | 1 |" in text
    assert "C1 note: degree 2: 81 tensors" in text
    assert text.rstrip().endswith("summary: 2/2 passed (1 bounded)")


def test_markdown_report_empty_selection():
    assert emit_report([], "markdown").strip().endswith("summary: 0/0 passed")


def test_json_report_round_trips_and_is_deterministic():
    results = run_suite({"C2", "C6"})
    text1 = emit_report(results, "json")
    text2 = emit_report(run_suite({"C2", "C6"}), "json")
    doc1, doc2 = json.loads(text1), json.loads(text2)
    for doc in (doc1, doc2):
        del_double = [r.pop("runtime_ms") for r in doc["results"]]
        assert all(isinstance(v, float) or isinstance(v, int) for v in del_double)
    assert doc1 == doc2
    assert doc1["summary"]["failed"] == 0


def test_failed_check_is_reported():
    results = [CheckResult("C2", "fundamental cycle is closed", "fail", 1.0,
                           witness="boundary nonzero")]
    assert suite_failed(results)
    text = emit_report(results, "markdown")
    assert "C2 witness: boundary nonzero" in text
    assert "summary: 0/1 passed" in text


def test_unknown_report_format():
    with pytest.raises(ValueError):
        emit_report([], "yaml")
