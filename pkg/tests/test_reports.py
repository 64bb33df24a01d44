"""Tests for table emission, reference diffing, and the verification report."""

import json

import pytest

from m23rep import fixtures, reports
from m23rep.reports import (
    MATRIX_IDS,
    TABLE_IDS,
    computed_rows,
    diff_against_reference,
    emit_table,
    generator_matrices,
    parse_table,
    render_report_text,
    verification_report,
    write_report_files,
)
from m23rep.subgroup import SubgroupSpec

CLEAN_IDS = tuple(t for t in TABLE_IDS if t not in fixtures.CONFIRMED_ERRATA)


def test_table_id_registry():
    assert len(TABLE_IDS) == 9
    assert MATRIX_IDS == TABLE_IDS[5:]
    assert set(fixtures.CONFIRMED_ERRATA) < set(TABLE_IDS)


def test_emit_spot_checks(sub):
    assert emit_table("x-powers", sub, start=47, end=47) == (
        "X^47 | X^3+X^2+1 | 00000001101\n"
    )
    assert "alpha^17 | X^10+X^9+X^7+X^6 | 11011000000" in emit_table(
        "alpha-powers", sub
    )
    assert "beta^7 | alpha^12 | alpha^7 | beta^6" in emit_table("cross-table", sub)
    assert emit_table("X-in-A", sub).splitlines()[0] == "X^0 | 1"
    assert emit_table("alpha-in-A", sub).splitlines()[0] == "alpha^11 | a9+a7+a6+a5+a+1"


def test_emit_parse_round_trip(sub):
    for table_id in TABLE_IDS:
        rows = computed_rows(table_id, sub)
        assert parse_table(table_id, emit_table(table_id, sub)) == rows


def test_emit_rejects_unknown_id(sub):
    with pytest.raises(ValueError):
        emit_table("no-such-table", sub)
    with pytest.raises(ValueError):
        computed_rows("no-such-table", sub)


def test_emit_rejects_range_on_fixed_tables(sub):
    with pytest.raises(ValueError):
        emit_table("alpha-powers", sub, start=1, end=5)
    with pytest.raises(ValueError):
        emit_table("matrix-fA", sub, start=0, end=3)


def test_diffs_flag_exactly_the_confirmed_errata(sub):
    for table_id in TABLE_IDS:
        report = diff_against_reference(table_id, sub)
        assert report.matches_confirmed_errata()
        expected = fixtures.CONFIRMED_ERRATA.get(table_id, ())
        assert report.locators() == expected
        assert report.verdict == ("errata-found" if expected else "clean")


def test_clean_tables_have_no_mismatches(sub):
    for table_id in CLEAN_IDS:
        assert diff_against_reference(table_id, sub).mismatches == ()


def test_diff_reports_detail_reference_and_computed(sub):
    report = diff_against_reference("alpha-powers", sub)
    (mismatch,) = report.mismatches
    assert mismatch.locator == "alpha-powers[15].binary"
    assert mismatch.reference != mismatch.computed
    assert set(mismatch.reference) <= {"0", "1"}
    assert len(mismatch.computed) == 11
    payload = report.as_dict()
    assert payload["table_id"] == "alpha-powers"
    assert payload["mismatches"][0]["locator"] == mismatch.locator


def test_diff_detects_injected_corruption(sub, monkeypatch):
    # Flip one bit in the first reference row and the diff must pinpoint it.
    rows = list(fixtures.X_POWERS)
    exp, expr, binary = rows[0]
    flipped = ("1" if binary[0] == "0" else "0") + binary[1:]
    rows[0] = (exp, expr, flipped)
    monkeypatch.setattr(fixtures, "X_POWERS", tuple(rows))
    report = diff_against_reference("x-powers", sub)
    assert report.locators() == (f"x-powers[{exp}].binary",)
    assert not report.matches_confirmed_errata()


def test_generator_matrices_requires_extendable_beta(sub):
    mats = generator_matrices(sub)
    assert sorted(mats) == sorted(MATRIX_IDS)
    bad = SubgroupSpec(sub.field, beta_exp=1)
    with pytest.raises(ValueError):
        generator_matrices(bad)


def test_verification_report_is_deterministic(sub):
    first = verification_report(sub, closure_cap=100)
    second = verification_report(sub, closure_cap=100)
    assert json.dumps(first) == json.dumps(second)
    assert first["schema_version"] == "1"
    assert first["configuration"]["closure_cap"] == 100
    ids = [check["id"] for check in first["checks"]]
    assert len(ids) == len(set(ids)) == 24
    assert not first["passed"]  # the capped closure check fails
    failing = [c["id"] for c in first["checks"] if not c["passed"]]
    assert failing == ["group-order-closure"]


def test_verification_report_timings_flag(sub):
    report = verification_report(sub, closure_cap=100, include_timings=True)
    assert all("seconds" in check for check in report["checks"])
    untimed = verification_report(sub, closure_cap=100)
    assert all("seconds" not in check for check in untimed["checks"])


def test_verification_report_field_checks_mandatory(sub):
    with pytest.raises(ValueError):
        verification_report(sub, run_field_checks=False)


def test_render_report_text(sub):
    report = verification_report(sub, closure_cap=100)
    text = render_report_text(report)
    lines = text.splitlines()
    assert len(lines) == 25
    assert lines[0] == "PASS field-laws"
    assert "FAIL group-order-closure" in lines
    assert lines[-1] == "23/24 checks passed"


def test_write_report_files(sub, tmp_path):
    report, paths = write_report_files(tmp_path, sub, closure_cap=100)
    assert [p.name for p in paths["report"]] == ["report.json"]
    assert len(paths["tables"]) == 9
    assert len(paths["figures"]) == 3
    for group in paths.values():
        for path in group:
            assert path.exists() and path.stat().st_size > 0
    on_disk = json.loads((tmp_path / "report.json").read_text())
    assert on_disk == report
    table_file = tmp_path / "tables" / "x-powers.txt"
    assert table_file.read_text() == emit_table("x-powers", sub)
    names = {p.name for p in paths["figures"]}
    assert names == {
        "generator-matrices.png",
        "closure-growth.png",
        "beta-search.png",
    }
