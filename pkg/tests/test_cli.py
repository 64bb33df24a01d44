"""End-to-end tests for the command-line interface."""

import json

import pytest

from m23rep import cli
from m23rep.fixtures import G_CYCLES
from m23rep.reports import emit_table
from m23rep.subgroup import SubgroupSpec


def run(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_single_row(capsys):
    code, out, _ = run(["tables", "--id", "x-powers", "--from", "11", "--to", "11"], capsys)
    assert code == 0
    assert out == "X^11 | X^2+1 | 00000000101\n"


def test_tables_cross_table(capsys):
    code, out, _ = run(["tables", "--id", "cross-table"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 23
    assert lines[0] == "beta^1 | alpha^5 | alpha^1 | beta^14"


def test_tables_unknown_id_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["tables", "--id", "no-such-table"])
    assert excinfo.value.code == 2


def test_tables_range_misuse(capsys):
    code, _, err = run(["tables", "--id", "alpha-powers", "--from", "1", "--to", "5"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_extend_full_cycle_alias(capsys):
    code, out, _ = run(["extend", "--perm", "f"], capsys)
    assert code == 0
    assert out == emit_table("matrix-fA", SubgroupSpec())


def test_extend_five_cycles(capsys):
    code, out, _ = run(["extend", "--perm", G_CYCLES], capsys)
    assert code == 0
    assert out == emit_table("matrix-gA", SubgroupSpec())


def test_extend_failure_reports_witness(capsys):
    code, out, _ = run(["extend", "--perm", "(1,2)", "--beta-exp", "1"], capsys)
    assert code == 1
    assert "no linear extension: fails at alpha^11" in out
    assert "(in C: no)" in out


def test_extend_bad_cycle_text(capsys):
    code, _, err = run(["extend", "--perm", "(1,2"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_extend_json(capsys):
    code, out, _ = run(["extend", "--perm", "f", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["success"]
    assert payload["matrix_a_rows"] == emit_table("matrix-fA", SubgroupSpec()).splitlines()
    assert "witness" not in payload


def test_search_beta_reports_success_set(capsys):
    code, out, _ = run(["search-beta", "--perm", G_CYCLES], capsys)
    assert code == 0
    assert "success exponents: [5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22]" in out
    assert len(out.splitlines()) == 23


def test_order_schreier_sims(capsys):
    code, out, _ = run(["order", "--method", "ss"], capsys)
    assert code == 0
    assert "10200960" in out


def test_order_json(capsys):
    code, out, _ = run(["order", "--method", "ss", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["orders"] == {"schreier-sims": 10200960}
    assert payload["agree"]


def test_order_capped_closure_fails(capsys):
    code, out, _ = run(["order", "--method", "bfs", "--closure-cap", "100"], capsys)
    assert code == 1


def test_irreducible(capsys):
    code, out, _ = run(["irreducible"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "all 2047 spins reach dimension 11",
        "minimal faithful dimension for a group of order 23: 11",
    ]


def test_m24_all_inconsistent(capsys):
    code, out, _ = run(["m24"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "all inconsistent"
    assert sum("inconsistent at beta^13" in line for line in lines) == 11


def test_m24_json(capsys):
    code, out, _ = run(["m24", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["all_inconsistent"]
    assert len(payload["verdicts"]) == 11
    assert all(not v["consistent"] for v in payload["verdicts"])


def test_verify_capped_fails_in_text_mode(capsys):
    code, out, _ = run(["verify", "--closure-cap", "100"], capsys)
    assert code == 1
    assert "FAIL group-order-closure" in out
    assert out.splitlines()[-1] == "23/24 checks passed"


def test_verify_full_run_writes_files(capsys, tmp_path):
    code, out, _ = run(["verify", "--json", "--outdir", str(tmp_path)], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"]
    assert len(payload["checks"]) == 24
    assert (tmp_path / "report.json").exists()
    tables = sorted(p.name for p in (tmp_path / "tables").iterdir())
    assert len(tables) == 9
    figures = sorted(p.name for p in (tmp_path / "figures").iterdir())
    assert figures == ["beta-search.png", "closure-growth.png", "generator-matrices.png"]


def test_invalid_beta_exp(capsys):
    code, _, err = run(["order", "--method", "ss", "--beta-exp", "23"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_invalid_modulus(capsys):
    code, _, err = run(["tables", "--id", "x-powers", "--modulus", "banana"], capsys)
    assert code == 2
    assert err.startswith("error:")
