"""Reproduction-suite machinery and the mfd command line interface."""

import io
import json

import pytest

from mfdeg.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main
from mfdeg.verify import SUITES, check_property, check_value


def test_suites_are_nested():
    assert set(SUITES) == {"smoke", "paper-p5", "stretch"}
    def keys(suite):
        return {(f, p, tuple(sorted(ps.items()))) for f, p, ps in SUITES[suite]}

    assert keys("smoke") <= keys("paper-p5") <= keys("stretch")


def test_check_value_and_property(ctx):
    c = ctx("xsp_p3_expP", 3)
    r = check_value(c, "c")
    assert r.status == "pass" and r.computed == 9
    r = check_property(c, "digit-sum")
    assert r.status == "pass"
    r = check_property(c, "expP-cd1ps-value")
    assert r.status == "skipped" and r.reason


def test_unknown_property_rejected(ctx):
    with pytest.raises(ValueError):
        check_property(ctx("xsp_p3_expP", 3), "not-a-check")


def test_result_line_format(ctx):
    r = check_value(ctx("xsp_p3_expP", 3), "order")
    assert r.line().startswith("PASS")
    assert "[xsp_p3_expP p=3]" in r.line()


def test_cli_catalog_text_and_json():
    out = io.StringIO()
    assert main(["catalog"], out=out) == EXIT_OK
    assert "xsp_p3_expP" in out.getvalue()
    out = io.StringIO()
    assert main(["catalog", "--format", "json"], out=out) == EXIT_OK
    rows = json.loads(out.getvalue())
    assert any(r["family"] == "tower" for r in rows)


def test_cli_compute_text():
    out = io.StringIO()
    code = main(["compute", "--group", "xsp_p3_expP", "--p", "3", "--mu"], out=out)
    assert code == EXIT_OK
    text = out.getvalue()
    assert "c(G)      9" in text and "mu(G)     9" in text


def test_cli_compute_json_with_params():
    out = io.StringIO()
    code = main(
        ["compute", "--group", "tower", "--p", "5", "--param", "n=4",
         "--param", "i=2", "--format", "json"],
        out=out,
    )
    assert code == EXIT_OK
    rep = json.loads(out.getvalue())
    assert rep["order"] == 625 and rep["c"] == 25
    assert rep["claim_mismatches"] == {}


def test_cli_compute_file(tmp_path):
    f = tmp_path / "g.pres"
    f.write_text("gens a,b; rels a^3, b^9, [a,b];")
    out = io.StringIO()
    code = main(["compute", "--file", str(f), "--mu"], out=out)
    assert code == EXIT_OK
    assert "c(G)      12" in out.getvalue()


def test_cli_usage_errors():
    out = io.StringIO()
    assert main(["compute", "--group", "nope"], out=out) == EXIT_USAGE
    out = io.StringIO()
    assert main(["compute", "--group", "tower", "--p", "5"], out=out) == EXIT_USAGE
    out = io.StringIO()
    assert main(["compute", "--group", "tower", "--p", "5", "--param", "n"], out=out) == EXIT_USAGE
    assert main(["bogus-command"], out=io.StringIO()) == EXIT_USAGE


def test_cli_budget_exit(monkeypatch):
    import mfdeg.cli as cli

    monkeypatch.setattr(cli, "ENUM_BUDGET", 3)
    out = io.StringIO()
    assert main(["compute", "--group", "xsp_p3_expP", "--p", "3"], out=out) == EXIT_BUDGET
    assert "budget exceeded" in out.getvalue()


def test_cli_verify_smoke_json():
    out = io.StringIO()
    code = main(["verify", "--suite", "smoke", "--threads", "4", "--format", "json"], out=out)
    assert code == EXIT_OK
    payload = json.loads(out.getvalue())
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] > 100
    # canonical ordering: group blocks appear in suite order
    groups = [r["group"] for r in payload["results"]]
    assert groups == sorted(groups, key=lambda g: groups.index(g))


def test_cli_verify_timeout_skips_not_fails():
    out = io.StringIO()
    code = main(["verify", "--suite", "smoke", "--timeout", "0", "--format", "json"], out=out)
    assert code == EXIT_OK
    payload = json.loads(out.getvalue())
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["skipped"] > 0


def test_cli_dump_table():
    out = io.StringIO()
    code = main(["compute", "--group", "xsp_p3_expP", "--p", "3", "--dump-table"], out=out)
    assert code == EXIT_OK
    assert "deg 3:" in out.getvalue()
