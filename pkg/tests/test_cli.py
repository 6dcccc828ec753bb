"""
Command-line entry point, configuration and golden-table verification.
"""
import json
import shutil
from fractions import Fraction

import pytest

from eisenlite import CharKind, EType, OutputFormat
from eisenlite.characters import TorusCharacter
from eisenlite.cli import FAMILIES, RunConfig, check_family, golden_dir, main, verify_golden_tables
from eisenlite.cli.verify import GOLDEN_ENV

HALF = Fraction(1, 2)


def _json_out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_pole_order_json(capsys):
    """Test the split trivial double pole at 3/2 through the CLI."""
    assert main(["pole-order", "--algebra", "split", "--char", "trivial", "--s0", "3/2"]) == 0
    assert _json_out(capsys)["net_order"] == 2


def test_pole_order_text(capsys):
    """Test the text rendering of a pole order."""
    assert main(["pole-order", "--algebra", "cubic", "--char", "cubic-e", "--s0", "1/2", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("pole order 0 at s0=1/2")


def test_missing_required_option(capsys):
    """Test a command without --s0 reports a usage error."""
    assert main(["pole-order", "--algebra", "split", "--char", "trivial"]) == 2
    assert "--s0" in capsys.readouterr().err


def test_incompatible_character_exit_status(capsys):
    """Test an incompatible character exits with status 2."""
    assert main(["pole-order", "--algebra", "cubic", "--char", "quad-k-normtrivial", "--s0", "1/2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_rational():
    """Test argparse rejects a malformed s0."""
    with pytest.raises(SystemExit):
        main(["pole-order", "--algebra", "split", "--char", "trivial", "--s0", "one half"])


def test_config_file_defaults(tmp_path, capsys):
    """Test a config file supplies defaults and flags override them."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"etype": "split", "char": "trivial", "s0": "1/2"}), encoding="utf-8")
    assert main(["pole-order", "--config", str(path), "--s0", "3/2"]) == 0
    assert _json_out(capsys)["net_order"] == 2

    path.write_text(json.dumps({"etype": "split", "colour": "red"}), encoding="utf-8")
    assert main(["pole-order", "--config", str(path)]) == 2
    assert main(["pole-order", "--config", str(tmp_path / "missing.json")]) == 2


def test_sigma_and_classes(capsys):
    """Test the sigma and classes commands for the cubic trivial case."""
    assert main(["sigma", "--algebra", "cubic", "--char", "trivial", "--s0", "1/2", "--min-order", "2"]) == 0
    assert {row["word"] for row in _json_out(capsys)["rows"]} == {"212", "2121"}
    assert main(["classes", "--algebra", "cubic", "--char", "trivial", "--s0", "1/2", "--format", "text"]) == 0
    assert capsys.readouterr().out.count("class ") == 2


def test_gk_command(capsys):
    """Test the gk command reports the simple pole of J(w21)."""
    assert main(["gk", "--algebra", "fxk", "--char", "trivial", "--word", "21", "--s0", "1/2"]) == 0
    assert _json_out(capsys)["order"] == -1


def test_twist_command(capsys):
    """Test the twist command renders the twisted character."""
    assert main(["twist", "--algebra", "split", "--char", "trivial", "--word", "2", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("w2^-1·χ_s = ")


def test_twist_command_reports_the_weight(capsys):
    """Test the twist report carries the plain weight at the point."""
    assert main(["twist", "--algebra", "split", "--char", "trivial", "--word", "2", "--s0", "1/2"]) == 0
    report = _json_out(capsys)
    assert report["weight"] == "(1, -2, 1, 1)"
    assert TorusCharacter.from_json(report["character"]).affine.at(HALF) == (1, -2, 1, 1)


def test_residue_command(tmp_path, capsys):
    """Test the residue command over a profile file."""
    path = tmp_path / "places.json"
    path.write_text(json.dumps([
        {"id": f"v{i}", "local_algebra": "inert-field", "local_char": "trivial"} for i in range(3)
    ]), encoding="utf-8")
    args = ["residue", "--algebra", "cubic", "--char", "trivial", "--s0", "1/2", "--profiles", str(path)]
    assert main(args) == 0
    rows = _json_out(capsys)["dotted_sets"]
    assert len(rows) == 8
    assert sum(row["appears"] for row in rows) == 5


def test_jacquet_command(capsys):
    """Test the jacquet command for chi = chi_K at 1/2."""
    assert main(["jacquet", "--algebra", "fxk", "--char", "quad-k-normtrivial", "--s0", "1/2"]) == 0
    report = _json_out(capsys)
    assert report["multiplicity"] == 2
    assert report["target_weight"] == "(-1, 2, -1, -1)"
    assert sum(entry["multiplicity"] for entry in report["orbit"]) == 48


def test_verify_constant_suite(capsys):
    """Test every normalized-series constant verifies."""
    assert main(["verify", "appendix-b"]) == 0
    report = _json_out(capsys)
    assert report["suite"] == "appendix-b"
    assert report["failed"] == 0
    assert report["checks"] and len(report["checks"]) == 18


def test_verify_suite_aliases(capsys):
    """Test the content names select the same suites."""
    assert RunConfig("verify", suite="normalized-series").suite == "appendix-b"
    assert RunConfig("verify", suite="golden-tables").suite == "paper-tables"
    assert main(["verify", "normalized-series"]) == 0
    assert _json_out(capsys)["suite"] == "appendix-b"


def test_run_config_validation():
    """Test RunConfig rejects invalid values."""
    with pytest.raises(ValueError):
        RunConfig("bogus")
    with pytest.raises(ValueError):
        RunConfig("sigma", etype="quartic")
    with pytest.raises(ValueError):
        RunConfig("residue", bound=-1)
    with pytest.raises(ValueError):
        RunConfig("residue", processes=0)
    with pytest.raises(ValueError):
        RunConfig("verify", suite="everything")
    with pytest.raises(ValueError):
        RunConfig.from_mapping({"command": "sigma", "colour": "red"})
    config = RunConfig("sigma", etype="split", char="trivial", s0="1/2", output_format="text")
    assert config.etype == EType.SPLIT
    assert config.char == CharKind.TRIVIAL
    assert config.output_format == OutputFormat.TEXT
    assert config.to_json()["s0"] == "1/2"


@pytest.mark.parametrize("family", FAMILIES)
def test_golden_family(family):
    """Test each stored table agrees with the engine."""
    results = check_family(family)
    assert results
    failures = [r.render() for r in results if not r.ok]
    assert not failures


def test_verify_all_tables():
    """Test the full golden suite passes."""
    result = verify_golden_tables()
    assert result.status == 0
    assert result.report["failed"] == 0


def test_golden_dir_override(tmp_path, monkeypatch):
    """Test the golden directory can be redirected."""
    shutil.copytree(golden_dir(), tmp_path / "golden")
    monkeypatch.setenv(GOLDEN_ENV, str(tmp_path / "golden"))
    assert golden_dir() == tmp_path / "golden"

    path = tmp_path / "golden" / "pole_orders.json"
    data = json.loads(path.read_text(encoding="utf-8"))
    data["entries"][0]["orders"] = [value + 5 for value in data["entries"][0]["orders"]]
    path.write_text(json.dumps(data), encoding="utf-8")
    assert not all(r.ok for r in check_family("pole_orders"))


def test_verify_table_suite(capsys):
    """Test the golden-table suite runs from the command line."""
    assert main(["verify", "paper-tables"]) == 0
    report = _json_out(capsys)
    assert report["suite"] == "paper-tables"
    assert report["failed"] == 0


def test_structure_rows_check_the_longest_element():
    """Test every structure row also checks that the longest element negates rho."""
    results = [r for r in check_family("structure") if r.key.endswith("/longest_negates_rho")]
    assert results
    assert all(r.ok for r in results)


@pytest.mark.parametrize("family", FAMILIES)
def test_golden_entries_name_their_source(family):
    """Test every stored row names the result it was taken from and the report carries it."""
    entries = json.loads((golden_dir() / f"{family}.json").read_text(encoding="utf-8"))["entries"]
    assert all(entry["source"] for entry in entries)
    sources = {entry["source"] for entry in entries}
    results = check_family(family)
    assert {r.source for r in results} == sources
    assert all(r.to_json()["source"] in sources for r in results)
