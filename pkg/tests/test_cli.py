"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from symdeform.cli.main import main
from symdeform.patterns import pattern_from_json


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, *args):
    result = runner.invoke(main, [*args, "--format", "json"])
    return result, json.loads(result.stdout) if result.exit_code in (0, 1) else None


def test_canonical(runner):
    result, data = run_json(runner, "canonical", "--structure", "H(1,2),K(1)")
    assert result.exit_code == 0
    assert data["a"] == [["1", "0"], ["0", "0"]]
    assert data["b"] == [["2", "0"], ["0", "1"]]


def test_canonical_text(runner):
    result = runner.invoke(main, ["canonical", "--structure", "L(1)"])
    assert result.exit_code == 0
    assert "Canonical pair of L(1)" in result.output


def test_pattern_json_round_trips(runner):
    result, data = run_json(runner, "pattern", "--structure", "H(2,1/2),H(1,1/2),L(1)")
    assert result.exit_code == 0
    pattern = pattern_from_json(data)
    assert data["params"] == len(pattern.params)


def test_pattern_variant(runner):
    result, data = run_json(
        runner, "pattern", "--structure", "K(2),K(3)", "--variant", "nw_single=first_row"
    )
    assert result.exit_code == 0
    assert data["maskA"][0][2:4] == [1, 1]

    result = runner.invoke(main, ["pattern", "--structure", "K(1)", "--variant", "spiral"])
    assert result.exit_code == 2


def test_codim(runner):
    result, data = run_json(runner, "codim", "--structure", "L(1)")
    assert data["codim"] == 4

    result, data = run_json(runner, "codim", "--structure", "H(2,1),H(3,1)", "--blocks")
    assert data["codim"] == 7
    assert data["blocks"]["offdiagonal"] == [{"i": 0, "j": 1, "codim": 2}]


def test_verify_passes(runner):
    result, data = run_json(runner, "verify", "--structure", "H(1,2)")
    assert result.exit_code == 0
    assert data["passed"] is True
    assert data["codim"] == 1
    assert data["pattern_params"] == 1
    assert data["tangent_rank"] == 1
    assert data["direct_sum"] is True
    assert data["ledger"] == []


def test_verify_report_keys(runner):
    result, data = run_json(runner, "verify", "--structure", "K(1),L(1)")
    assert result.exit_code == 0
    assert {"codim", "tangent_rank", "pattern_params", "direct_sum", "ledger"} <= set(data)
    assert data["pattern_params"] == data["codim"]
    assert data["tangent_rank"] + data["codim"] == data["dimension"]


def test_verify_empty_structure(runner):
    result = runner.invoke(main, ["verify", "--structure", "[]"])
    assert result.exit_code == 0


def test_verify_structure_file(runner, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"blocks": [{"kind": "K", "n": 1}, {"kind": "L", "n": 1}]}))
    result = runner.invoke(main, ["verify", "--input", str(path)])
    assert result.exit_code == 0
    assert "miniversal" in result.output


def test_verify_bad_pattern_fails(runner, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"maskA": [[1]], "maskB": [[0]]}))
    result, data = run_json(runner, "verify", "--structure", "H(1,0)", "--pattern", str(path))
    assert result.exit_code == 1
    assert data["passed"] is False
    assert data["direct_sum"] is False


def test_parse_error_exit_status(runner):
    result = runner.invoke(main, ["verify", "--structure", "H(1,2),Q(1)"])
    assert result.exit_code == 2
    # rich may wrap long messages
    assert "(at 7)" in " ".join(result.output.split())

    result = runner.invoke(main, ["codim", "--structure", "H(1,²)"])
    assert result.exit_code == 2
    assert "(at 4)" in " ".join(result.output.split())

    result = runner.invoke(main, ["codim", "--structure", "K(²)"])
    assert result.exit_code == 2

    result = runner.invoke(main, ["verify"])
    assert result.exit_code == 2

    result = runner.invoke(main, ["codim", "--input", "does-not-exist.json"])
    assert result.exit_code == 2


def test_sweep(runner, tmp_path):
    report = tmp_path / "report.json"
    result, data = run_json(
        runner,
        "sweep",
        "--max-block-n",
        "1",
        "--max-total",
        "3",
        "--lambdas",
        "0,1",
        "--triples",
        "5",
        "--samples",
        "1",
        "--report",
        str(report),
    )
    assert result.exit_code == 0
    assert data["passed"] is True
    assert data["ledger"] == []
    assert json.loads(report.read_text())["total"] == data["total"]


def test_sweep_text_and_flags(runner):
    result = runner.invoke(
        main, ["sweep", "--max-block-n", "1", "--lambdas", "0", "--no-pairs", "--no-triples"]
    )
    assert result.exit_code == 0
    assert "All 3 structure(s) passed" in result.output


def test_sweep_runs_configured_projection_checks(runner):
    args = ("sweep", "--max-block-n", "1", "--lambdas", "0", "--no-pairs", "--no-triples")
    result, data = run_json(runner, *args)
    assert result.exit_code == 0
    assert [item["projection"]["samples"] for item in data["items"]] == [100, 100, 100]
    assert all(item["projection"]["linear"] for item in data["items"])

    runner.invoke(main, ["config", "set", "projection.samples", "3"])
    result, data = run_json(runner, *args)
    assert [item["projection"]["samples"] for item in data["items"]] == [3, 3, 3]

    result, data = run_json(runner, *args, "--samples", "0")
    assert [item["projection"] for item in data["items"]] == [None, None, None]


def test_sweep_coerces_configured_values(runner):
    # config set stores digits as int
    runner.invoke(main, ["config", "set", "sweep.lambdas", "0"])
    result = runner.invoke(
        main, ["sweep", "--max-block-n", "1", "--no-pairs", "--no-triples", "--samples", "0"]
    )
    assert result.exit_code == 0
    assert "All 3 structure(s) passed" in result.output

    runner.invoke(main, ["config", "set", "sweep.max_total", "big"])
    result = runner.invoke(main, ["sweep", "--max-block-n", "1", "--lambdas", "0"])
    assert result.exit_code == 2
    assert "sweep.max_total" in result.output


def test_sweep_bad_lambdas(runner):
    result = runner.invoke(main, ["sweep", "--lambdas", "0,x"])
    assert result.exit_code == 2


def test_construct(runner):
    result, data = run_json(
        runner, "construct", "--structure", "K(1),L(1)", "--order", "interleaved"
    )
    assert result.exit_code == 0
    assert data["codim"] == data["greedy"]["params"] == data["catalog"]["params"]


def test_project_file(runner, tmp_path):
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"a": [["4"]], "b": [["6"]]}))
    result, data = run_json(
        runner, "project", "--structure", "H(1,0)", "--perturbation", str(path)
    )
    assert result.exit_code == 0
    assert data["d_values"] == {"0": "6"}
    assert data["reducer"] == [["-2"]]
    assert data["labels"] == {"0": "B[1,1]"}


def test_project_samples(runner):
    result, data = run_json(
        runner, "project", "--structure", "K(1),L(0)", "--samples", "2", "--seed", "3"
    )
    assert result.exit_code == 0
    assert data["passed"] is True
    assert data["samples"] == 2


def test_project_size_mismatch(runner, tmp_path):
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"a": [["1", "0"], ["0", "1"]], "b": [["0", "0"], ["0", "0"]]}))
    result = runner.invoke(main, ["project", "--structure", "H(1,0)", "--perturbation", str(path)])
    assert result.exit_code == 2


def test_config_commands(runner):
    result = runner.invoke(main, ["config", "set", "sweep.max_total", "7"])
    assert result.exit_code == 0

    result = runner.invoke(main, ["config", "get", "sweep.max_total"])
    assert result.output.strip() == "7"

    result = runner.invoke(main, ["config", "list"])
    assert "catalog.nw_single: first_column" in result.output

    result = runner.invoke(main, ["config", "get", "no.such.key"])
    assert result.exit_code == 1

    result = runner.invoke(main, ["config", "reset"])
    assert result.exit_code == 0
    result = runner.invoke(main, ["config", "get", "sweep.max_total"])
    assert result.output.strip() == "10"


def test_log_level_option(runner):
    result = runner.invoke(main, ["--log-level", "debug", "codim", "--structure", "H(1,0)"])
    assert result.exit_code == 0
