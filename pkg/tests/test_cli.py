"""End-to-end tests for the froblab command line: golden outputs, the
report schema, exit codes, determinism, and error envelopes."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

import froblab
from froblab.cli import main

FIXTURES = Path(froblab.__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "report.schema.json").read_text()
)

DET = str(FIXTURES / "determinantal_f3.ring")
CUSP = str(FIXTURES / "cusp_f5.ring")
REG2 = str(FIXTURES / "regular_f2.ring")

GOLDEN_CASES = [
    (["dim", DET], "dim_determinantal.json", 0),
    (["minors", DET], "minors_determinantal.json", 0),
    (["gb", CUSP], "gb_cusp.json", 0),
    (["membership", DET, "--poly", "x1*x4"], "membership_determinantal.json", 0),
    (["fpure", CUSP], "fpure_cusp.json", 0),
    (["fclosure", CUSP], "fclosure_cusp.json", 2),
    (["cover-check", REG2], "cover_check_regular_f2.json", 0),
    (["pipeline", DET], "pipeline_determinantal.json", 0),
]


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


@pytest.mark.parametrize("argv,golden,expected_code", GOLDEN_CASES)
def test_golden_outputs(capsys, argv, golden, expected_code):
    code, out = run_cli(capsys, argv)
    assert code == expected_code
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


@pytest.mark.parametrize("argv,golden,expected_code", GOLDEN_CASES)
def test_golden_envelopes_match_schema(argv, golden, expected_code):
    envelope = json.loads((GOLDEN / golden).read_text(encoding="utf-8"))
    jsonschema.validate(envelope, SCHEMA)


def test_error_envelopes_match_schema(capsys):
    for argv in (
        ["dim", str(FIXTURES / "no_such_file.ring")],
        ["cover-check", CUSP],
        ["membership", DET, "--poly", "x1 +"],
    ):
        code, out = run_cli(capsys, argv)
        assert code == 1
        envelope = json.loads(out)
        jsonschema.validate(envelope, SCHEMA)
        assert envelope["result"] is None
        assert envelope["error"]["message"]


def test_missing_file_reports_io_error(capsys):
    code, out = run_cli(capsys, ["dim", str(FIXTURES / "no_such_file.ring")])
    assert code == 1
    assert json.loads(out)["error"]["code"] == "IOError"


def test_spec_error_carries_the_line(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("p = 4\nvars = x\n", encoding="utf-8")
    code, out = run_cli(capsys, ["dim", str(bad)])
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "SpecFileError"
    assert err["line"] == 1


def test_cover_command_requires_the_coefficient_ideal(capsys):
    code, out = run_cli(capsys, ["cover-check", CUSP])
    assert code == 1
    assert json.loads(out)["error"]["code"] == "MissingField"


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command", DET])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["membership", DET])  # missing required --poly
    assert exc.value.code == 1


def test_version_flag_exits_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert froblab.__version__ in capsys.readouterr().out


def test_decisive_zero_twist_exits_two(capsys):
    code, out = run_cli(capsys, ["cover-check", DET, "--f", "0"])
    assert code == 2
    envelope = json.loads(out)
    assert envelope["result"]["verdict"] == "DECISIVE_NOT_F_INJECTIVE"
    assert envelope["result"]["witness_e"] == 1
    jsonschema.validate(envelope, SCHEMA)


def test_pipeline_output_is_byte_identical_across_runs(capsys):
    _, first = run_cli(capsys, ["pipeline", DET])
    _, second = run_cli(capsys, ["pipeline", DET])
    assert first == second


def test_search_sop_is_seed_deterministic(capsys):
    argv = ["pipeline", DET, "--search-sop", "--seed", "1"]
    code, first = run_cli(capsys, argv)
    _, second = run_cli(capsys, argv)
    assert code == 0
    assert first == second
    envelope = json.loads(first)
    assert envelope["input"]["flags"]["search_sop"] is True
    assert len(envelope["input"]["flags"]["sop"]) == 2
    other = json.loads(run_cli(capsys, ["pipeline", DET, "--search-sop", "--seed", "2"])[1])
    assert other["input"]["flags"]["seed"] == 2


def test_timings_only_adds_the_timing_block(capsys):
    _, out = run_cli(capsys, ["pipeline", DET, "--timings"])
    envelope = json.loads(out)
    seconds = envelope.pop("timing")["seconds"]
    assert isinstance(seconds, float) and seconds >= 0
    baseline = json.loads((GOLDEN / "pipeline_determinantal.json").read_text())
    assert envelope == baseline


def test_text_mode_emits_flat_lines(capsys):
    code, out = run_cli(capsys, ["dim", DET, "--text"])
    assert code == 0
    assert "2" in out and "{" not in out
    code, out = run_cli(capsys, ["fpure", DET, "--text"])
    assert code == 0
    assert "true" in out


def test_membership_ideal_override(capsys):
    argv = [
        "membership", DET,
        "--poly", "x2^2*x3^2",
        "--ideal", "x2^3, x3^3",
    ]
    code, out = run_cli(capsys, argv)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["member"] is False
    assert result["normal_form"] == "x2^2*x3^2"
    code, out = run_cli(capsys, ["membership", DET, "--poly", "x2^4", "--ideal", "x2^3, x3^3"])
    assert json.loads(out)["result"]["member"] is True


def test_emax_flag_overrides_the_file(capsys):
    _, out = run_cli(capsys, ["pipeline", DET, "--emax", "1"])
    envelope = json.loads(out)
    assert envelope["result"]["criterion"]["e_max"] == 1
    assert envelope["input"]["flags"]["e_max"] == 1


def test_module_execution_matches_in_process_output():
    proc = subprocess.run(
        [sys.executable, "-m", "froblab.cli", "dim", DET],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "dim_determinantal.json").read_text(encoding="utf-8")
