import json
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from multclass.cli import FnSpecError, parse_fn_spec, run

GOLDEN = Path(__file__).parent / "golden"


def read_schema():
    text = resources.files("multclass.schemas").joinpath("report.schema.json").read_text()
    return json.loads(text)


def run_capture(capsys, argv):
    rc = run(argv)
    out = capsys.readouterr().out
    return rc, out


def test_eval_tsv_golden(capsys):
    rc, out = run_capture(capsys, ["eval", "--fn", "c:4", "--n", "1..8", "--no-timing"])
    assert rc == 0
    assert out == GOLDEN.joinpath("eval_c4.tsv").read_text()


def test_eval_json_golden(capsys):
    rc, out = run_capture(capsys, ["eval", "--fn", "c:4", "--n", "1..8", "--json", "--no-timing"])
    assert rc == 0
    assert out == GOLDEN.joinpath("eval_c4.json").read_text()


def test_classify_json_golden(capsys):
    rc, out = run_capture(
        capsys, ["classify", "--fn", "c:4", "--window", "32", "--json", "--no-timing"]
    )
    assert rc == 0
    assert out == GOLDEN.joinpath("classify_c4.json").read_text()


def test_classify_counterexample_golden(capsys):
    rc, out = run_capture(
        capsys,
        ["classify", "--fn", "selberg-not-semi", "--window", "8", "--json", "--no-timing"],
    )
    assert rc == 0
    assert out == GOLDEN.joinpath("classify_counterexample.json").read_text()


def test_verify_json_golden(capsys):
    rc, out = run_capture(
        capsys, ["verify", "--suite", "lahiri-rs", "--window", "32", "--json", "--no-timing"]
    )
    assert rc == 0
    assert out == GOLDEN.joinpath("verify_lahiri.json").read_text()


def test_reports_validate_against_schema(capsys):
    schema = read_schema()
    jsonschema.Draft7Validator.check_schema(schema)
    argvs = [
        ["eval", "--fn", "mobius", "--json", "--no-timing"],
        ["eval", "--fn", "scale:-3/2(phi)", "--n", "2..5", "--json"],
        ["classify", "--fn", "mobius", "--window", "20", "--json"],
        ["classify", "--fn", "tensor(mobius, phi)", "--window", "8", "--json", "--no-timing"],
        ["classify", "--fn", "c_bar:12", "--window", "48", "--json", "--no-timing"],
        ["verify", "--suite", "mu-bar-dual", "--window", "16", "--json"],
    ]
    for argv in argvs:
        rc, out = run_capture(capsys, argv)
        assert rc == 0, argv
        jsonschema.validate(json.loads(out), schema)


def test_golden_files_validate_against_schema():
    schema = read_schema()
    for path in sorted(GOLDEN.glob("*.json")):
        jsonschema.validate(json.loads(path.read_text()), schema)


def test_eval_flag_parameters(capsys):
    rc_flag, out_flag = run_capture(capsys, ["eval", "--fn", "c", "--r", "4", "--no-timing"])
    rc_colon, out_colon = run_capture(capsys, ["eval", "--fn", "c:4", "--no-timing"])
    assert rc_flag == rc_colon == 0
    assert out_flag == out_colon


def test_eval_range_single_value(capsys):
    rc, out = run_capture(capsys, ["eval", "--fn", "phi", "--n", "7", "--no-timing"])
    assert rc == 0
    assert out == "n\tvalue\n7\t6\n"


def test_expect_pass_and_fail(capsys):
    rc, _ = run_capture(
        capsys,
        ["classify", "--fn", "mobius", "--window", "16", "--expect", "multiplicative"],
    )
    assert rc == 0
    rc, out = run_capture(
        capsys,
        ["classify", "--fn", "scale:2(mobius)", "--window", "16", "--expect", "multiplicative"],
    )
    assert rc == 1
    assert "expectation failed" in out


def test_expect_rearick_row(capsys):
    rc, _ = run_capture(
        capsys, ["classify", "--fn", "c:4", "--window", "16", "--expect", "rearick"]
    )
    assert rc == 0


def test_usage_errors_exit_two(capsys):
    assert run(["eval", "--fn", "nosuchfn"]) == 2
    assert run(["eval", "--fn", "c:4", "--n", "5..2"]) == 2
    assert run(["eval", "--fn", "selberg-not-semi"]) == 2
    assert run(["eval", "--fn", "c"]) == 2  # bare c without --r
    assert run(["verify", "--suite", "bogus"]) == 2
    assert run(["classify", "--fn", "mobius", "--arity", "2"]) == 2
    assert run(["classify", "--fn", "mobius", "--window", "1"]) == 2
    capsys.readouterr()


def test_verify_failure_exits_one(capsys, monkeypatch):
    import multclass.suites as suites
    from multclass.suites import Check, SuiteResult

    def broken(window):
        return SuiteResult("rearick", window, (Check("boom", False, "synthetic"),))

    monkeypatch.setitem(suites.SUITES, "rearick", broken)
    rc, out = run_capture(capsys, ["verify", "--suite", "rearick", "--window", "4"])
    assert rc == 1
    assert "FAIL" in out


def test_json_deterministic(capsys):
    argv = ["classify", "--fn", "dirichlet(c:4, one)", "--window", "24", "--json", "--no-timing"]
    rc1, out1 = run_capture(capsys, argv)
    rc2, out2 = run_capture(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_timing_present_by_default(capsys):
    rc, out = run_capture(capsys, ["eval", "--fn", "one", "--n", "1..2", "--json"])
    assert rc == 0
    assert "timing" in json.loads(out)
    rc, out = run_capture(capsys, ["eval", "--fn", "one", "--n", "1..2", "--json", "--no-timing"])
    assert "timing" not in json.loads(out)


def test_parse_fn_spec_shapes():
    assert parse_fn_spec("mobius").name == "mobius"
    assert parse_fn_spec("c:12").name == "c:12"
    assert parse_fn_spec("dirichlet(c:4, one)").name == "dirichlet(c:4,one)"
    assert parse_fn_spec("gcdk:12(phi)").name == "gcdk:12(phi)"
    assert parse_fn_spec("tensor(mobius, phi)").arity == 2
    assert parse_fn_spec("scale:-3/2(phi)")(4) == -3


def test_parse_fn_spec_errors():
    for bad in (
        "",
        "c:",
        "c:0",
        "scale(mobius)",
        "scale:0(mobius)",
        "dirichlet(mobius)",
        "dirichlet(mobius, one, phi)",
        "tensor(mobius, tensor(one, one))",
        "mobius(one)",
        "c:4 trailing",
        "product(tensor(one,one), mobius)",
    ):
        with pytest.raises(FnSpecError):
            parse_fn_spec(bad)


def test_every_suite_runs_clean(capsys):
    from multclass.suites import SUITES

    for name in SUITES:
        rc, out = run_capture(capsys, ["verify", "--suite", name, "--window", "8", "--no-timing"])
        assert rc == 0, (name, out)


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "multclass", "eval", "--fn", "mobius", "--n", "1..4", "--no-timing"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "n\tvalue\n1\t1\n2\t-1\n3\t-1\n4\t0\n"
