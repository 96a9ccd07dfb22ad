"""Command-line interface: commands, formats, exit codes, determinism."""

import json

from hhbv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_example(capsys):
    code, out, _ = run(capsys, "dims", "--e", "2", "--N", "4", "--field", "p:2",
                       "--max-degree", "5")
    assert code == 0
    record = json.loads(out)
    assert record["dims"] == [2, 2, 2, 2, 2, 2]
    assert record["oracle_checked"] is True


def test_bracket_example(capsys):
    code, out, _ = run(capsys, "bracket", "--e", "2", "--N", "4",
                       "--field", "p:2", "x[0,2]", "v[0,1]")
    assert code == 0
    record = json.loads(out)
    assert record["result_pretty"] == "x[0,2]"     # -x = x in char 2
    assert record["oracle_checked"] is True


def test_delta_example(capsys):
    code, out, _ = run(capsys, "delta", "--e", "2", "--N", "3", "--field", "q",
                       "y[0,1]")
    assert code == 0
    record = json.loads(out)
    assert record["result_pretty"] == "2*x[0,0]"
    assert record["oracle_checked"] is True


def test_cup_with_linear_combination(capsys):
    code, out, _ = run(capsys, "cup", "--e", "2", "--N", "4", "--field", "p:2",
                       "x[0,0] + x[0,2]", "v[0,1]")
    assert code == 0
    record = json.loads(out)
    assert record["result_pretty"] == "v[0,1] + v[0,3]"


def test_verify_suites(capsys):
    for suite in ("complexes", "gerstenhaber", "presentation", "bv", "criterion"):
        code, out, _ = run(capsys, "verify", suite, "--e", "2", "--N", "4",
                           "--field", "p:2", "--max-degree", "5")
        assert code == 0, (suite, out)
        record = json.loads(out)
        assert record["ok"] and all(c["ok"] for c in record["checks"])


def test_verify_all_semisimple_example(capsys):
    code, out, _ = run(capsys, "verify", "all", "--e", "3", "--N", "2",
                       "--field", "p:2", "--max-degree", "5")
    assert code == 0
    record = json.loads(out)
    names = [c["check"] for c in record["checks"]]
    assert any("Jacobi" not in n for n in names)
    assert any(c.get("skipped") for c in record["checks"])  # criterion skipped


def test_verify_chain_level_expected_failure(capsys):
    code, out, _ = run(capsys, "verify", "gerstenhaber", "--e", "2", "--N", "3",
                       "--field", "p:2", "--chain-level")
    assert code == 0
    record = json.loads(out)
    assert record["checks"][0]["ok"]


def test_chain_level_needs_recorded_regime(capsys):
    code, _, err = run(capsys, "verify", "gerstenhaber", "--e", "3", "--N", "2",
                       "--field", "p:2", "--chain-level")
    assert code == 2 and "witness" in err


def test_exit_code_usage_errors(capsys):
    assert run(capsys, "dims", "--e", "2", "--N", "4", "--field", "p:4")[0] == 2
    assert run(capsys, "dims", "--e", "0", "--N", "4", "--field", "q")[0] == 2
    assert run(capsys, "bracket", "--e", "2", "--N", "4", "--field", "p:2",
               "y[0,1]", "x[0,2]")[0] == 2          # y is not in this regime
    assert run(capsys, "bracket", "--e", "2", "--N", "4", "--field", "p:2",
               "3*", "x[0,2]")[0] == 2
    assert run(capsys, "dims", "--e", "2", "--N", "3", "--field", "q",
               "--max-degree", "11")[0] == 2


def test_max_degree_override(capsys):
    code, out, _ = run(capsys, "dims", "--e", "2", "--N", "3", "--field", "q",
                       "--max-degree", "11", "--force")
    assert code == 0
    assert len(json.loads(out)["dims"]) == 12


def test_grid(capsys):
    code, out, _ = run(capsys, "dims", "--e", "1", "--N", "2", "--field", "q",
                       "--grid", "1:2,2:3", "--max-degree", "2")
    assert code == 0
    records = json.loads(out)
    assert [(r["params"]["e"], r["params"]["N"]) for r in records] == \
        [(1, 2), (1, 3), (2, 2), (2, 3)]


def test_formats_and_out(tmp_path, capsys):
    out_path = tmp_path / "report.csv"
    code, _, _ = run(capsys, "dims", "--e", "2", "--N", "3", "--field", "q",
                     "--format", "csv", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[0] == "command,e,N,field,regime,detail,result"
    code, out, _ = run(capsys, "basis", "--e", "2", "--N", "4", "--field", "p:2",
                       "--format", "md", "--max-degree", "1")
    assert code == 0 and out.startswith("| command |")


def test_deterministic_output(capsys):
    args = ("verify", "bv", "--e", "2", "--N", "3", "--field", "p:2",
            "--max-degree", "4")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second


def test_element_parse_errors(capsys):
    # mixed degrees inside one expression
    code, _, err = run(capsys, "cup", "--e", "2", "--N", "4", "--field", "p:2",
                       "x[0,0] + v[0,1]", "v[0,1]")
    assert code == 2 and "mixed degrees" in err
