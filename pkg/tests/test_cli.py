import json

import pytest

from algnorm.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return {
        "zero": write("zero.json", {"family": "zero_product"}),
        "evens": write("evens.json", {"family": "masked_pointwise",
                                      "mask": {"kind": "evens"}}),
        "all": write("all.json", {"family": "masked_pointwise",
                                  "mask": {"kind": "all"}}),
        "poly": write("poly.json", {"family": "truncated_poly_ideal",
                                    "n": 3, "N": 12}),
        "bad_table": write("bad_table.json", {
            "family": "structure_constants", "dim": 2,
            "table": [[1, 1, 2, {"re": "1", "im": "0"}],
                      [1, 2, 1, {"re": "1", "im": "0"}]],
        }),
        "e7": write("e7.json", {"coeffs": {"7": {"re": "1", "im": "0"}}}),
        "e2": write("e2.json", {"coeffs": {"2": {"re": "1", "im": "0"}}}),
        "garbage": write("garbage.json", {"family": "nope"}),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_table(capsys, files):
    code, out, _ = run(capsys, "analyze", files["poly"])
    assert code == 0
    assert "codimension: 3" in out
    assert "x^3" in out and "x^4" in out and "x^5" in out
    assert "verdict: no" in out


def test_analyze_json(capsys, files):
    code, out, _ = run(capsys, "analyze", files["zero"], "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["codimension"] == "infinite"
    assert report["dsap"]["verdict"] is True


def test_analyze_parse_error(capsys, files, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{oops")
    code, _, err = run(capsys, "analyze", str(broken))
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(capsys, "analyze", files["garbage"])
    assert code == 2
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2


def test_analyze_not_associative(capsys, files):
    code, _, err = run(capsys, "analyze", files["bad_table"])
    assert code == 2 and "associativity" in err


def test_norms_theorem(capsys, files):
    code, out, _ = run(capsys, "norms", files["zero"],
                       "--functional", "theorem", "--eval", files["e7"],
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    row = report["values"][0]
    assert row["base"]["exact"] == "1"
    assert row["phi"]["re"] == "7"
    assert row["p"]["exact"] == "8"


def test_norms_corollary_anchor(capsys, files):
    code, out, _ = run(capsys, "norms", files["zero"],
                       "--functional", "corollary:2", "--eval", files["e2"],
                       "--format", "json")
    assert code == 0
    row = json.loads(out)["values"][0]
    assert row["phi"]["re"] == "0" and row["p"]["exact"] == "1"


def test_norms_empty_complement_exit_3(capsys, files):
    code, _, err = run(capsys, "norms", files["all"],
                       "--functional", "theorem", "--eval", files["e7"])
    assert code == 3 and "no independent direction" in err


def test_norms_bad_functional(capsys, files):
    code, _, _ = run(capsys, "norms", files["zero"],
                     "--functional", "corollary:x", "--eval", files["e7"])
    assert code == 2


def test_witness_csv(capsys, files):
    code, out, _ = run(capsys, "witness", files["zero"],
                       "--m", "1", "--n", "2", "--k-max", "4")
    assert code == 0
    assert out == ("k,witness_index,p_m,p_n,ratio\n"
                   "2,3,3,2,3/2\n"
                   "3,5,4,2,2\n"
                   "4,7,5,2,5/2\n")


def test_witness_json(capsys, files):
    code, out, _ = run(capsys, "witness", files["zero"],
                       "--m", "2", "--n", "1", "--k-max", "2",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["rows"][0]["ratio"] == "3/2"
    assert report["unbounded"] is True


def test_witness_flag_and_precondition_errors(capsys, files):
    code, _, _ = run(capsys, "witness", files["zero"], "--m", "2", "--n", "2")
    assert code == 2
    code, _, _ = run(capsys, "witness", files["poly"], "--m", "1", "--n", "2")
    assert code == 3


def test_check_passes(capsys, files):
    code, out, _ = run(capsys, "check", files["evens"],
                       "--trials", "150", "--seed", "42")
    assert code == 0
    assert "suite: PASS" in out


def test_check_zero_trials_vacuous(capsys, files):
    code, out, _ = run(capsys, "check", files["zero"], "--trials", "0")
    assert code == 0
    assert "vacuous" in out


def test_check_negative_control_exit_1(capsys, files):
    code, out, _ = run(capsys, "check", files["evens"], "--trials", "60",
                       "--negative-control")
    assert code == 1
    assert "CONTROLLED-FAIL" in out


def test_check_seed_env_override(capsys, files, monkeypatch):
    monkeypatch.setenv("ALGNORM_SEED", "777")
    code, out, _ = run(capsys, "check", files["zero"], "--trials", "10",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 777


def test_examples_list(capsys):
    code, out, _ = run(capsys, "examples", "--list")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip() and "params:" not in l]
    assert len(lines) >= 7
    assert sum(1 for l in lines if "[doc ]" in l) == 2


def test_examples_run_poly(capsys):
    code, out, _ = run(capsys, "examples", "--run", "ex4", "--n", "2",
                       "--N", "8", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["analysis"]["codimension"] == "2"


def test_examples_run_symbolic(capsys):
    code, out, _ = run(capsys, "examples", "--run", "ex1")
    assert code == 0
    assert "documentation" in out


def test_examples_unknown(capsys):
    code, _, err = run(capsys, "examples", "--run", "ex-unknown")
    assert code == 2


def test_repeated_invocations_identical(capsys, files):
    _, out1, _ = run(capsys, "analyze", files["poly"], "--format", "json")
    _, out2, _ = run(capsys, "analyze", files["poly"], "--format", "json")
    assert out1 == out2
    _, w1, _ = run(capsys, "witness", files["zero"], "--m", "1", "--n", "3",
                   "--k-max", "20")
    _, w2, _ = run(capsys, "witness", files["zero"], "--m", "1", "--n", "3",
                   "--k-max", "20")
    assert w1 == w2
