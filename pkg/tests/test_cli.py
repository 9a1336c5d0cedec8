import json

import pytest

import cli

TREFOIL = "(O,o,0|1;(2,1),(3,1));boundaries=1"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reversible(capsys):
    code, out, _ = run(capsys, "reversible", "--group", "pslz", "--word", "a b a b^2")
    assert code == 0
    result = json.loads(out)
    assert result["verdict"] == "yes"
    assert result["certificate"]["reverser"] == "a"


def test_not_reversible_is_decided(capsys):
    code, out, _ = run(capsys, "reversible", "--word", "a b")
    assert code == 0
    assert json.loads(out)["verdict"] == "no"


def test_gen_torsion_parabolic_square(capsys):
    code, out, _ = run(capsys, "gen-torsion", "--n", "3", "--group", "pslz", "--word", "a b a b")
    assert code == 0
    certificate = json.loads(out)["certificate"]
    assert (certificate["h1"], certificate["k"]) == ("b^2", "b")


def test_gen_torsion_unknown_within_bound(capsys):
    code, out, _ = run(capsys, "gen-torsion", "--n", "3", "--word", "a b a b a b^2 a b^2", "--bound", "1")
    assert code == 2
    result = json.loads(out)
    assert result["verdict"] == "unknown-within-bound"
    assert result["budget"] == {"bound": 1}


def test_seifert_families(capsys):
    code, out, _ = run(capsys, "seifert", "--spec", TREFOIL, "families")
    assert code == 0
    assert len(json.loads(out)["data"]["families"]) == 1


def test_seifert_quotient(capsys):
    code, out, _ = run(capsys, "seifert", "--spec", TREFOIL, "quotient")
    assert code == 0
    assert json.loads(out)["data"]["scheme"] == "c1:2, c2:3"


def test_braid_normal_form(capsys):
    code, out, _ = run(capsys, "braid", "--word", "s1 s2 s1 s2 s1 s2")
    assert code == 0
    result = json.loads(out)
    assert result["normal_form"]["m"] == 1
    assert result["data"]["exponent_sum"] == 6


def test_classify_text_output(capsys):
    code, out, _ = run(capsys, "--format", "text", "classify", "--word", "a b a b^2")
    assert code == 0
    assert out.splitlines()[0] == "verdict: hyperbolic"


def test_verify_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "gen-torsion", "--n", "3", "--word", "a b a b")
    code, verified, _ = run(capsys, "verify", "--certificate", out)
    assert code == 0
    assert json.loads(verified)["verdict"] == "valid"
    path = tmp_path / "cert.json"
    path.write_text(out)
    _, verified, _ = run(capsys, "verify", "--file", str(path))
    assert json.loads(verified)["verdict"] == "valid"


def test_output_is_repeatable(capsys):
    first = run(capsys, "gen-torsion", "--n", "3", "--word", "a b a b a b^2 a b")
    second = run(capsys, "gen-torsion", "--n", "3", "--word", "a b a b a b^2 a b")
    assert first == second


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "pslz-reversible", "--max-syllables", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "agree"


@pytest.mark.parametrize(
    "argv, code_token",
    [
        (["reversible", "--word", "a c"], "unknown-generator"),
        (["reversible", "--group", "free", "--word", "a"], "parse-error"),
        (["reversible", "--word", "1"], "trivial-element"),
        (["gen-torsion", "--n", "5", "--word", "a b"], "invalid-invariant"),
        (["gen-torsion", "--n", "3", "--word", "a b a b^2", "--bound", "0"], "nonpositive-bound"),
        (["verify", "--certificate", "{}"], "malformed-certificate"),
    ],
)
def test_errors(capsys, argv, code_token):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith(f"error: {code_token}:")


def test_usage_errors_exit_one(capsys):
    code, _, err = run(capsys, "reversible")
    assert code == 1
    assert "error: usage:" in err
