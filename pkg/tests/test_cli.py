"""Command-line behavior: golden outputs, exit codes, file round-trips.

Everything runs in-process through main(argv) except one subprocess check
of the `python -m roncoalg` entry point.
"""

import json
import subprocess
import sys

import pytest

from roncoalg.cli import main
from roncoalg.jsonio import dumps_algebra, loads_algebra
from roncoalg.ronco import truncate_to_structure
from roncoalg.structure import free_nil2, ronco_to_mu

WITT_GOLDEN = "1\t2\n2\t1\n3\t2\n4\t3\n"

BAD_LEIBNIZ = """\
{"dim": 1, "kind": "leibniz",
 "bracket": [{"i": 1, "j": 1, "c": [{"k": 1, "v": "1"}]}]}
"""


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_witt_golden(capsys):
    code, out, err = run(capsys, ["witt", "--gens", "2", "--max", "4"])
    assert (code, out, err) == (0, WITT_GOLDEN, "")


def test_lyndon(capsys):
    code, out, _ = run(capsys, ["lyndon", "--gens", "2", "--len", "3"])
    assert code == 0
    assert out == "112\n122\n"


def test_leib_bracket_golden(capsys):
    code, out, _ = run(capsys, [
        "leib-bracket", "--gens", "3", "--expr", "1/2 * [g1,[g2,g3]] - [g3,g1]",
    ])
    assert code == 0
    assert out == "-31 + 1/2·123 - 1/2·132\n"


def test_ronco_eval_golden(capsys):
    code, out, _ = run(capsys, ["ronco-eval", "--gens", "2", "--expr", "[[g1,g1],g2]"])
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, ["ronco-eval", "--gens", "2", "--expr", "[[g1,g2],g1]"])
    assert (code, out) == (0, "[12|1]\n")
    code, out, _ = run(capsys, ["ronco-eval", "--gens", "2", "--expr", "2*g1 - 1/2*[g1,g2]"])
    assert (code, out) == (0, "2·g1 - 1/2·[1|2]\n")


def test_ronco_dims(capsys):
    code, out, _ = run(capsys, ["ronco-dims", "--gens", "2", "--max", "4"])
    assert code == 0
    assert out == "1\t2\n2\t4\n3\t2\n4\t4\n"


def test_graded_kernel_json(capsys):
    code, out, _ = run(capsys, ["graded-kernel", "--gens", "2", "--deg", "2"])
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 2
    assert obj["dimension"] == 3
    assert obj["basis"] == [
        {"deg1": ["0", "0"], "higher": [["1", 1, "1"]]},
        {"deg1": ["0", "0"], "higher": [["1", 2, "1"], ["2", 1, "1"]]},
        {"deg1": ["0", "0"], "higher": [["2", 2, "1"]]},
    ]


def test_ronco_truncate(tmp_path, capsys):
    expected = dumps_algebra(truncate_to_structure(2, 3))
    code, out, _ = run(capsys, ["ronco-truncate", "--gens", "2", "--max", "3"])
    assert (code, out) == (0, expected)
    target = tmp_path / "t23.json"
    code, out, _ = run(capsys, ["ronco-truncate", "--gens", "2", "--max", "3", "-o", str(target)])
    assert (code, out) == (0, "")
    assert target.read_text() == expected


def test_free_nil2_output(tmp_path, capsys):
    target = tmp_path / "nil2.json"
    code, out, _ = run(capsys, ["free-nil2", "--dim", "3", "-o", str(target)])
    assert (code, out) == (0, "")
    assert loads_algebra(target.read_text()) == free_nil2(3)


def test_verify_ok(tmp_path, capsys):
    path = tmp_path / "t23.json"
    path.write_text(dumps_algebra(truncate_to_structure(2, 3)))
    for variety, label in [("leibniz", "leibniz"), ("ronco", "ronco"),
                           ("symmetric", "symmetric-leibniz")]:
        code, out, _ = run(capsys, ["verify", "--variety", variety, str(path)])
        assert (code, out) == (0, f"OK: {label} verified, no violations\n"), variety
    mu_path = tmp_path / "t23-mu.json"
    mu_path.write_text(dumps_algebra(ronco_to_mu(truncate_to_structure(2, 3))))
    code, out, _ = run(capsys, ["verify", "--variety", "mu", str(mu_path)])
    assert (code, out) == (0, "OK: mu verified, no violations\n")


def test_verify_failure(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(BAD_LEIBNIZ)
    code, out, _ = run(capsys, ["verify", "--variety", "leibniz", str(path)])
    assert code == 1
    assert out == "violation: leibniz at (1,1,1): e1:1\n1 violation(s)\n"
    code, out, _ = run(capsys, ["verify", "--variety", "lie", str(path)])
    assert code == 1
    assert "violation: alternating at (1): e1:1" in out


def test_verify_kind_mismatch(tmp_path, capsys):
    path = tmp_path / "t23.json"
    path.write_text(dumps_algebra(truncate_to_structure(2, 3)))
    code, out, err = run(capsys, ["verify", "--variety", "mu", str(path)])
    assert (code, out) == (2, "")
    assert err.startswith("error:")


def test_convert_round_trip(tmp_path, capsys):
    original = dumps_algebra(truncate_to_structure(2, 3))
    src = tmp_path / "t23.json"
    src.write_text(original)
    mu = tmp_path / "mu.json"
    back = tmp_path / "back.json"
    assert run(capsys, ["convert", "--to", "mu", str(src), "-o", str(mu)])[0] == 0
    assert run(capsys, ["convert", "--to", "ronco", str(mu), "-o", str(back)])[0] == 0
    assert back.read_text() == original


def test_convert_rejects_non_ronco(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(BAD_LEIBNIZ)
    code, out, err = run(capsys, ["convert", "--to", "mu", str(path)])
    assert code == 1
    assert err.startswith("error: input does not satisfy")
    assert "violation: leibniz at (1,1,1): e1:1" in out
    assert "violation: polarized-square-bracket at (1,1,1): e1:2" in out
    assert "violation: square-bracket at (1,1): e1:1" in out
    assert "3 violation(s)" in out


def test_homology_command(tmp_path, capsys):
    path = tmp_path / "nil2.json"
    assert run(capsys, ["free-nil2", "--dim", "3", "-o", str(path)])[0] == 0
    code, out, _ = run(capsys, ["homology", "--which", "hr0", str(path)])
    assert code == 0
    assert json.loads(out)["dimension"] == 7
    code, out, _ = run(capsys, ["homology", "--which", "hl1", str(path)])
    assert json.loads(out)["dimension"] == 3
    hl2_dim = json.loads(run(capsys, ["homology", "--which", "hl2", str(path)])[1])["dimension"]
    h1ad_dim = json.loads(run(capsys, ["homology", "--which", "h1ad", str(path)])[1])["dimension"]
    assert hl2_dim == h1ad_dim
    # homology of a non-Lie Leibniz algebra: hl1 fine, hr0 refuses
    t23 = tmp_path / "t23.json"
    t23.write_text(dumps_algebra(truncate_to_structure(2, 3)))
    assert run(capsys, ["homology", "--which", "hl1", str(t23)])[0] == 0
    code, out, err = run(capsys, ["homology", "--which", "hr0", str(t23)])
    assert code == 1
    assert err.startswith("error:")


def test_input_error_exit_codes(tmp_path, capsys):
    cases = [
        ["ronco-eval", "--gens", "2", "--expr", "[g1"],
        ["ronco-eval", "--gens", "2", "--expr", "g9"],
        ["leib-bracket", "--gens", "2", "--expr", "1/0*g1"],
        ["witt", "--gens", "2", "--max", "0"],
        ["ronco-dims", "--gens", "2", "--max", "0"],
        ["verify", "--variety", "leibniz", str(tmp_path / "missing.json")],
        ["graded-kernel", "--gens", "2", "--deg", "1"],
    ]
    for argv in cases:
        code, out, err = run(capsys, argv)
        assert (code, out) == (2, ""), argv
        assert err.startswith("error:"), argv
    # malformed JSON
    path = tmp_path / "broken.json"
    path.write_text('{"dim": 2}')
    code, _, err = run(capsys, ["verify", "--variety", "leibniz", str(path)])
    assert code == 2 and err.startswith("error:")
    # homology needs a bracket algebra, not a mu one
    mu_path = tmp_path / "mu.json"
    mu_path.write_text(dumps_algebra(ronco_to_mu(truncate_to_structure(2, 3))))
    code, _, err = run(capsys, ["homology", "--which", "hl1", str(mu_path)])
    assert code == 2 and err.startswith("error:")


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


DEG9 = "[[[[[[[[g1,g2],g2],g2],g2],g2],g2],g2],g2]"


def test_degree_cap_env_override(monkeypatch, capsys):
    monkeypatch.delenv("RONCO_MAX_DEGREE", raising=False)
    code, _, err = run(capsys, ["ronco-eval", "--gens", "2", "--expr", DEG9])
    assert code == 2 and "degree" in err
    monkeypatch.setenv("RONCO_MAX_DEGREE", "9")
    code, out, _ = run(capsys, ["ronco-eval", "--gens", "2", "--expr", DEG9])
    assert (code, out) == (0, "[12222222|2]\n")
    monkeypatch.setenv("RONCO_MAX_DEGREE", "3")
    code, _, err = run(capsys, ["leib-bracket", "--gens", "2", "--expr",
                                "[[g1,g2],[g1,g2]]"])
    assert code == 2 and "degree" in err
    monkeypatch.setenv("RONCO_MAX_DEGREE", "abc")
    code, _, err = run(capsys, ["ronco-eval", "--gens", "2", "--expr", "g1"])
    assert code == 2
    assert "RONCO_MAX_DEGREE" in err
    monkeypatch.setenv("RONCO_MAX_DEGREE", "0")
    code, _, err = run(capsys, ["ronco-eval", "--gens", "2", "--expr", "g1"])
    assert code == 2
    assert "RONCO_MAX_DEGREE" in err


def test_output_is_deterministic(capsys):
    argv = ["graded-kernel", "--gens", "3", "--deg", "3"]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second
    assert first[0] == 0


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "roncoalg", "witt", "--gens", "2", "--max", "4"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert result.stdout == WITT_GOLDEN
