"""End-to-end command-line coverage for every documented flag combination."""

import io
import json

from abperfect import SweepReport
from abperfect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# params
# ---------------------------------------------------------------------------


def test_params_named_json(capsys):
    code, out, _ = run(capsys, "params", "--named", "p4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"omega": 2, "chi": 2, "gamma": 3, "alpha": 3, "psi": 3}


def test_params_g6_text(capsys):
    code, out, _ = run(capsys, "params", "--g6", "Ch")
    assert code == 0
    assert out.strip() == "omega=2  chi=2  gamma=3  alpha=3  psi=3"


def test_params_file_csv(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Ch\nBw\n")
    code, out, _ = run(capsys, "params", "--file", str(path), "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "omega,chi,gamma,alpha,psi"
    assert lines[1] == "2,2,3,3,3"
    assert lines[2] == "3,3,3,3,3"


def test_params_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Ch\n"))
    code, out, _ = run(capsys, "params", "--file", "-", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"omega": 2, "chi": 2, "gamma": 3, "alpha": 3, "psi": 3}]


def test_params_named_variants(capsys):
    for token, omega in [("k5", 5), ("c5", 2), ("e3", 1), ("k2,3", 2), ("p3+k2", 2), ("3k2", 2)]:
        code, out, _ = run(capsys, "params", "--named", token, "--format", "json")
        assert code == 0
        assert json.loads(out)["omega"] == omega


def test_params_json_is_byte_deterministic(capsys):
    _, first, _ = run(capsys, "params", "--named", "c5", "--format", "json")
    _, second, _ = run(capsys, "params", "--named", "c5", "--format", "json")
    assert first == second


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def test_check_p4_json(capsys):
    code, out, _ = run(
        capsys, "check", "--a", "omega", "--b", "psi", "--named", "p4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["perfect"] is False
    assert payload["counterexample"]["vertices"] == [0, 1, 2, 3]


def test_check_text_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--a", "omega", "--b", "chi", "--named", "k4")
    assert code == 0 and out.strip() == "omega-chi-perfect"
    path = tmp_path / "in.g6"
    path.write_text("Ch\n")
    code, out, _ = run(
        capsys, "check", "--a", "omega", "--b", "psi", "--file", str(path),
        "--format", "csv",
    )
    assert code == 0
    assert out.strip().splitlines() == [
        "a,b,perfect,vertices,a_value,b_value",
        "omega,psi,False,0 1 2 3,2,3",
    ]


def test_check_rejects_reversed_pair(capsys):
    code, _, err = run(capsys, "check", "--a", "psi", "--b", "omega", "--named", "p4")
    assert code == 2
    assert "precede" in err


# ---------------------------------------------------------------------------
# recognize
# ---------------------------------------------------------------------------


def test_recognize_json(capsys):
    code, out, _ = run(capsys, "recognize", "--named", "k3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "kind": "complete", "m": 3, "children": [], "reason": None,
    }


def test_recognize_text_tree(capsys):
    code, out, _ = run(capsys, "recognize", "--g6", "Bo")  # K1 join (K1 u K1)? P3
    assert code == 0
    assert "join" in out


def test_recognize_csv_rows(capsys):
    code, out, _ = run(capsys, "recognize", "--named", "p4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "depth,kind,m,reason"
    assert lines[1].startswith("0,rejected,,")


# ---------------------------------------------------------------------------
# forbidden
# ---------------------------------------------------------------------------


def test_forbidden_json(capsys):
    code, out, _ = run(
        capsys, "forbidden", "--family", "omega_psi_quartet", "--named", "p4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["free"] is False
    assert payload["witness"] == {"pattern": "P4", "vertices": [0, 1, 2, 3]}


def test_forbidden_text_and_csv(capsys):
    code, out, _ = run(
        capsys, "forbidden", "--family", "odd_holes_and_antiholes", "--named", "c5",
    )
    assert code == 0 and "contains C2k+1" in out
    code, out, _ = run(
        capsys, "forbidden", "--family", "p4_only", "--named", "k4",
        "--format", "csv",
    )
    assert code == 0
    assert out.strip().splitlines()[1] == "P4,True,,"


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def test_sweep_json_passes(capsys):
    code, out, _ = run(
        capsys, "sweep", "--theorem", "theorem4", "--max-n", "4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["checked"] == 18 and payload["violations"] == []


def test_sweep_text_and_jobs(capsys):
    code, out, _ = run(
        capsys, "sweep", "--theorem", "eq1_chain", "--max-n", "4",
        "--jobs", "2",
    )
    assert code == 0
    assert "pass" in out


def test_sweep_violations_exit_one(capsys, monkeypatch):
    # No true theorem can fail, so the exit-code mapping is checked with a
    # stubbed report.
    fake = SweepReport("eq1_chain", 4, 18, [("Ch", "synthetic")], 1)
    monkeypatch.setattr("abperfect.cli.sweep", lambda *a, **kw: fake)
    code, out, _ = run(capsys, "sweep", "--theorem", "eq1_chain", "--max-n", "4")
    assert code == 1
    assert "synthetic" in out


def test_sweep_over_cap_exits_two(capsys):
    code, _, err = run(capsys, "sweep", "--theorem", "theorem4", "--max-n", "9")
    assert code == 2
    assert "capped" in err


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


def test_cycles_table(capsys):
    code, out, _ = run(capsys, "cycles", "--max-n", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,alpha,psi,predicted_equal,equal"
    assert lines[1] == "3,3,3,True,True"
    assert lines[2] == "4,2,3,False,False"


def test_cycles_json(capsys):
    code, out, _ = run(capsys, "cycles", "--max-n", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [row["n"] for row in rows] == [3, 4, 5]


# ---------------------------------------------------------------------------
# usage errors
# ---------------------------------------------------------------------------


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "params")[0] == 2  # no source
    assert run(capsys, "params", "--named", "wat")[0] == 2
    assert run(capsys, "params", "--g6", "")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "sweep", "--theorem", "bogus", "--max-n", "3")[0] == 2
    assert run(capsys, "params", "--named", "p4", "--format", "yaml")[0] == 2
    # two sources at once
    assert run(capsys, "params", "--named", "p4", "--g6", "Ch")[0] == 2


def test_capacity_exits_two_naming_cap(capsys):
    code, _, err = run(capsys, "params", "--named", "e14")
    assert code == 2
    assert "capped at 13" in err


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "params", "--file", "/no/such/file.g6")
    assert code == 2
    assert "error" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_every_flag_combination_smokes(capsys, tmp_path):
    # Cross-coverage: each subcommand against each source kind and format.
    path = tmp_path / "in.g6"
    path.write_text("Ch\n")
    sources = [("--g6", "Bw"), ("--named", "k3"), ("--file", str(path))]
    for fmt in ("text", "json", "csv"):
        for source in sources:
            assert run(capsys, "params", *source, "--format", fmt)[0] == 0
            assert run(
                capsys, "check", "--a", "chi", "--b", "gamma", *source,
                "--format", fmt,
            )[0] == 0
            assert run(capsys, "recognize", *source, "--format", fmt)[0] == 0
            for family in (
                "p4_only", "achro_triple", "omega_psi_quartet",
                "odd_holes_and_antiholes",
            ):
                assert run(
                    capsys, "forbidden", "--family", family, *source,
                    "--format", fmt,
                )[0] == 0
        assert run(
            capsys, "sweep", "--theorem", "lemma2", "--max-n", "6",
            "--format", fmt,
        )[0] == 0
        assert run(capsys, "cycles", "--max-n", "4", "--format", fmt)[0] == 0
