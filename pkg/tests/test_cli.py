"""Command-line interface: subcommands, formats, exit codes, determinism."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from lucaslab.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# --- single-query subcommands ---------------------------------------------------

def test_term_json(capsys):
    code, out = run_cli(capsys, "term", "-A", "1", "-B", "1", "-n", "10")
    assert code == 0
    assert json.loads(out) == {"A": 1, "B": 1, "n": 10, "term": "55"}


def test_term_big_value_as_string(capsys):
    code, out = run_cli(capsys, "term", "-A", "1", "-B", "1", "-n", "300")
    value = json.loads(out)["term"]
    assert isinstance(value, str)
    assert int(value) == 222232244629420445529739893461909967206666939096499764990979600


def test_term_csv(capsys):
    code, out = run_cli(capsys, "term", "-A", "2", "-B", "1", "-n", "7",
                        "--format", "csv")
    assert code == 0
    assert out == "A,B,n,term\n2,1,7,169\n"


def test_term_mod(capsys):
    code, out = run_cli(capsys, "term-mod", "-A", "1", "-B", "1", "-n", "10", "-m", "7")
    assert json.loads(out)["residue"] == 6


def test_period(capsys):
    code, out = run_cli(capsys, "period", "-A", "1", "-B", "1", "-m", "100")
    assert code == 0 and json.loads(out)["period"] == 300


def test_cycle(capsys):
    code, out = run_cli(capsys, "cycle", "-A", "1", "-B", "2", "-m", "4")
    rec = json.loads(out)
    assert (rec["pure"], rec["tail_len"], rec["cycle_len"]) == (False, 2, 2)


def test_rank_with_absent_alpha(capsys):
    code, out = run_cli(capsys, "rank", "-A", "1", "-B", "2", "-m", "4")
    assert json.loads(out)["alpha"] is None


def test_period_law(capsys):
    code, out = run_cli(capsys, "period-law", "-A", "1", "-B", "1", "--p", "2", "--e", "3")
    rec = json.loads(out)
    assert rec["ladder"] == [[1, 3], [2, 6], [3, 12]] and rec["law_holds"]


def test_squares_law(capsys):
    code, out = run_cli(capsys, "squares-law", "-A", "2", "-B", "1", "--p", "3", "--e", "2")
    rec = json.loads(out)
    assert rec["ladder"] == [[1, 4], [2, 12]] and rec["law_holds"]


def test_repetition(capsys):
    code, out = run_cli(capsys, "repetition", "-A", "1", "-B", "1", "--p", "5")
    rec = json.loads(out)
    assert rec["base_rank"] == 5 and rec["observed_next_rank"] == 25 and rec["holds"]


def test_divisibility_subcommands(capsys):
    code, out = run_cli(capsys, "square-div", "-A", "1", "-B", "1", "-n", "5",
                        "--limit", "10")
    assert code == 0 and json.loads(out)["holds"]
    code, out = run_cli(capsys, "power-div", "-A", "1", "-B", "1", "-n", "4",
                        "--limit", "2")
    assert code == 0 and json.loads(out)["holds"]
    code, out = run_cli(capsys, "div-seq", "-A", "1", "-B", "1",
                        "--a-max", "12", "--b-max", "36")
    rec = json.loads(out)
    assert rec["holds"] and rec["degenerate"] == [1, 2]


def test_zeros(capsys):
    code, out = run_cli(capsys, "zeros", "-A", "1", "-B", "1", "-m", "5", "--limit", "40")
    rec = json.loads(out)
    assert rec["holds"] and rec["alpha"] == 5


def test_bound(capsys):
    code = main(["bound", "-A", "1", "-B", "1", "-m", "10", "--limit", "160"])
    captured = capsys.readouterr()
    assert code == 0
    recs = [json.loads(line) for line in captured.out.splitlines()]
    assert {"A": 1, "B": 1, "base": 10, "n": 150, "z": 2} in recs
    assert "max z(n)/log2(n)" in captured.err


def test_identities(capsys):
    code, out = run_cli(capsys, "identities", "-A", "2", "-B", "1")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert all(r["holds"] for r in recs)
    assert {r["check"] for r in recs} == {
        "multiplication_formula", "det_power_identity", "period_step_congruence",
        "gcd_companion", "cassini_sign_law",
    }


def test_wss(capsys):
    code, out = run_cli(capsys, "wss", "-A", "2", "-B", "1", "--limit", "49")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs == [
        {"A": 2, "B": 1, "p": 13, "k_p": 28, "k_p2": 28},
        {"A": 2, "B": 1, "p": 31, "k_p": 30, "k_p2": 30},
    ]


def test_atlas_csv(capsys):
    code, out = run_cli(capsys, "atlas", "--A-range", "1..1", "--B-range", "1..1",
                        "--m-range", "2..5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "A,B,m,pure,tail_len,cycle_len,alpha"
    assert len(lines) == 5
    assert "1,1,5,true,0,20,5" in lines


def test_atlas_deterministic(capsys):
    # Negative bounds use the --opt=value spelling.
    args = ["atlas", "--A-range=-1..1", "--B-range", "1,2", "--m-range", "2..9"]
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert out1 == out2 and code1 == code2 == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "row.json"
    code = main(["term", "-A", "1", "-B", "1", "-n", "10", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert json.loads(target.read_text()) == {"A": 1, "B": 1, "n": 10, "term": "55"}


# --- verify subcommand ------------------------------------------------------------

def test_verify_with_config(tmp_path, capsys):
    config = tmp_path / "verify.cfg"
    config.write_text("A_min = 1\nA_max = 1\nB_min = 1\nB_max = 1\n"
                      "suites = square_divisibility, cassini_sign_law\n")
    code, out = run_cli(capsys, "verify", "--config", str(config))
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1]["suite"] == "summary"
    assert "failed=0" in recs[-1]["detail"]
    assert all(r["classification"] == "pass" for r in recs[:-1])


def test_verify_empty_grid(tmp_path, capsys):
    config = tmp_path / "verify.cfg"
    config.write_text("A_min = 3\nA_max = 2\n")
    code, out = run_cli(capsys, "verify", "--config", str(config))
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 1 and recs[0]["suite"] == "summary"


def test_verify_known_exceptions_do_not_fail(tmp_path, capsys):
    config = tmp_path / "verify.cfg"
    config.write_text("A_min = 1\nA_max = 1\nB_min = 1\nB_max = 1\n"
                      "suites = repetition_law\n")
    code, out = run_cli(capsys, "verify", "--config", str(config))
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    kinds = {r["classification"] for r in recs[:-1]}
    assert kinds == {"pass", "known-exception"}


def test_verify_bad_config_is_usage_error(tmp_path, capsys):
    config = tmp_path / "verify.cfg"
    config.write_text("nonsense = 1\n")
    code = main(["verify", "--config", str(config)])
    capsys.readouterr()
    assert code == 2


# --- exit codes --------------------------------------------------------------------

def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["term", "-A", "1", "-B", "1"])    # missing -n
    capsys.readouterr()
    assert exc.value.code == 2


def test_domain_error_exit_2(capsys):
    code = main(["period", "-A", "1", "-B", "2", "-m", "4"])
    err = capsys.readouterr().err
    assert code == 2 and "no pure period" in err


def test_zero_B_exit_2(capsys):
    code = main(["term", "-A", "1", "-B", "0", "-n", "3"])
    capsys.readouterr()
    assert code == 2


def test_budget_exit_3(capsys):
    code = main(["cycle", "-A", "1", "-B", "1", "-m", "100000", "--budget", "1000"])
    capsys.readouterr()
    assert code == 3
    code = main(["term", "-A", "1", "-B", "1", "-n", "10000000000", "--budget", "100"])
    capsys.readouterr()
    assert code == 3


def test_console_script_installed():
    out = subprocess.run([sys.executable, "-m", "lucaslab.cli", "--help"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "wss" in out.stdout and "atlas" in out.stdout


@pytest.mark.parametrize("argv", [
    ["term", "-A", "1", "-B", "1", "-n", "200"],
    ["cycle", "-A", "1", "-B", "2", "-m", "12"],
    ["period-law", "-A", "2", "-B", "1", "--p", "3", "--e", "3"],
    ["verify", "--config", ""],   # config path filled in below
])
def test_json_output_reparse_reemit_identical(tmp_path, capsys, argv):
    # Parsing any emitted JSON-lines file and re-emitting it with the same
    # writer settings reproduces the bytes.
    if argv[0] == "verify":
        cfg = tmp_path / "v.cfg"
        cfg.write_text("A_min = 1\nA_max = 1\nB_min = 1\nB_max = 1\n"
                       "suites = cassini_sign_law\n")
        argv = ["verify", "--config", str(cfg)]
    main(argv)
    out = capsys.readouterr().out
    reemitted = "".join(
        json.dumps(json.loads(line), separators=(",", ":")) + "\n"
        for line in out.splitlines()
    )
    assert reemitted == out


def test_csv_output_reparse_reemit_identical(capsys):
    import csv as csv_mod
    import io
    main(["identities", "-A", "1", "-B", "1", "--format", "csv"])
    out = capsys.readouterr().out
    rows = list(csv_mod.reader(io.StringIO(out)))
    sink = io.StringIO()
    csv_mod.writer(sink, lineterminator="\n").writerows(rows)
    assert sink.getvalue() == out
