"""End-to-end command-line behaviour through cli.main."""

import io
import json

import pytest

from splythoff import cli, verify
from splythoff.verify import VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_word_fibonacci_prefix(capsys):
    code, out = run(capsys, "word", "--k", "2", "--n", "15")
    assert code == 0
    assert out == "010010100100101\n"


def test_word_tribonacci_prefix(capsys):
    code, out = run(capsys, "word", "--k", "3", "--n", "20")
    assert code == 0
    assert out == "01020100102010102010\n"


def test_word_with_deletion(capsys):
    code, out = run(capsys, "word", "--k", "3", "--n", "56", "--delete", "2")
    assert code == 0
    assert set(out.strip()) == {"0", "1"}
    assert out.startswith("01001001")


def test_table_splythoff_tsv(capsys):
    code, out = run(capsys, "table", "splythoff", "--n", "12")
    assert code == 0
    assert out.splitlines() == [
        "Delta\t1\t2\t4\t5\t6\t7\t9\t10\t11\t13\t14\t15",
        "A\t1\t3\t4\t6\t7\t9\t10\t12\t14\t15\t17\t18",
        "B\t2\t5\t8\t11\t13\t16\t19\t22\t25\t28\t31\t33",
        "Sigma\t3\t8\t12\t17\t20\t25\t29\t34\t39\t43\t48\t51",
    ]


def test_table_positions_has_letter_header(capsys):
    code, out = run(capsys, "table", "positions", "--k", "4", "--n", "16")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "\t" + "\t".join("0102010301020100")
    assert lines[1].startswith("X0\t1\t3\t5\t7\t9")


def test_table_beatty_matches_mex_generator(capsys):
    code, out = run(capsys, "table", "beatty", "--a", "2", "--b", "2", "--n", "12")
    assert code == 0
    assert out.splitlines() == [
        "A\t1\t2\t4\t5\t7\t8\t9\t11\t12\t14\t15\t16",
        "B\t3\t6\t10\t13\t17\t20\t23\t27\t30\t34\t37\t40",
    ]


def test_table_csv_format_flag_after_subcommand(capsys):
    code, out = run(capsys, "table", "wythoff", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "A,1,3,4\nB,2,5,7\n"


def test_export_bfile(capsys):
    code, out = run(capsys, "export", "splythoff", "--row", "A", "--n", "5")
    assert code == 0
    assert out == "1 1\n2 3\n3 4\n4 6\n5 7\n"


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.tsv"
    code, out = run(capsys, "table", "wythoff", "--n", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "A\t1\t3\nB\t2\t5\n"


def test_verify_single_check_passes(capsys):
    code, out = run(capsys, "verify", "theorem1", "--n", "50")
    assert code == 0
    assert out.startswith("PASS theorem1 (n=50)")


def test_verify_sg_table(capsys):
    code, out = run(capsys, "verify", "sg-table")
    assert code == 0
    assert out.startswith("PASS sg-table")


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    def failing(**kwargs):
        return VerificationReport("theorem1", {}, False, ("A", 1, (0, 1, 2)))

    monkeypatch.setitem(verify.CHECKS, "theorem1", failing)
    code, out = run(capsys, "verify", "theorem1")
    assert code == 1
    assert "FAIL theorem1" in out
    assert "counterexample" in out


def test_verify_unknown_check_is_usage_error(capsys):
    code, _ = run(capsys, "verify", "nonsense")
    assert code == 2


def test_bad_table_arguments_exit_2(capsys):
    code, _ = run(capsys, "table", "positions", "--k", "99", "--n", "5")
    assert code == 2
    code, _ = run(capsys, "table", "wythoff", "--n", "3", "--format", "bfile")
    assert code == 2  # bfile needs --row


def test_experiment_json_lines(capsys):
    code, out = run(capsys, "experiment", "--a", "3", "--n", "60",
                    "--candidate", "0:01,1:2,2:01")
    assert code == 0
    record = json.loads(out.strip())
    assert record["a"] == 3
    assert record["candidates"]["0:01,1:2,2:01"] == 59


def test_experiment_figures(tmp_path, capsys):
    code, out = run(capsys, "experiment", "--a", "1", "--n", "40",
                    "--figures", str(tmp_path))
    assert code == 0
    assert (tmp_path / "alphabet-growth-a1.png").stat().st_size > 0
    assert len(out.strip().splitlines()) == 4  # one record per growth stage


def test_verify_figures(tmp_path, capsys):
    code, out = run(capsys, "verify", "lemma18", "--n", "100",
                    "--figures", str(tmp_path))
    assert code == 0
    assert "figures written" in out
    assert (tmp_path / "sg-grid-18.png").stat().st_size > 0


def test_play_session(monkeypatch, capsys):
    moves = io.StringIO("double 9 9\nsplit 4 4 1\n")
    monkeypatch.setattr("sys.stdin", moves)
    code = cli.main(["play", "--start", "4", "7"])
    out = capsys.readouterr().out
    assert code == 0
    assert "Illegal move" in out  # the first command is not a legal double
    assert "Engine" in out
    assert "stopping" in out  # input exhausted ends the session


def test_play_human_win(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("double 1 1\n"))
    code = cli.main(["play", "--start", "1", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "win" in out


def test_threads_validation(capsys):
    with pytest.raises(SystemExit):
        cli.main(["--threads", "0", "table", "wythoff", "--n", "2"])
