import json
import sys

import pytest

from clutterkit.cli import main

C6_TEXT = "1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n"


@pytest.fixture
def c6_file(tmp_path):
    p = tmp_path / "c6.clt"
    p.write_text(C6_TEXT)
    return str(p)


def test_blocker_golden(c6_file, capsys):
    assert main(["blocker", c6_file]) == 0
    out = capsys.readouterr().out
    assert out == "1 3 5\n2 4 6\n1 2 4 5\n1 3 4 6\n2 3 5 6\n"


def test_blocker_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO("1 2\n2 3\n"))
    assert main(["blocker"]) == 0
    assert capsys.readouterr().out == "2\n1 3\n"


def test_indep_golden(c6_file, capsys):
    assert main(["indep", c6_file]) == 0
    assert capsys.readouterr().out == "1 4\n2 5\n3 6\n1 3 5\n2 4 6\n"


def test_minor_found_and_witness(c6_file, capsys):
    assert main(["minor", "--k", "2", c6_file]) == 0
    assert capsys.readouterr().out == "found\n"
    assert main(["minor", "--k", "2", "--witness", c6_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("delete:")
    assert "pair:" in out


def test_minor_absent_exits_one(tmp_path, capsys):
    p = tmp_path / "stair.clt"
    p.write_text("1 3\n2 3 4\n")
    assert main(["minor", "--k", "2", str(p)]) == 1
    assert capsys.readouterr().out == "none\n"


def test_semimatchings_count_and_list(c6_file, capsys):
    assert main(["semimatchings", c6_file]) == 0
    assert capsys.readouterr().out == "10\n"
    assert main(["semimatchings", "--list", c6_file]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 10
    assert lines[0] == "-"
    assert "1,2:1,2 ; 4,5:4,5" in lines


def test_extract(tmp_path, capsys):
    clutter = tmp_path / "h.clt"
    clutter.write_text("1 4\n2 4 5\n3 4 5 6\n")
    matching = tmp_path / "m.txt"
    matching.write_text("1,4:1,4 ; 2,5:2,4,5 ; 3,6:3,4,5,6\n")
    assert main(["extract", "--matching", str(matching), str(clutter)]) == 0
    out = capsys.readouterr().out.strip()
    assert out and out != "-"


def test_bound_json(tmp_path, capsys):
    p = tmp_path / "m3.clt"
    p.write_text("0 1\n2 3\n4 5\n")
    assert main(["bound", "--k", "3", "--verify", "--json", str(p)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"edges": 3, "r": 2, "k": 3, "bound": 8,
                       "observed": 8, "within": True}


def test_bound_not_in_class_is_usage_error(tmp_path, capsys):
    p = tmp_path / "m2.clt"
    p.write_text("0 1\n2 3\n")
    assert main(["bound", "--k", "1", "--verify", str(p)]) == 2


def test_membership_exit_codes(tmp_path, capsys):
    stair = tmp_path / "stair.clt"
    stair.write_text("1 3\n2 3 4\n")
    assert main(["membership", "--r", "3", "--k", "2", str(stair)]) == 0
    assert capsys.readouterr().out == "true\n"
    pairs = tmp_path / "m2.clt"
    pairs.write_text("0 1\n2 3\n")
    assert main(["membership", "--r", "2", "--k", "2", "--json", str(pairs)]) == 1
    assert json.loads(capsys.readouterr().out)["member"] is False


def test_solve_setcover_variants(tmp_path, capsys):
    p = tmp_path / "cover.txt"
    p.write_text("3 3\n1 2 1 2\n1 2 2 3\n10 2 1 3\n")
    assert main(["solve-setcover", str(p)]) == 0
    out = capsys.readouterr().out
    assert "cost: 2" in out
    assert main(["solve-setcover", "--weighted", str(p)]) == 0
    out = capsys.readouterr().out
    assert "cover: 0 1" in out and "cost: 2" in out


def test_solve_setcover_oracle_cmd(tmp_path, capsys):
    p = tmp_path / "cover.txt"
    p.write_text("3 3\n1 2 1 2\n1 2 2 3\n1 2 1 3\n")
    cmd = f"{sys.executable} -c \"import sys; print(len(sys.stdin.read().split()))\""
    assert main(["solve-setcover", "--oracle-cmd", cmd, str(p)]) == 0
    assert "cost: 2" in capsys.readouterr().out


def test_solve_sat(tmp_path, capsys):
    sat = tmp_path / "sat.cnf"
    sat.write_text("p cnf 2 2\n1 2 0\n-1 -2 0\n")
    assert main(["solve-sat", str(sat)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("SATISFIABLE")
    unsat = tmp_path / "unsat.cnf"
    unsat.write_text("p cnf 1 2\n1 0\n-1 0\n")
    assert main(["solve-sat", str(unsat)]) == 1
    assert capsys.readouterr().out == "UNSATISFIABLE\n"


def test_gen_families(capsys):
    assert main(["gen", "--family", "kk2", "--k", "2"]) == 0
    assert capsys.readouterr().out == "0 1\n2 3\n"
    assert main(["gen", "--family", "staircase", "--n", "2"]) == 0
    assert capsys.readouterr().out == "1 3\n2 3 4\n"
    assert main(["gen", "--family", "random", "--n", "6", "--m", "4",
                 "--r", "3", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--family", "random", "--n", "6", "--m", "4",
                 "--r", "3", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first


def test_gen_missing_parameter_is_usage_error(capsys):
    assert main(["gen", "--family", "kk2"]) == 2


def test_laws_command(capsys):
    assert main(["laws", "--samples", "25", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert out.count(": ok") == 8


def test_semimatchings_explicit_count_flag(c6_file, capsys):
    assert main(["semimatchings", "--count", c6_file]) == 0
    assert capsys.readouterr().out == "10\n"


def test_bound_without_verify(tmp_path, capsys):
    p = tmp_path / "m3.clt"
    p.write_text("0 1\n2 3\n4 5\n")
    assert main(["bound", "--k", "3", str(p)]) == 0
    out = capsys.readouterr().out
    assert "bound: 8" in out and "observed" not in out


def test_extract_invalid_matching_is_input_error(tmp_path, capsys):
    clutter = tmp_path / "h.clt"
    clutter.write_text("1 2\n")
    matching = tmp_path / "m.txt"
    matching.write_text("3,4:3,4\n")
    assert main(["extract", "--matching", str(matching), str(clutter)]) == 2


def test_budget_exit_code(tmp_path, capsys):
    p = tmp_path / "m8.clt"
    p.write_text("".join(f"{2 * i} {2 * i + 1}\n" for i in range(8)))
    assert main(["blocker", "--budget", "50", str(p)]) == 3


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.clt"
    p.write_text("1 x\n")
    assert main(["blocker", str(p)]) == 2


def test_missing_file_exit_code(capsys):
    assert main(["blocker", "/nonexistent/file.clt"]) == 2


def test_roundtrip_through_cli(tmp_path, capsys):
    assert main(["gen", "--family", "random", "--n", "8", "--m", "6",
                 "--r", "4", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    p = tmp_path / "h.clt"
    p.write_text(text)
    assert main(["blocker", str(p)]) == 0
    btext = capsys.readouterr().out
    q = tmp_path / "b.clt"
    q.write_text(btext)
    assert main(["blocker", str(q)]) == 0
    assert capsys.readouterr().out == text
