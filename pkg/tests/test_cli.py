from __future__ import annotations

import json
import subprocess
import sys

from partcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_quotient_command(capsys):
    code, out, _ = run(capsys, "quotient", "-p", '[["1","2"],["3","4"],["5","6"]]', "-b", '["2","3"]')
    assert code == 0
    body = json.loads(out)
    assert body["partition"] == [["1", "4"], ["5", "6"]]
    assert body["ideal_part"] == ["1", "4"]
    assert body["trivial"] is False


def test_restrict_and_adjust(capsys):
    assert run(capsys, "restrict", "-p", '[["1","2"],["3"]]', "-b", '["2","3"]')[1] == '[["2"],["3"]]\n'
    assert run(capsys, "adjust", "-p", '[["1","2"],["3","4"]]', "-f", '[["1"],["2"]]')[1] == '[["1","2"]]\n'


def test_insert_command(capsys):
    code, out, _ = run(capsys, "insert", "-p", '[["1","2"],["3"]]', "-a", "0",
                       "-q", '[["4"],["5","6"]]', "--iota", '{"1":0,"2":1}')
    assert code == 0
    assert json.loads(out) == [["1", "4"], ["2", "5", "6"], ["3"]]


def test_compose_and_bracket(capsys):
    code, out, _ = run(capsys, "compose", "-p", '[["1"]]', "-q", '[["2"]]')
    assert json.loads(out)["terms"] == [{"coeff": "1/1", "term": [["1", "2"]]}]
    code, out, _ = run(capsys, "bracket", "-p", '[["1"],["2"]]', "-q", '[["3","4"]]')
    assert code == 0
    assert [t["coeff"] for t in json.loads(out)["terms"]] == ["-1/1", "-1/1"]


def test_bracket_of_empty_inputs_is_structured_error(capsys):
    code, out, err = run(capsys, "bracket", "-p", "[]", "-q", "[]")
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "EmptyOperand"


def test_validation_error_exit_code(capsys):
    code, _, err = run(capsys, "restrict", "-p", '[["1"],["1"]]', "-b", "[]")
    assert code == 2
    assert json.loads(err)["violations"] == ["blocks not disjoint"]


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "restrict", "-p", '[["1"', "-b", "[]")
    body = json.loads(err)
    assert code == 2 and body["error"] == "ParseError" and body["line"] == 1


def test_missing_input_file(capsys, tmp_path):
    code, _, err = run(capsys, "restrict", "--in", str(tmp_path / "nope.json"), "-b", "[]")
    assert code == 1
    assert json.loads(err)["error"] == "FileNotFoundError"


def test_in_and_out_files(capsys, tmp_path):
    src = tmp_path / "p.json"
    dst = tmp_path / "q.json"
    src.write_text('[["2","1"],["3"]]')
    code, out, _ = run(capsys, "coproduct", "--in", str(src), "--out", str(dst), "--reduced")
    assert code == 0 and out == ""
    assert json.loads(dst.read_text())["kind"] == "lincomb"


def test_jacobi_command(capsys):
    code, out, _ = run(capsys, "jacobi", "-p", '[["1","2"]]', "-q", '[["3"]]', "-s", '[["4"]]')
    assert code == 0 and json.loads(out)["terms"] == []


def test_graph_commands(capsys):
    g = '{"sigma":[["1","2"],["3","4"],["5","6"]],"fixed":["7","8"],"vertices":[["1","3","7"],["2","5"],["4","6","8"]]}'
    code, out, _ = run(capsys, "graph", "quotient", "-g", g, "--select", '[["1","3","7"],["4","6","8"]]')
    assert code == 0
    body = json.loads(out)
    assert body["vertices"] == [["1", "6", "7", "8"], ["2", "5"]]
    code, out, _ = run(capsys, "graph", "subgraph", "-g", g, "--select", '[["1","3","7"],["4","6","8"]]',
                       "--format", "dot")
    assert out.startswith("graph G {")
    code, out, _ = run(capsys, "graph", "dot", "-g", g)
    assert out.count("shape=point") == 2


def test_graph_insert_and_bracket(capsys):
    host = '{"sigma":[],"fixed":["1","2"],"vertices":[["1","2"]]}'
    guest = '{"sigma":[["3","4"]],"fixed":[],"vertices":[["3"],["4"]]}'
    code, out, _ = run(capsys, "graph", "insert", "-g", host, "--guest", guest, "--site", "0",
                       "--iota", '{"1":0,"2":1}')
    assert json.loads(out)["vertices"] == [["1", "3"], ["2", "4"]]
    code, out, _ = run(capsys, "graph", "bracket", "-g", host, "--guest", guest)
    assert code == 0 and json.loads(out)["kind"] == "graph-lincomb"


def test_admissible_insert(capsys):
    host = '{"sigma":[["1","2"]],"vertices":[["1"]],"second_type":[["2"]]}'
    guest = '{"sigma":[["3","4"]],"vertices":[["3"]],"second_type":[["4"]]}'
    code, _, err = run(capsys, "graph", "insert", "-g", host, "--guest", guest, "--site", "0",
                       "--iota", '{"1":0}', "--mode", "paired", "--site2", "0", "--kappa", '{"2":0}')
    assert code == 2 and json.loads(err)["error"] == "ResultNotAdmissible"


def test_check_suite_report(capsys):
    code, out, _ = run(capsys, "check", "lemma31", "--max-atoms", "2")
    body = json.loads(out)
    assert code == 0
    assert body["suite"] == "lemma31" and body["failures"] == [] and body["instances"] > 0


def test_check_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "nonsense")
    assert code == 2


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PARTCALC_SEED", "7")
    code, out, _ = run(capsys, "check", "prop21", "--max-atoms", "2", "--samples", "5")
    assert json.loads(out)["seed"] == 7


def test_module_entry_point_is_byte_stable():
    argv = [sys.executable, "-m", "partcalc", "check", "jacobi", "--samples", "5", "--seed", "3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
