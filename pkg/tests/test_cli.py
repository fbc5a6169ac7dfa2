import json
import subprocess
import sys

from powergraph.cli import main
from powergraph.verify import reports_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "C6", "--graph", "power", "--complement", "--drop-isolated", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["vertex_count"] == 3 and data["diameter"] == 2
    assert [v["element"] for v in data["vertices"]] == [2, 3, 4]
    assert data["edges"] == [[0, 1], [1, 2]]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "S3", "--graph", "epow")
    assert code == 0
    assert "edge_count: 6" in out and "group: S3" in out


def test_analyze_dot_to_file(capsys, tmp_path):
    target = tmp_path / "q8.dot"
    code, out, _ = run(
        capsys, "analyze", "--group", "Q8", "--graph", "epow", "--complement", "--drop-isolated", "--format", "dot", "-o", str(target)
    )
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("graph G {")
    assert text.count("--") == 12
    assert '[label="i"]' in text


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--group", "C6x", "--graph", "power")
    assert code == 2 and "offset 3" in err


def test_verify_file_catalog(capsys, tmp_path):
    cat = tmp_path / "cat.txt"
    cat.write_text("S3\n# comment\nQ8xC2\n")
    code, out, _ = run(capsys, "verify", "--catalog", str(cat))
    assert code == 0
    reports = reports_from_json(out)
    assert len(reports) == 4 and all(r.bound_satisfied for r in reports)


def test_verify_exit_code_on_error(capsys, tmp_path):
    cat = tmp_path / "cat.txt"
    cat.write_text("S3\nS6\n")
    code, out, _ = run(capsys, "verify", "--catalog", str(cat), "--max-order", "100", "--jobs", "2")
    assert code == 1
    assert [r.error is None for r in reports_from_json(out)] == [True, True, False, False]


def test_witness_bundle(capsys):
    code, out, _ = run(capsys, "witness", "--group", "S3")
    assert code == 0
    data = json.loads(out)
    assert data["group"] == "S3" and len(data["paths"]) == 10


def test_witness_pair(capsys):
    code, out, _ = run(capsys, "witness", "--group", "Q8", "--pair", "2,3")
    assert code == 0
    data = json.loads(out)
    assert data["path"][0] == 2 and data["path"][-1] == 3 and len(data["path"]) == 3
    code, _, err = run(capsys, "witness", "--group", "Q8", "--pair", "0,3")
    assert code == 2 and "isolated" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "powergraph", "analyze", "--group", "C4", "--graph", "power", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "diameter: 1" in proc.stdout
