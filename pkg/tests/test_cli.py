"""Command-line interface: exit codes, file outputs, determinism."""

import json

import pytest

from degpath import complete_bipartite, graph6_decode, graph6_encode
from degpath.cli import EXIT_ASSERTION, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, run


def write_g6(path, graphs):
    path.write_text("".join(graph6_encode(g) + "\n" for g in graphs))


def test_detect_negative_and_positive(tmp_path):
    neg = tmp_path / "k23.g6"
    write_g6(neg, [complete_bipartite(2, 3)])
    out = tmp_path / "neg.json"
    assert run(["detect", "--in", str(neg), "--length", "3",
                "--out", str(out)]) == EXIT_NEGATIVE
    entry = json.loads(out.read_text().strip())
    assert entry["witness"] is None and graph6_decode(entry["graph6"])

    pos = tmp_path / "k4.g6"
    pos.write_text("C~\n")
    out2 = tmp_path / "pos.json"
    assert run(["detect", "--in", str(pos), "--length", "3",
                "--out", str(out2)]) == EXIT_OK
    entry = json.loads(out2.read_text().strip())
    assert entry["witness"] is not None and len(entry["witness"]) == 4


def test_detect_malformed_input_is_usage_error(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C\x19\n")
    assert run(["detect", "--in", str(bad), "--length", "3"]) == EXIT_USAGE
    assert run(["detect", "--in", str(tmp_path / "absent.g6"),
                "--length", "3"]) == EXIT_USAGE


def test_search_writes_result_and_extremal_file(tmp_path):
    out = tmp_path / "r.json"
    assert run(["search", "--vertices", "7", "--length", "3",
                "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["version"] == "search-result/1"
    assert data["p"] == 12 and len(data["extremal"]) == 1
    g6file = tmp_path / "r.g6"
    assert g6file.read_text().strip() == data["extremal"][0]


def test_search_respects_edge_window(tmp_path):
    out = tmp_path / "w.json"
    assert run(["search", "--vertices", "6", "--length", "3",
                "--max-edges", "5", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["p"] <= 5
    assert all(int(k) <= 5 for k in data["histogram"])


def test_outputs_are_byte_identical_across_runs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(["search", "--vertices", "6", "--out", str(path)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    ta, tb = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (ta, tb):
        assert run(["table", "--lengths", "3", "--vertices", "5..6",
                    "--out", str(path)]) == EXIT_OK
    assert ta.read_bytes() == tb.read_bytes()


def test_verify_and_certify(tmp_path):
    out = tmp_path / "v7.json"
    assert run(["verify", "--vertices", "7", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["p"] == 12 and data["unique"] is True

    cert = tmp_path / "c6.json"
    assert run(["certify", "--vertices", "6", "--out", str(cert)]) == EXIT_OK
    data = json.loads(cert.read_text())
    assert data["version"] == "cert-report/1"
    assert all(r["violations"] == [] for r in data["checks"])


def test_lambda_grid_csv(tmp_path):
    out = tmp_path / "lam.csv"
    assert run(["lambda", "--grid", "n=6", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "n,delta,beta,b_size,case,closed,oracle,equal"
    assert len(lines) > 100
    assert all(line.endswith(",True") for line in lines[1:])


def test_construct(tmp_path):
    out = tmp_path / "g.g6"
    assert run(["construct", "--kind", "complete-bipartite",
                "--params", "3,4", "--out", str(out)]) == EXIT_OK
    g = graph6_decode(out.read_text().strip())
    assert g.order == 7 and g.edge_count() == 12
    assert run(["construct", "--kind", "half-graph", "--params", "3",
                "--out", str(out)]) == EXIT_OK
    assert graph6_decode(out.read_text().strip()).edge_count() == 6
    assert run(["construct", "--kind", "complete-bipartite",
                "--params", "3"]) == EXIT_USAGE


def test_table_formats(tmp_path):
    out = tmp_path / "t.csv"
    assert run(["table", "--lengths", "3", "--vertices", "5,7",
                "--format", "csv", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 3 and lines[1].startswith("3,5,6,")
    outj = tmp_path / "t.json"
    assert run(["table", "--lengths", "2", "--vertices", "6",
                "--format", "json", "--out", str(outj)]) == EXIT_OK
    rows = json.loads(outj.read_text())
    assert rows[0]["half_graph_bound"] == 6


def test_usage_errors():
    with pytest.raises(SystemExit):
        run(["frobnicate"])
    with pytest.raises(SystemExit):
        run([])
    assert run(["search", "--vertices", "99"]) == EXIT_USAGE
    assert run(["lambda", "--grid", "m=6"]) == EXIT_USAGE


def test_entry_point_is_installed():
    import shutil
    import subprocess

    exe = shutil.which("degpath")
    assert exe is not None
    proc = subprocess.run([exe, "construct", "--kind", "half-graph",
                           "--params", "2"], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert graph6_decode(proc.stdout.strip()).order == 4
