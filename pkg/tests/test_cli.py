import json
import subprocess
import sys

import pytest

from oddsub.certify import revalidate
from oddsub.cli import main
from oddsub.families import generate_family, petersen_graph
from oddsub.graph import format_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_family(capsys):
    code, out, _ = run(capsys, "solve", "F")
    assert code == 0 and "f_o = 4" in out


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "cycle:7", "--json")
    data = json.loads(out)
    assert code == 0 and data["value"] == 4 and data["optimal"] and len(data["witness"]) == 4


def test_solve_fk(capsys):
    code, out, _ = run(capsys, "solve", "complete:7", "--fk", "3", "--json")
    assert code == 0 and json.loads(out)["value"] == 5


def test_solve_edge_list_file(tmp_path, capsys):
    path = tmp_path / "petersen.txt"
    path.write_text(format_edge_list(petersen_graph()))
    code, out, _ = run(capsys, "solve", str(path), "--json")
    assert code == 0 and json.loads(out)["optimal"]


def test_solve_isolated_vertex_warning(capsys):
    code, out, err = run(capsys, "solve", "path:1")
    assert code == 0 and "f_o = 0" in out and "isolated" in err


def test_solve_budget_incomplete(capsys):
    code, out, _ = run(capsys, "solve", "gnm:22,60,1", "--budget", "2")
    assert code == 2 and "INCOMPLETE" in out


def test_seeded_random_spec(capsys):
    _, a, _ = run(capsys, "--seed", "5", "solve", "gnm:9,12", "--json")
    _, b, _ = run(capsys, "solve", "gnm:9,12,5", "--json")
    assert json.loads(a)["witness"] == json.loads(b)["witness"]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "nonsense:1"],
        ["solve"],
        ["bogus"],
        ["solve", "cycle:5", "--fk", "1"],
        ["certify", "cycle:5", "nope"],
        ["scan", "nope"],
        ["scan", "counterexample-orders:5"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_bad_edge_list_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n0 9\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 1 and "line 3" in err


def test_certify_round_trip(tmp_path, capsys):
    out_file = tmp_path / "cert.json"
    code, _, _ = run(capsys, "certify", "kbip:3,3", "linegraph", "--out", str(out_file), "--check")
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["theorem_tag"] == "linegraph" and data["target"] == "L(G)"
    assert revalidate(data, generate_family("kbip:3,3"))


def test_certify_stdout_json(capsys):
    code, out, _ = run(capsys, "certify", "cycle:11", "clawfree")
    data = json.loads(out)
    assert code == 0 and revalidate(data, generate_family("cycle:11"))


def test_certify_precondition_message(capsys):
    code, _, err = run(capsys, "certify", "cycle:5", "linegraph")
    assert code == 1 and "C_5" in err
    code, _, err = run(capsys, "certify", "star:3", "clawfree")
    assert code == 1 and "claw" in err
    code, _, err = run(capsys, "certify", "cycle:7", "planar")
    assert code == 1 and "planar" in err


def test_certify_planar(capsys):
    code, out, _ = run(capsys, "certify", "cycle:7", "planar", "--planar")
    assert code == 0 and json.loads(out)["size"] >= 5


def test_scan_small_regular_line_graphs(capsys):
    code, out, _ = run(capsys, "scan", "wangwu-min-counterexample", "--json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and lines[-1]["ok"]
    failing = [row["graph"] for row in lines[:-1] if not row["pass"]]
    assert failing == ["C_5"]


def test_scan_cycle_table_text(capsys):
    code, out, _ = run(capsys, "scan", "cycle-table")
    assert code == 0 and "19/19 as expected" in out


def test_scan_counterexamples(capsys):
    code, out, _ = run(capsys, "scan", "counterexample-orders:33..37", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(not r["pass"] and r["ok"] for r in rows[:-1])


def test_scan_clawfree_parallel_order(capsys, monkeypatch):
    _, serial, _ = run(capsys, "scan", "clawfree-random:9,6,3", "--json")
    monkeypatch.setenv("ODDSUB_THREADS", "3")
    code, parallel, _ = run(capsys, "scan", "clawfree-random:9,6,3", "--json")
    strip = lambda text: [{k: v for k, v in json.loads(l).items() if k != "elapsed"} for l in text.splitlines()]
    assert code == 0 and strip(serial) == strip(parallel)


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "oddsub.cli", "solve", "K4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "f_o = 4" in proc.stdout
