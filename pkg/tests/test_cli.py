import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from netdual.cli import run

GOLDEN = Path(__file__).parent / "golden"

# golden file name -> command line
CASES = {
    "net_check_braid.txt": "net-check braid-a3",
    "net_check_pappus.json": "net-check --catalog pappus --format json",
    "ideal_braid.txt": "ideal braid-a3",
    "dual_small_example.txt": "dual --ideal-file {data}/small_example.json",
    "primary_small_example.txt": "primary --ideal-file {data}/small_example.json",
    "betti_small_example.txt": "betti --ideal-file {data}/small_example.json --subject ideal",
    "betti_small_example_dual.txt": "betti --ideal-file {data}/small_example.json --dual",
    "betti_pappus_dual.txt": "betti --catalog pappus --ideal J2 --subject quotient --dual",
    "betti_non_pappus.txt": "betti --arrangement {data}/non_pappus.json --ideal J2",
    "betti_k7_dual.json": "betti --kn 7 --dual --format json",
    "hilbert_k7_dual_kpoly.txt": "hilbert --kn 7 --dual --kpoly",
    "hilbert_k5.txt": "hilbert --kn 5",
    "fvector_k7.txt": "fvector --kn 7",
    "cutpoly_k6.txt": "cutpoly --kn 6",
    "blocks_ceva3.txt": "blocks-check ceva-3",
    "fy_slack_pappus.txt": "fy-slack pappus",
    "catalog_list.txt": "catalog",
    "catalog_braid_coords.txt": "catalog --coords {data}/braid.coords",
}


def invoke(cmd: str):
    out, err = io.StringIO(), io.StringIO()
    argv = cmd.format(data=GOLDEN).split()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = invoke(CASES[name])
    assert code == 0, err
    assert out == (GOLDEN / name).read_text()


def test_output_is_deterministic():
    for cmd in ["betti --catalog hessian --ideal J2", "primary --kn 5", "net-check ceva-4 --format json"]:
        assert invoke(cmd) == invoke(cmd)


def test_net_check_failure_reports_certificates(tmp_path):
    net = tmp_path / "net.json"
    net.write_text(json.dumps({"blocks": [[1, 4], [2, 5], [3, 6]], "X": [[1, 2, 3], [1, 5, 6], [2, 4, 6]]}))
    code, out, _ = invoke(f"net-check braid-a3 --net {net}")
    assert code == 0
    assert out.startswith("NOT A NET (k=3, d=2); |X|=3; dual criterion FAIL")
    assert "lines 3 and 4 from different blocks do not meet in X" in out


def test_exit_codes(tmp_path):
    assert invoke("catalog desargues")[0] == 1
    assert invoke("betti")[0] == 1
    assert invoke("betti braid-a3 --kn 4")[0] == 1
    assert invoke("frobnicate braid-a3")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "multiple_points": [[1, 2]')
    code, _, err = invoke(f"ideal --arrangement {bad}")
    assert code == 1 and ":1:" in err
    assert invoke("betti --kn 7 --dual --exhaustive")[0] == 2
    net = tmp_path / "net.json"
    net.write_text(json.dumps({
        "blocks": [[1, 6, 9], [2, 5, 8], [3, 4, 7]],
        "X": [[1, 3, 5], [1, 4, 8], [2, 3, 9], [2, 4, 6], [3, 6, 8], [4, 5, 9], [5, 6, 7], [7, 8, 9]],
    }))
    code, _, err = invoke(f"net-check pappus --net {net}")
    assert code == 3 and "disagree" in err


def test_oracle_flag_agrees():
    code, out, _ = invoke("betti --catalog braid-a3 --oracle")
    assert code == 0
    assert out == invoke("betti --catalog braid-a3")[1]


def test_threads_env_fallback(monkeypatch):
    monkeypatch.setenv("NETDUAL_THREADS", "3")
    assert invoke("betti --kn 5")[0] == 0
    monkeypatch.setenv("NETDUAL_THREADS", "many")
    assert invoke("betti --kn 5")[0] == 1


def test_field_flag():
    q = invoke("betti --catalog pappus --ideal J2")[1]
    assert invoke("betti --catalog pappus --ideal J2 --field gf:32003")[1] == q
    assert invoke("betti --catalog pappus --field gf:9")[0] == 1


def test_fy_slack_abstract():
    code, out, _ = invoke("fy-slack --k 3 --d 2")
    assert out.startswith("slack = 0")
    assert "only singular fibers" in out
    assert invoke("fy-slack")[0] == 1


def test_graph_input(tmp_path):
    g = tmp_path / "k4.graph"
    g.write_text("4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    code, out, _ = invoke(f"ideal --graph {g}")
    assert code == 0
    assert out.count("*") == 3 + 2 * 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "netdual", "net-check", "braid-a3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "NET (k=3, d=2); |X|=4=d²; dual criterion PASS; direct criterion PASS\n"
