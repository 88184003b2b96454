import csv
import io
import json
import math
import subprocess
import sys

import pytest

from eccspec.cli import main, parse_range, render, UsageError
from eccspec.config import DEFAULTS
from eccspec.generators import all_connected_graphs, all_trees, cycle, star
from eccspec.graph import parse_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_star_json(capsys):
    code, out, _ = run(capsys, "compute", "--family", "star:5", "--format", "json")
    assert code == 0
    rec = json.loads(out)[0]
    assert rec["eps_wiener"] == 16
    assert rec["eps_degrees"] == [4, 7, 7, 7, 7]
    assert rec["eps_matrix"][1] == [1, 0, 2, 2, 2]
    assert rec["diameter"] == 2 and rec["radius"] == 1


def test_output_formats_share_fields(capsys):
    _, js, _ = run(capsys, "compute", "--family", "cycle:5", "--format", "json")
    _, cs, _ = run(capsys, "compute", "--family", "cycle:5", "--format", "csv")
    _, tb, _ = run(capsys, "compute", "--family", "cycle:5", "--format", "table")
    keys = list(json.loads(js)[0])
    assert next(csv.reader(io.StringIO(cs))) == keys
    table_keys = [line.split(" :")[0].strip() for line in tb.splitlines() if " :" in line]
    assert table_keys == keys


def test_spectrum_p4(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "path:4", "--format", "json")
    rec = json.loads(out)[0]
    assert code == 0
    assert rec["determinant"] == "16"
    assert rec["char_poly_text"] == "x^4 - 17x^2 + 16"
    assert rec["eigenvalues"] == pytest.approx([4, 1, -1, -4], abs=1e-9)
    assert rec["energy"] == pytest.approx(10, abs=1e-9)


def test_spectrum_distance_matrix(capsys):
    _, out, _ = run(capsys, "spectrum", "--family", "complete:4", "--matrix", "distance", "--format", "json")
    rec = json.loads(out)[0]
    assert rec["matrix"] == "distance"
    assert rec["spectral_radius"] == pytest.approx(3.0)


def test_bounds_all_ok(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "star:5", "--format", "json")
    rec = json.loads(out)[0]
    assert code == 0
    assert rec["rho_eps"] == pytest.approx(3 + math.sqrt(13), abs=1e-9)
    assert rec["quotient_bound"] == pytest.approx(3 + math.sqrt(13), abs=1e-9)
    assert rec["eq1_bound"] == "32/5"


def test_generate_trees_and_graphs(capsys, tmp_path):
    _, out, _ = run(capsys, "generate", "trees", "4..6")
    assert len(out.split()) == 2 + 3 + 6
    _, out, _ = run(capsys, "generate", "graphs", "5")
    assert len(out.split()) == 21
    assert {parse_graph6(c).n for c in out.split()} == {5}
    dest = tmp_path / "g.g6"
    assert main(["generate", "graphs", "4", "--cache", str(tmp_path), "--out", str(dest)]) == 0
    assert len(dest.read_text().split()) == 6
    assert (tmp_path / "graphs-4.g6").exists()


def test_generate_family_and_cap(capsys):
    code, out, _ = run(capsys, "generate", "family", "crown:3")
    assert code == 0 and parse_graph6(out.strip()).m == 6
    code, _, err = run(capsys, "generate", "graphs", "8")
    assert code == 2 and "eccspec:" in err
    code, _, _ = run(capsys, "generate", "family")
    assert code == 2


def test_verify_exit_codes_and_scrub(capsys):
    code, out, _ = run(capsys, "verify", "wiener-bound", "--n", "1..5", "--format", "json", "--scrub-time")
    assert code == 0
    first = out
    _, again, _ = run(capsys, "verify", "wiener-bound", "--n", "1..5", "--format", "json", "--scrub-time")
    assert first == again
    assert json.loads(first)[0]["wall_time"] is None
    code, out, _ = run(capsys, "verify", "star-invertibility", "--n", "5..7")
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_exit_one(capsys):
    # diam2-max over a pool that lacks the star must fail
    pool = [to_graph6(g) for g in all_connected_graphs(5) if not (g.m == 4 and max(g.degrees()) == 4)]
    old = sys.stdin
    try:
        sys.stdin = io.StringIO("\n".join(pool))
        code, out, _ = run(capsys, "verify", "diam2-max", "--graph6", "-")
    finally:
        sys.stdin = old
    assert code == 1
    assert out.startswith("FAIL") and "counterexample" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify")[0] == 2
    code, _, err = run(capsys, "verify", "no-such-check")
    assert code == 2 and "unknown check" in err
    assert run(capsys, "verify", "wiener-bound", "--n", "x..y")[0] == 2


def test_disconnected_input_exit_two(capsys, tmp_path):
    f = tmp_path / "two.txt"
    f.write_text("4\n0 1\n2 3\n")
    code, out, err = run(capsys, "compute", "--file", str(f))
    assert code == 2
    assert "eccentricity undefined: graph disconnected" in err
    assert out == ""


def test_bad_graph6_exit_two(capsys):
    code, _, err = run(capsys, "spectrum", "--graph6", "D?")
    assert code == 2 and err


def test_multiple_sources_rejected(capsys):
    assert run(capsys, "compute", "--family", "star:3", "--graph6", "Bw")[0] == 2


def test_stdin_graph6(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\nCr\n"))
    code, out, _ = run(capsys, "compute", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 2


def test_search_n5(capsys):
    code, out, _ = run(capsys, "search", "--n", "5", "--format", "json")
    recs = json.loads(out)
    assert code == 0 and recs
    assert any(r["energy"] == pytest.approx(4 + 4 * math.sqrt(2), abs=1e-7) for r in recs)
    code, out, _ = run(capsys, "search", "--n", "4")
    assert code == 0 and "no non-cospectral" in out


def test_tolerance_flags_restored(capsys):
    before = DEFAULTS.as_dict()
    run(capsys, "--equality-tol", "1e-6", "--energy-tol", "1e-5", "bounds", "--family", "path:3")
    assert DEFAULTS.as_dict() == before
    assert run(capsys, "--jobs", "0", "bounds", "--family", "path:3")[0] == 2


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("2..4") == [2, 3, 4]
    with pytest.raises(UsageError):
        parse_range("a")


def test_render_csv_nested_as_json():
    text = render([{"a": [[1, 2], [3, 4]], "b": 1}], "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["a", "b"] and json.loads(rows[1][0]) == [[1, 2], [3, 4]]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eccspec", "compute", "--family", "path:3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)[0]["eps_wiener"] == 4
