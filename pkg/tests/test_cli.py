import json
import math

import pytest

from spexsurf import (build_path, complete_graph, load_certificate,
                      planar_k2_path_scheme, to_graph6, trace_faces)
from spexsurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_stdout(capsys):
    code, out, err = run(capsys, "construct", "--n", "20", "--gamma", "2")
    assert code == 0 and err == ""
    body = json.loads(out)
    assert body["edge_count"] == 60
    assert body["schema_version"] == 1
    assert out.endswith("\n")


def test_construct_out_files(capsys, tmp_path):
    base = str(tmp_path / "ex20")
    code, out, err = run(capsys, "construct", "--n", "20", "--gamma", "1",
                         "--out", base)
    assert code == 0 and out == ""
    trace = json.loads((tmp_path / "ex20.trace.json").read_text())
    assert trace["edge_count"] == 57
    graph6 = (tmp_path / "ex20.g6").read_text().strip()
    assert trace["graph6"] == graph6


def test_construct_below_minimum_order(capsys):
    code, out, err = run(capsys, "construct", "--n", "5", "--gamma", "1")
    assert code == 2
    assert "[precondition]" in err
    assert "minimum" in err


def test_search_scale_refusal(capsys):
    code, out, err = run(capsys, "search", "--n", "40", "--gamma", "1")
    assert code == 3
    assert "[scale]" in err


def test_rho_nonconvergence_exit(capsys):
    code, out, err = run(capsys, "rho", "--graph6", to_graph6(build_path(7)),
                         "--tol", "1e-30")
    assert code == 4
    assert "[nonconvergence]" in err


def test_rho_family_and_infile(capsys, tmp_path):
    code, out, _ = run(capsys, "rho", "--n", "100", "--gamma", "1")
    assert code == 0
    direct = json.loads(out)["rho"]
    path = tmp_path / "g.g6"
    path.write_text("D~{\n")
    code, out, _ = run(capsys, "rho", "--in", str(path))
    assert code == 0
    assert json.loads(out)["rho"] == pytest.approx(4.0, abs=1e-9)
    # both sources at once is a user error
    code, _, err = run(capsys, "rho", "--graph6", "D~{", "--in", str(path))
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "rho", "--in", str(tmp_path / "missing.g6"))
    assert code == 2
    assert direct == pytest.approx(15.5332210882, abs=1e-6)


def test_bounds_csv_shape_and_determinism(capsys):
    argv = ("bounds", "--n", "100,1000", "--gamma", "0,1",
            "--threads", "1", "--seed", "0")
    code, first, _ = run(capsys, *argv)
    assert code == 0
    code, second, _ = run(capsys, *argv)
    assert first == second
    lines = first.strip().split("\n")
    assert lines[0] == "# schema_version=1"
    header = lines[1].split(",")
    assert header == ["n", "gamma", "rho", "rho0", "lower", "upper",
                      "ellingham_zha", "inside_sandwich", "above_threshold"]
    rows = [dict(zip(header, ln.split(","))) for ln in lines[2:]]
    assert len(rows) == 4
    flat = rows[0]
    assert flat["gamma"] == "0"
    rho0 = float(flat["rho0"])
    lower = float(flat["lower"])
    assert lower == pytest.approx(rho0 - 1 / 100, abs=1e-12)
    assert flat["above_threshold"] == "false"
    for row in rows:
        # every float cell is rendered at 12 significant digits
        for key in ("rho", "rho0", "lower", "upper", "ellingham_zha"):
            cell = row[key]
            assert cell == f"{float(cell):.12g}"


def test_csv_guard_for_scalar_commands(capsys):
    code, _, err = run(capsys, "rho", "--n", "20", "--gamma", "1",
                       "--format", "csv")
    assert code == 2
    assert "bounds, search, and report" in err


def test_bounds_json_format(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "50", "--gamma", "1",
                       "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["rows"][0]["n"] == 50


def test_walks(capsys):
    code, out, _ = run(capsys, "walks", "--graph6", "D~{", "--lmax", "3")
    assert code == 0
    assert json.loads(out)["counts"] == ["20", "80", "320"]


def test_zhang(capsys):
    code, out, _ = run(capsys, "zhang", "--parts", "3,7")
    assert code == 0
    assert json.loads(out)["rho"] == pytest.approx(math.sqrt(21), abs=1e-9)


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--g1", to_graph6(complete_graph(5)),
                       "--g2", to_graph6(build_path(5)))
    assert code == 0
    body = json.loads(out)
    assert body["sign"] == 1 and body["rho_order_matches"] is True


def test_genus(capsys):
    code, out, _ = run(capsys, "genus", "--graph6", "D~{")
    assert code == 0
    assert json.loads(out)["genus"] == 1


def test_verify_embedding_certificate(capsys):
    code, out, _ = run(capsys, "verify-embedding", "--cert", "k7-torus")
    assert code == 0
    body = json.loads(out)
    assert (body["f"], body["genus"], body["orientable"]) == (14, 2, True)


def test_verify_embedding_corrupted_rotation(capsys, tmp_path):
    scheme = load_certificate("k6-projective").to_json()
    scheme["rotation"][2] = scheme["rotation"][2][:-1]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(scheme))
    code, _, err = run(capsys, "verify-embedding", str(path))
    assert code == 2
    assert "vertex 2" in err


def test_verify_embedding_pair(capsys, tmp_path):
    scheme = load_certificate("k6-projective").to_json()
    path = tmp_path / "k6.json"
    path.write_text(json.dumps(scheme))
    code, out, _ = run(capsys, "verify-embedding", str(path),
                       "--pair", "0,1")
    assert code == 0
    assert json.loads(out)["triangulation"]["avoiding_faces"] == 2


def test_splice(capsys, tmp_path):
    host = load_certificate("k6-projective")
    face = next(w for w in trace_faces(host).faces if 0 in w and 1 in w)
    host_path = tmp_path / "host.json"
    host_path.write_text(json.dumps(host.to_json()))
    patch_path = tmp_path / "patch.json"
    patch_path.write_text(json.dumps(planar_k2_path_scheme(3).to_json()))
    code, out, _ = run(capsys, "splice", "--host", str(host_path),
                       "--inner", str(patch_path),
                       "--face", ",".join(str(v) for v in face),
                       "--outer", "0,1,2")
    assert code == 0
    body = json.loads(out)
    assert body["f"] == 14 and body["genus"] == 1


def test_search_csv_meta(capsys):
    code, out, _ = run(capsys, "search", "--n", "14", "--gamma", "1",
                       "--keep-top", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "# schema_version=1"
    assert lines[1] == ("# n=14 gamma=1 space=full candidates=12765 "
                        "winner_rank=20 winner_inner_graph6=KQGOOG??GD_N")
    assert lines[2].split(",") == list(("graph6", "rho", "edges", "degrees",
                                        "flags"))
    assert any("minor-free;argmax" in ln for ln in lines[3:])


def test_w3max(capsys):
    code, out, _ = run(capsys, "w3max", "--degrees", "4,4,3,3,2,2,2,2,1,1")
    assert code == 0
    body = json.loads(out)
    assert body["value"] == 202 and body["shape_target"] == 202


def test_report_csv(capsys):
    code, out, _ = run(capsys, "report", "--n", "14,20", "--gamma", "1")
    assert code == 0
    lines = out.strip().split("\n")
    header = lines[1].split(",")
    assert header[:4] == ["n", "gamma", "edge_count", "witness_ok"]
    rows = [dict(zip(header, ln.split(","))) for ln in lines[2:]]
    assert [r["n"] for r in rows] == ["14", "20"]
    assert all(r["witness_ok"] == "true" for r in rows)
    assert rows[1]["w2"] == "1050"


def test_report_out_file(capsys, tmp_path):
    path = tmp_path / "report.csv"
    code, out, _ = run(capsys, "report", "--n", "20", "--gamma", "1",
                       "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("# schema_version=1\n")


def test_grid_flags_reject_scalar_commands(capsys):
    code, _, err = run(capsys, "construct", "--n", "20,30", "--gamma", "1")
    assert code == 2 and "single value" in err
    code, _, err = run(capsys, "bounds", "--n", "20")
    assert code == 2 and "--gamma" in err
