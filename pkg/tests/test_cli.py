"""Command line: JSON output, manifests, seeds, exit codes."""

import json
from fractions import Fraction

import pytest

from matchforge import DEFAULT_SEED, __version__
from matchforge.cli import main
from matchforge.generators import named
from matchforge.graphs import load_edge_list
from matchforge.matching import format_weight_csv, parse_weight_csv
from matchforge.mesh import icosahedron, off_text


def run_cli(capsys, argv, expect=0):
    code = main(argv)
    out = capsys.readouterr()
    assert code == expect, out.err or out.out
    return json.loads(out.out)


def test_gen_json_and_manifest(capsys):
    doc = run_cli(capsys, ["gen", "name:petersen"])
    assert doc["graph"]["n"] == 10 and doc["graph"]["m"] == 15
    assert doc["flags"]["snark"] is True
    man = doc["manifest"]
    assert man["tool"] == "matchforge"
    assert man["version"] == __version__
    assert man["argv"] == ["gen", "name:petersen"]
    assert man["seed"] == DEFAULT_SEED
    assert man["inputs"] == []
    assert man["elapsed_seconds"] >= 0


def test_gen_out_round_trip(capsys, tmp_path):
    out = tmp_path / "cube.txt"
    run_cli(capsys, ["gen", "name:cube", "--out", str(out)])
    assert load_edge_list(out).edges == named("cube").edges


def test_gen_family_reports_matching(capsys):
    doc = run_cli(capsys, ["gen", "family:1"])
    assert doc["graph"]["n"] == 20
    assert len(doc["distinguished_matching"]) == 6


def test_gen_file_input_hashed(capsys, tmp_path):
    path = tmp_path / "g.txt"
    run_cli(capsys, ["gen", "name:k4", "--out", str(path)])
    doc = run_cli(capsys, ["gen", str(path)])
    (entry,) = doc["manifest"]["inputs"]
    assert entry["path"] == str(path)
    assert len(entry["sha256"]) == 64


def test_seed_resolution(capsys, monkeypatch):
    monkeypatch.setenv("MATCHFORGE_SEED", "7")
    doc = run_cli(capsys, ["gen", "random:10", "--seed", "5"])
    assert doc["manifest"]["seed"] == 5
    doc = run_cli(capsys, ["gen", "random:10"])
    assert doc["manifest"]["seed"] == 7
    monkeypatch.setenv("MATCHFORGE_SEED", "0x10")
    doc = run_cli(capsys, ["gen", "random:10"])
    assert doc["manifest"]["seed"] == 16
    monkeypatch.setenv("MATCHFORGE_SEED", "ten")
    run_cli(capsys, ["gen", "random:10"], expect=2)
    monkeypatch.delenv("MATCHFORGE_SEED")
    doc = run_cli(capsys, ["gen", "random:10"])
    assert doc["manifest"]["seed"] == DEFAULT_SEED


def test_random_graph_reproducible(capsys):
    a = run_cli(capsys, ["gen", "random:12", "--seed", "3"])
    b = run_cli(capsys, ["gen", "random:12", "--seed", "3"])
    assert a["graph"] == b["graph"]


def test_classify_petersen(capsys):
    doc = run_cli(capsys, ["classify", "name:petersen"])
    assert doc["cubic"] and doc["bridgeless"] and doc["snark"]
    assert doc["bipartite"] is False
    assert doc["tait_colorable"] is False
    assert doc["hamiltonian"] is False
    assert doc["search_timeout"] is False


def test_classify_cube_coloring_and_cycle(capsys):
    doc = run_cli(capsys, ["classify", "name:cube"])
    assert doc["tait_colorable"] is True
    assert len(doc["tait_coloring"]) == 12
    cycle = doc["hamiltonian_cycle"]
    assert cycle[0] == 0 and sorted(cycle) == list(range(8))


def test_classify_budget_timeout(capsys):
    doc = run_cli(capsys, ["classify", "name:nauru", "--node-budget", "3"])
    assert doc["search_timeout"] is True
    assert doc["tait_colorable"] is None
    assert doc["hamiltonian"] is None


def test_match_with_weight_file(capsys, tmp_path):
    g = named("petersen")
    w = [Fraction(0)] * g.m
    for e in (0, 8, 12):
        w[e] = Fraction(1)
    csv = tmp_path / "w.csv"
    csv.write_text(format_weight_csv(w))
    doc = run_cli(capsys, ["match", "name:petersen", "--weights", str(csv)])
    assert doc["matching"] == [0, 8, 12]
    assert doc["weight"] == {"num": "3", "den": "1"}
    assert doc["saturates_all"] is False
    doc = run_cli(
        capsys, ["match", "name:petersen", "--weights", str(csv), "--perfect"]
    )
    assert doc["size"] == 5
    assert doc["weight"] == {"num": "1", "den": "1"}
    assert doc["saturates_all"] is True


def test_match_no_perfect_matching_exit(capsys, tmp_path):
    path = tmp_path / "twotri.txt"
    path.write_text("6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n")
    doc = run_cli(capsys, ["match", str(path), "--perfect"], expect=1)
    assert doc["error"] == "NoPerfectMatching"


def test_eta_exact_petersen(capsys):
    doc = run_cli(capsys, ["eta", "exact", "name:petersen"])
    assert doc["eta"]["value"] == {"num": "1", "den": "3"}
    assert doc["eta"]["argmax_matching"] == [0, 8, 12]
    assert doc["manifest"]["budgets"] == {}


def test_eta_exact_budget_refused(capsys):
    doc = run_cli(capsys, ["eta", "exact", "name:nauru"], expect=2)
    assert doc["error"] == "BudgetExceeded"
    doc = run_cli(
        capsys,
        ["eta", "exact", "name:petersen", "--maximal-count", "50"],
        expect=2,
    )
    assert doc["error"] == "BudgetExceeded"


def test_eta_bounds_petersen(capsys):
    doc = run_cli(capsys, ["eta", "bounds", "name:petersen"])
    assert doc["lower"]["bound"] == {"num": "1", "den": "3"}
    assert doc["upper"]["bound"] == {"num": "1", "den": "3"}
    assert doc["notes"] == []


def test_eta_bounds_skips_oversized_scan(capsys):
    doc = run_cli(capsys, ["eta", "bounds", "name:nauru"])
    assert doc["lower"]["bound"] == {"num": "1", "den": "3"}
    assert doc["upper"] is None
    assert any("upper bound skipped" in note for note in doc["notes"])


def test_witness_and_cert_verify_flow(capsys, tmp_path):
    cert = tmp_path / "c.json"
    doc = run_cli(
        capsys,
        ["eta", "witness", "name:cube", "--kind", "cap",
         "--size", "3", "--max-cap", "2", "--cert-out", str(cert)],
    )
    assert doc["certificate"]["kind"] == "cap_upper"
    doc = run_cli(capsys, ["cert", "verify", "name:cube", str(cert)])
    assert doc["valid"] is True and doc["reason"] == "ok"

    data = json.loads(cert.read_text())
    data["cap"] = 1
    cert.write_text(json.dumps(data))
    doc = run_cli(capsys, ["cert", "verify", "name:cube", str(cert)], expect=1)
    assert doc["valid"] is False and "cap" in doc["reason"]


def test_witness_not_found(capsys):
    doc = run_cli(
        capsys,
        ["eta", "witness", "name:petersen", "--kind", "independent",
         "--size", "5"],
        expect=1,
    )
    assert doc["certificate"] is None


def test_witness_odd_kind(capsys):
    doc = run_cli(
        capsys,
        ["eta", "witness", "name:k4", "--kind", "odd", "--edges", "0"],
    )
    assert doc["certificate"]["kind"] == "odd_component_upper"


def test_mesh_quadrangulate(capsys, tmp_path):
    off = tmp_path / "ico.off"
    off.write_text(off_text(icosahedron()))
    obj = tmp_path / "ico.obj"
    doc = run_cli(
        capsys, ["mesh", "quadrangulate", str(off), "--out", str(obj)]
    )
    assert doc["report"]["quad_count"] == 10
    assert doc["report"]["triangle_count"] == 0
    assert obj.exists()
    (entry,) = doc["manifest"]["inputs"]
    assert entry["path"] == str(off)


def test_mesh_weights_csv(capsys, tmp_path):
    off = tmp_path / "ico.off"
    off.write_text(off_text(icosahedron()))
    csv = tmp_path / "w.csv"
    run_cli(capsys, ["mesh", "weights", str(off), "--out", str(csv)])
    w = parse_weight_csv(csv.read_text(), 30)
    assert set(w) == {Fraction(62113, 125000)}


def test_reproduce_single_check(capsys):
    doc = run_cli(capsys, ["reproduce", "--only", "3"])
    assert doc["all_ok"] is True
    (check,) = doc["checks"]
    assert check["id"] == "3" and check["ok"] is True
    assert check["seconds"] <= check["limit_seconds"]


def test_reproduce_unknown_check_id(capsys):
    doc = run_cli(capsys, ["reproduce", "--only", "3,99"], expect=2)
    assert doc["error"] == "MatchforgeError"
    assert "99" in doc["message"]


def test_malformed_gp_spec(capsys):
    doc = run_cli(capsys, ["gen", "gp:5"], expect=2)
    assert doc["error"] == "MatchforgeError"
    assert "gp:<n>,<k>" in doc["message"]


def test_unknown_label_error_json(capsys):
    doc = run_cli(capsys, ["gen", "name:nosuch"], expect=2)
    assert doc["error"] == "UnknownLabel"
    assert "nosuch" in doc["message"]


def test_missing_file_error(capsys, tmp_path):
    doc = run_cli(capsys, ["classify", str(tmp_path / "absent.txt")], expect=2)
    assert doc["error"] in ("FileNotFoundError", "OSError")


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == __version__
