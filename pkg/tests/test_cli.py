import json

from planecover.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_cover_invariants_example1(capsys):
    code, out = capture(capsys, ["cover", "invariants", "builtin:example1"])
    assert code == 0
    assert "333" in out and "111" in out and "37" in out


def test_cover_invariants_json(capsys):
    code, out = capture(
        capsys, ["--format", "json", "cover", "invariants", "builtin:example3"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["k2"] == 45 and data["euler"] == 15 and data["chi"] == 5


def test_arrangement_info(capsys):
    code, out = capture(capsys, ["arrangement", "info", "builtin:dual_hesse"])
    assert code == 0
    data_lines = [l for l in out.splitlines() if "t:" in l or "3: 12" in l]
    assert any("12" in l for l in data_lines)


def test_arrangement_info_autos(capsys):
    code, out = capture(
        capsys,
        ["--format", "json", "arrangement", "info", "builtin:complete_quadrilateral", "--autos"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["automorphism_order"] == 24
    assert data["t"] == {"2": 3, "3": 4}
    assert data["notes"]


def test_cover_smoothness(capsys):
    code, out = capture(
        capsys, ["--format", "json", "cover", "smoothness", "builtin:example2"]
    )
    assert code == 0
    assert json.loads(out)["smooth"] is True


def test_characters_list(capsys):
    code, out = capture(
        capsys, ["--format", "json", "characters", "list", "builtin:example1"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 25
    assert [1, 1, 1, 3, 3, 0, 0, 0, 1] in [c["vector"] for c in data["characters"]]


def test_symmetry_search(capsys):
    code, out = capture(
        capsys, ["--format", "json", "symmetry", "search", "builtin:example2"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["klein_order"] == 50
    assert data["combinatorial_automorphisms"] == 432
    assert data["has_anti"] is True


def test_real_classify_example3(capsys):
    code, out = capture(
        capsys, ["--format", "json", "real", "classify", "builtin:example3"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["class_count"] == 2
    fixed = sorted(tuple(c["fixed_lines"]) for c in data["classes"])
    assert fixed == [(1, 2, 3, 4, 5, 6), (3, 6)]


def test_real_classify_example1_empty(capsys):
    code, out = capture(
        capsys, ["--format", "json", "real", "classify", "builtin:example1"]
    )
    assert code == 0
    assert json.loads(out)["class_count"] == 0


def test_bounds_check(tmp_path, capsys):
    hodge = {
        "k2": 333,
        "euler": 111,
        "p_plus": 0,
        "p_minus": 36,
        "components": [[1, 5, 1]],
        "k3": 0,
    }
    path = tmp_path / "hodge.json"
    path.write_text(json.dumps(hodge))
    code, out = capture(capsys, ["--format", "json", "bounds", "check", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["smith_total"] == 111
    assert data["maximal"] is False
    assert data["lefschetz_trace"] == -4
    assert data["h20_lower_bound"] == 4
    assert data["component_count"]["feasible"] is False


def test_paper_verify_passes(capsys):
    code, out = capture(capsys, ["paper", "verify"])
    assert code == 0
    assert "mismatch_count: 0" in out


def test_paper_verify_flags_mismatches(capsys, monkeypatch):
    from planecover import cli

    reference = cli._load_reference()
    corrupted = json.loads(json.dumps(reference))
    corrupted["example1"]["k2"] = 334
    monkeypatch.setattr(cli, "_load_reference", lambda: corrupted)
    code, out = capture(capsys, ["paper", "verify"])
    assert code == 1
    assert "expected 334" in out


def test_unknown_builtin_is_input_error(capsys):
    assert run(["cover", "invariants", "builtin:nope"]) == 2


def test_missing_file_is_input_error(capsys):
    assert run(["arrangement", "info", "/no/such/file.json"]) == 2


def test_malformed_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(["arrangement", "info", str(path)]) == 2


def test_bad_subcommand_is_input_error(capsys):
    assert run(["frobnicate"]) == 2


def test_reports_are_deterministic(capsys):
    _, first = capture(capsys, ["--format", "json", "symmetry", "search", "builtin:example3"])
    _, second = capture(capsys, ["--format", "json", "symmetry", "search", "builtin:example3"])
    assert first == second


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run(
        ["--format", "json", "--out", str(target), "cover", "invariants", "builtin:example1"]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["k2"] == 333


def test_arrangement_json_file_input(tmp_path, capsys):
    spec = {"lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1*z"]]}
    path = tmp_path / "arr.json"
    path.write_text(json.dumps(spec))
    code, out = capture(capsys, ["--format", "json", "arrangement", "info", str(path)])
    assert code == 0
    assert json.loads(out)["n"] == 4


def test_cover_json_file_input(tmp_path, capsys):
    cover = {
        "arrangement": "builtin:complete_quadrilateral",
        "m": 5,
        "k": 2,
        "phi": [[1, 0], [1, 0], [1, 2], [0, 1], [0, 1], [2, 1]],
        "blow_up": "all_r_ge_3",
    }
    path = tmp_path / "cover.json"
    path.write_text(json.dumps(cover))
    code, out = capture(capsys, ["--format", "json", "cover", "invariants", str(path)])
    assert code == 0
    assert json.loads(out)["k2"] == 45
