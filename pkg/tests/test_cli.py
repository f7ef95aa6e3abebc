import json

from gf4lrc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_hamming_concat(tmp_path, capsys):
    base = tmp_path / "ham"
    code, out, _ = run_cli(
        capsys, "construct", "hamming4", "--t", "2", "--concat", "--output", str(base)
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["outer"] == {"n": 5, "k": 3, "d": 3, "q": 4}
    assert summary["lrc"] == {"n": 15, "k": 6, "d": 6, "r": 2}
    assert (tmp_path / "ham.code").exists()
    assert (tmp_path / "ham.lrc.json").exists()


def test_construct_hexacode_concat(capsys):
    code, out, _ = run_cli(capsys, "construct", "hexacode", "--concat")
    assert code == 0
    summary = json.loads(out)
    assert summary["lrc"]["n"] == 18 and summary["lrc"]["d"] == 8


def test_construct_macdonald_non_integral_exits_2(capsys):
    code, _, err = run_cli(capsys, "construct", "macdonald", "--m", "2", "--u", "1", "--t", "2")
    assert code == 2
    assert "integer" in err


def test_construct_missing_flags_exits_2(capsys):
    code, _, err = run_cli(capsys, "construct", "mds")
    assert code == 2
    assert "--n1" in err


def test_analyze_lrc_full(tmp_path, capsys):
    base = tmp_path / "ham"
    run_cli(capsys, "construct", "hamming4", "--t", "2", "--concat", "--output", str(base))
    code, out, _ = run_cli(capsys, "analyze", str(tmp_path / "ham.lrc.json"))
    assert code == 0
    report = json.loads(out)
    assert report["distance"]["d"] == 6
    assert report["distance"]["method"] == "group_rank"
    assert report["weights"]["A"][6] == 30 and report["weights"]["A"][8] == 15
    assert report["locality"]["ok"] is True
    assert report["bounds"]["verdicts"]["perfect"] is True
    assert report["group_subspace_dims"] == [2] * 5


def test_analyze_plain_gf4_code_default_flags(tmp_path, capsys):
    base = tmp_path / "hex"
    run_cli(capsys, "construct", "hexacode", "--output", str(base))
    code, out, _ = run_cli(capsys, "analyze", str(tmp_path / "hex.code"))
    assert code == 0
    report = json.loads(out)
    assert report["distance"]["d"] == 4
    assert report["weights"]["A"][4] == 45
    assert "bounds" not in report  # not applicable without locality over GF(4)


def test_analyze_bounds_on_gf4_code_rejected(tmp_path, capsys):
    base = tmp_path / "hex"
    run_cli(capsys, "construct", "hexacode", "--output", str(base))
    code, _, err = run_cli(capsys, "analyze", str(tmp_path / "hex.code"), "--bounds", "--r", "2")
    assert code == 2
    assert "binary" in err


def test_analyze_plain_code_locality_uncovered(tmp_path, capsys):
    # single-parity [3,2,2] code has no weight-<=2 dual word
    path = tmp_path / "parity.code"
    path.write_text("field=2 rows=2 cols=3 kind=generator\n1 0 1\n0 1 1\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--locality", "--r", "1")
    assert code == 0
    report = json.loads(out)
    assert report["locality"]["ok"] is False
    assert report["locality"]["uncovered"] == [0, 1, 2]


def test_analyze_budget_exhaustion_exits_3(tmp_path, capsys):
    base = tmp_path / "hex"
    run_cli(capsys, "construct", "hexacode", "--concat", "--output", str(base))
    code, out, _ = run_cli(
        capsys,
        "analyze",
        str(tmp_path / "hex.lrc.json"),
        "--distance",
        "--max-subsets", "3",
    )
    assert code == 3
    report = json.loads(out)
    assert "bracket" in report["distance"]


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--n", "51", "--k", "26", "--d", "8")
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"]["k_optimal_johnson"] is True
    assert report["denominators"]["omega_prime_improved"]["exact"] == "205"


def test_repair_command(tmp_path, capsys):
    base = tmp_path / "ham"
    run_cli(capsys, "construct", "hamming4", "--t", "2", "--concat", "--output", str(base))
    code, out, _ = run_cli(
        capsys,
        "repair", str(tmp_path / "ham.lrc.json"),
        "--trials", "100", "--random-t", "1", "--seed", "4",
    )
    assert code == 0
    report = json.loads(out)
    assert report["success_rate"] == 1.0
    assert report["local_fraction"] == 1.0
    assert report["mean_accessed"] == 2.0


def test_repair_requires_exactly_one_model(tmp_path, capsys):
    base = tmp_path / "ham"
    run_cli(capsys, "construct", "hamming4", "--t", "2", "--concat", "--output", str(base))
    code, _, err = run_cli(capsys, "repair", str(tmp_path / "ham.lrc.json"), "--trials", "5")
    assert code == 2


def test_reproduce_all_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "reproduce")
    assert code == 0
    assert "paper_discrepancy_noted" in out
    assert "mismatch" not in out


def test_reproduce_scope_and_json_determinism(capsys):
    code1, out1, _ = run_cli(capsys, "reproduce", "table1", "--json")
    code2, out2, _ = run_cli(capsys, "reproduce", "table1", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    items = json.loads(out1)["items"]
    assert [it["id"] for it in items] == [f"table1.row{i}" for i in range(1, 5)]
    assert all(it["status"] == "match" for it in items)


def test_reproduce_unknown_id_exits_2(capsys):
    code, _, err = run_cli(capsys, "reproduce", "example9.9")
    assert code == 2


def test_reproduce_mismatch_exits_1(capsys, monkeypatch):
    from gf4lrc import cli, reproduce

    fake = reproduce.ReproduceItem("fake", {"v": 1}, {"v": 2}, reproduce.MISMATCH)
    monkeypatch.setattr(cli.reproduce, "run", lambda *a, **kw: [fake])
    code, out, _ = run_cli(capsys, "reproduce")
    assert code == 1
    assert "mismatch" in out and "differs: v" in out


def test_analyze_trivial_lrc_singleton_optimal(tmp_path, capsys):
    base = tmp_path / "triv"
    run_cli(capsys, "construct", "mds", "--n1", "1", "--k1", "1", "--concat",
            "--output", str(base))
    code, out, _ = run_cli(capsys, "analyze", str(tmp_path / "triv.lrc.json"))
    assert code == 0
    report = json.loads(out)
    assert report["distance"]["d"] == 2
    assert report["bounds"]["verdicts"]["singleton_optimal"] is True


def test_construct_output_deterministic(tmp_path, capsys):
    a = tmp_path / "a"
    b = tmp_path / "b"
    run_cli(capsys, "construct", "hexacode", "--concat", "--output", str(a))
    run_cli(capsys, "construct", "hexacode", "--concat", "--output", str(b))
    assert (tmp_path / "a.lrc.json").read_text() == (tmp_path / "b.lrc.json").read_text()


def test_timestamps_flag(capsys):
    code, out, _ = run_cli(capsys, "construct", "hexacode", "--timestamps")
    assert code == 0
    assert "generated_at" in json.loads(out)


def test_construct_cyclic_and_ingest_roundtrip(tmp_path, capsys):
    base = tmp_path / "cyc"
    code, out, _ = run_cli(
        capsys,
        "construct", "cyclic4",
        "--n", "43", "--poly", "1 0 W 1 1 w 0 1",
        "--output", str(base),
        "--max-enum", "1024",  # leave d unverified at build time
    )
    assert code == 0
    assert json.loads(out)["outer"]["n"] == 43
    code2, out2, _ = run_cli(
        capsys, "construct", "ingest", "--file", str(tmp_path / "cyc.code"),
        "--max-enum", "1024",
    )
    assert code2 == 0
    assert json.loads(out2)["outer"]["k"] == 36
